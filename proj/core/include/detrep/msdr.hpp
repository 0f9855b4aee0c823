#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "detrep/linalg.hpp"
#include "detrep/poly.hpp"

namespace detrep {

/// f = det(I + x1 D1 + x2 A[0] + ... + xn A[n-2]).
struct MSDR {
  DiagonalMatrix D1;
  std::vector<SymmetricMatrix> A;
  double residual = 0.0;  // max |coefficient error| against the target
  bool verified = false;

  int order() const { return D1.order(); }
};

enum class SolveStatus {
  Found,
  NoRealEigs,
  DiagInconsistent,
  NoRealSolution,
  BudgetExhausted,
  CompatibilityExhausted,
};

const char* to_string(SolveStatus s);

/// Statuses that prove no size-d representation exists (as opposed to a
/// search that ran out of options).
bool is_certified_impossible(SolveStatus s);

enum class MultivariateRoute { Auto, Linear, Compatibility };

struct SolveConfig {
  std::uint64_t seed = 0;
  double tol_verify = 1e-8;   // relative to max(1, max |coeff f|)
  double tol_linear = 1e-8;   // relative to 1 + max |rhs|
  double tol_compat = 1e-6;   // relative to 1 + ||A||_F
  int newton_starts = 0;      // 0: 200 * (d choose 2)
  int max_iter = 100;
  bool closed_form = true;    // use the closed form for bivariate cubics
  MultivariateRoute route = MultivariateRoute::Auto;
};

struct SolveReport {
  SolveStatus status = SolveStatus::BudgetExhausted;
  std::vector<MSDR> representations;  // one per equivalence class
  std::vector<std::string> diagnostics;

  int classes() const { return static_cast<int>(representations.size()); }
};

/// max |coefficient| of expand_det(rep) - f.
double representation_residual(const Polynomial& f, const DiagonalMatrix& d1, const std::vector<SymmetricMatrix>& a);

/// residual <= tol_verify * max(1, max |coeff f|).
bool within_tolerance(const Polynomial& f, double residual, double tol_verify);

/// Fills residual and verified.
MSDR make_verified(const Polynomial& f, DiagonalMatrix d1, std::vector<SymmetricMatrix> a, double tol_verify);

/// Throws std::invalid_argument unless |f(0) - 1| <= 1e-9.
void require_monic(const Polynomial& f);

}  // namespace detrep
