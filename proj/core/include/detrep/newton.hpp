#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "detrep/linalg.hpp"
#include "detrep/poly.hpp"

namespace detrep {

/// Polynomial system with analytic Jacobian, flattened for fast evaluation.
class CompiledSystem {
 public:
  explicit CompiledSystem(const std::vector<Polynomial>& generators);

  int equations() const { return static_cast<int>(f_.size()); }
  int unknowns() const { return nvars_; }
  Vector value(const Vector& x) const;
  Matrix jacobian(const Vector& x) const;

 private:
  struct Term {
    double coef;
    std::vector<std::pair<int, int>> powers;  // (variable, exponent), exponent > 0
  };
  using Flat = std::vector<Term>;
  static Flat flatten(const Polynomial& p);
  static double eval(const Flat& f, const Vector& x);

  int nvars_;
  std::vector<Flat> f_;
  std::vector<std::vector<Flat>> jac_;
};

struct NewtonConfig {
  int starts = 100;
  int max_iter = 100;
  double radius = 1.0;            // starts uniform in [-radius, radius]^n
  std::uint64_t seed = 0;
  double tol_residual = 1e-10;    // ||F||_inf at convergence
  double dedupe = 1e-6;           // solutions closer than this coincide
  std::size_t stop_after = 0;     // 0: run every start
};

struct NewtonStats {
  int starts_run = 0;
  int converged = 0;
  int rejected = 0;  // converged but refused by the acceptance test
};

struct NewtonResult {
  std::vector<Vector> solutions;
  NewtonStats stats;
};

/// Damped Gauss-Newton from one start; returns the converged point, if any.
std::optional<Vector> newton_from(const CompiledSystem& sys, Vector x, int max_iter, double tol_residual);

/// Multistart driver. A converged point is kept only if `accept` returns true
/// and it is not within `dedupe` of an earlier solution.
NewtonResult solve_newton(const CompiledSystem& sys, const NewtonConfig& cfg,
                          const std::function<bool(const Vector&)>& accept);

}  // namespace detrep
