#include "detrep/msdr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "detrep/gmd.hpp"

namespace detrep {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Found: return "Found";
    case SolveStatus::NoRealEigs: return "NoRealEigs";
    case SolveStatus::DiagInconsistent: return "DiagInconsistent";
    case SolveStatus::NoRealSolution: return "NoRealSolution";
    case SolveStatus::BudgetExhausted: return "BudgetExhausted";
    case SolveStatus::CompatibilityExhausted: return "CompatibilityExhausted";
  }
  return "?";
}

bool is_certified_impossible(SolveStatus s) {
  return s == SolveStatus::NoRealEigs || s == SolveStatus::DiagInconsistent || s == SolveStatus::NoRealSolution;
}

double representation_residual(const Polynomial& f, const DiagonalMatrix& d1, const std::vector<SymmetricMatrix>& a) {
  return max_coefficient_difference(expand_det(d1, a), f);
}

bool within_tolerance(const Polynomial& f, double residual, double tol_verify) {
  return residual <= tol_verify * std::max(1.0, f.max_abs_coefficient());
}

MSDR make_verified(const Polynomial& f, DiagonalMatrix d1, std::vector<SymmetricMatrix> a, double tol_verify) {
  MSDR rep{std::move(d1), std::move(a), 0.0, false};
  rep.residual = representation_residual(f, rep.D1, rep.A);
  rep.verified = within_tolerance(f, rep.residual, tol_verify);
  return rep;
}

void require_monic(const Polynomial& f) {
  const double c0 = f.coefficient(Exponents(static_cast<std::size_t>(f.nvars()), 0));
  if (std::abs(c0 - 1.0) > 1e-9)
    throw std::invalid_argument("polynomial must satisfy f(0) = 1 (got " + std::to_string(c0) + ")");
}

}  // namespace detrep
