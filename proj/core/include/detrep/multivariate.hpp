#pragma once

#include <stdexcept>
#include <vector>

#include "detrep/equivalence.hpp"
#include "detrep/linalg.hpp"
#include "detrep/msdr.hpp"
#include "detrep/poly.hpp"

namespace detrep {

class EigOrderMismatch : public std::runtime_error {
 public:
  EigOrderMismatch() : std::runtime_error("slice eigenvalues disagree") {}
};

struct Compatibility {
  double residual = 0.0;
  SignatureMatrix signature;  // the S minimizing ||A1j V1k S - V1k S Akj||_F
};

/// Residual of A1j V1k = V1k Akj with A1k = V1k Dk V1k^T, minimized over the
/// signature ambiguity of V1k. Throws EigOrderMismatch when the eigenvalues of
/// A1k differ from dk by more than 1e-6.
Compatibility compatibility_check(const SymmetricMatrix& a1j, const SymmetricMatrix& a1k, const SymmetricMatrix& akj,
                                  const DiagonalMatrix& dk);

/// f with x_{m+1}, ..., x_n set to zero, as a polynomial in x1..xm.
Polynomial restrict_leading(const Polynomial& f, int m);

struct Extension {
  LinearSolveResult linear;
  Matrix H;
  Vector z;
  std::vector<SymmetricMatrix> candidates;  // complete A1m (empty if Inconsistent)
};

/// Explicit d = 3 system H (o, p, q) = z for the off-diagonal of A13, with
/// A12 = [[a,d,e],[d,b,f],[e,f,c]] and A13 = [[l,o,p],[o,m,q],[p,q,n]].
/// A Parameterized solution is resolved against the x3^2 and x3^3 monomials.
Extension trivariate_offdiag(const DiagonalMatrix& d1, const SymmetricMatrix& a12,
                             const std::vector<double>& diag_a13, const Polynomial& f, const SolveConfig& cfg);

/// Off-diagonal of A1m from the coefficients of x_m mu, mu a monomial in
/// x1..x_{m-1} of degree 1..d-1 other than a pure power of x1 (linear in the
/// unknowns). `fixed` holds A12..A1,m-1. Any remaining parameters are
/// eliminated against the monomials of degree >= 2 in x_m.
Extension extend_cubic(const DiagonalMatrix& d1, const std::vector<SymmetricMatrix>& fixed,
                       const std::vector<double>& diag_am, const Polynomial& f, int m, const SolveConfig& cfg);

/// Driver for n >= 3 variables (d <= 3 by linear extension, d = 4 by slice
/// compatibility, see MultivariateRoute).
SolveReport solve_multivariate(const Polynomial& f, const SolveConfig& cfg = {});

/// Dispatches on the variable count.
SolveReport solve(const Polynomial& f, const SolveConfig& cfg = {});

}  // namespace detrep
