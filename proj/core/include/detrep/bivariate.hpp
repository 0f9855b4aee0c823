#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "detrep/gmd.hpp"
#include "detrep/linalg.hpp"
#include "detrep/msdr.hpp"
#include "detrep/poly.hpp"

namespace detrep {

struct EigenStep {
  bool ok = false;
  int failed_axis = 0;  // 1 or 2 when !ok
  DiagonalMatrix D1;
  std::vector<double> eigs2;
};

/// Eigenvalues of the x1 and x2 coefficient matrices from the axis
/// restrictions of a bivariate f.
EigenStep eigen_step(const Polynomial& f, int d);

/// G[j][i] = S_j(r without r_i), j = 0..d-1. det G = prod_{i<j} (r_i - r_j).
Matrix diagonal_system_matrix(const DiagonalMatrix& d1);

/// Coefficients of x2, x1 x2, ..., x1^(d-1) x2.
Vector diagonal_rhs(const Polynomial& f, int d);

/// Solves G y = z for the diagonal of A12; tol_linear is scaled by 1 + max|z|.
LinearSolveResult diagonal_step(const Polynomial& f, const DiagonalMatrix& d1, double tol_linear);

/// x1^a x2^b with 0 <= a <= d-2, 2 <= b <= d, a + b <= d, ordered by b then a.
std::vector<Exponents> offdiag_monomials(int d);

/// Unknown name of entry (i, j), i < j, zero-based: "u12" for (0, 1).
std::string offdiag_name(int i, int j);

/// Generators in the (d choose 2) off-diagonal unknowns of A12, ordered
/// (0,1), (0,2), ..., (1,2), ... as in the upper triangle read by rows.
PolynomialSystem offdiag_system(const Polynomial& f, const DiagonalMatrix& d1, const std::vector<double>& diag_a);

/// Symmetric matrix with the given diagonal and upper-triangle entries.
SymmetricMatrix assemble(const std::vector<double>& diag, const Vector& offdiag);

/// The d = 3 generators written through the squares s = (u12^2, u13^2, u23^2):
/// the (0,2) and (1,2) generators read M s = rhs and the (0,3) generator
/// reads c0 + c . s + t u12 u13 u23.
struct CubicSquares {
  Matrix M;    // 2 x 3
  Vector rhs;  // 2
  double c0 = 0.0;
  Vector c;    // 3
  double t = 0.0;
};

/// std::nullopt when the generators do not have that shape.
std::optional<CubicSquares> cubic_squares(const PolynomialSystem& sys);

/// t^2 prod_i (p_i + k g_i) - (c0 + c.(p + k g))^2, the equation for k along
/// the line s = p + k g of solutions of M s = rhs.
UnivariatePolynomial cubic_in_k(const CubicSquares& cs, const Vector& particular, const Vector& gamma);

struct ClosedForm {
  bool applicable = false;       // false: generators degenerate, use Newton
  LinearSolveResult squares;     // M s = rhs
  UnivariatePolynomial cubic;    // leading coefficient positive
  std::vector<double> k_roots;   // real roots, descending
  std::vector<Vector> solutions; // accepted (u12, u13, u23)
  std::vector<std::string> notes;
};

/// Enumerates every real zero of the d = 3 off-diagonal system through the
/// cubic in k; `accept` performs the full verification of a candidate.
ClosedForm solve_cubic_closed_form(const PolynomialSystem& sys, double tol_linear, double tol_residual,
                                   const std::function<bool(const Vector&)>& accept);

/// Algorithm driver for bivariate f (nvars 2) of degree d >= 1 with f(0) = 1.
SolveReport solve_bivariate(const Polynomial& f, const SolveConfig& cfg = {});

}  // namespace detrep
