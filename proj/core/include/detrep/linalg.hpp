#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace detrep {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense real symmetric matrix. Writes go to both (i,j) and (j,i), so the
/// stored entries are exactly symmetric.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int order = 0);

  /// Symmetrizes `m` after checking |m - m^T| <= tol entrywise.
  static SymmetricMatrix from_dense(const Matrix& m, double tol = 1e-12);
  static SymmetricMatrix identity(int order);
  static SymmetricMatrix diagonal(std::span<const double> diag);
  static SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int order() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  void set(int i, int j, double v);
  const Matrix& dense() const { return m_; }
  std::vector<double> diagonal_entries() const;

  friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    return a.m_ == b.m_;
  }

 private:
  Matrix m_;
};

/// Diagonal matrix diag(r1, ..., rd).
struct DiagonalMatrix {
  std::vector<double> diag;

  int order() const { return static_cast<int>(diag.size()); }
  Matrix dense() const;
  SymmetricMatrix symmetric() const;
  friend bool operator==(const DiagonalMatrix&, const DiagonalMatrix&) = default;
};

/// Eigenvalues in descending order with matching orthonormal eigenvector
/// columns. In each column the entry of largest magnitude is positive (ties:
/// lowest row index).
struct EigenDecomposition {
  std::vector<double> values;
  Matrix vectors;
};

/// Cyclic Jacobi iteration until the off-diagonal Frobenius norm falls to
/// 1e-12 (scaled by max(1, ||A||_F)).
EigenDecomposition sym_eigen(const SymmetricMatrix& a);

/// LU determinant with partial pivoting.
double determinant(const Matrix& m);

/// k-th elementary symmetric function; S_0 = 1.
double elementary_symmetric(std::span<const double> values, int k);

enum class LinearSolveKind { Unique, Parameterized, Inconsistent };

struct LinearSolveResult {
  LinearSolveKind kind = LinearSolveKind::Inconsistent;
  Vector particular;                // minimum-norm least-squares solution
  std::vector<Vector> kernel_basis; // orthonormal; empty when Unique
  double residual = 0.0;            // ||G y - z||_inf at `particular`
  int rank = 0;
};

/// Rank-revealing least-squares solve of G y = z (G may be rectangular).
/// The system is Inconsistent when the least-squares residual exceeds
/// tol_linear (absolute, infinity norm).
LinearSolveResult solve_linear(const Matrix& g, const Vector& z, double tol_linear);

/// Random orthogonal matrix from the QR factorization of a Gaussian matrix.
template <class Rng>
Matrix random_orthogonal(int d, Rng& rng);

const char* to_string(LinearSolveKind kind);

}  // namespace detrep

#include <random>

namespace detrep {

template <class Rng>
Matrix random_orthogonal(int d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = normal(rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

}  // namespace detrep
