#include "detrep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace detrep {

SymmetricMatrix::SymmetricMatrix(int order) : m_(Matrix::Zero(order, order)) {
  if (order < 0) throw std::invalid_argument("negative matrix order");
}

SymmetricMatrix SymmetricMatrix::from_dense(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("symmetric matrix must be square");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("matrix is not symmetric");
  SymmetricMatrix s(static_cast<int>(m.rows()));
  s.m_ = 0.5 * (m + m.transpose());
  return s;
}

SymmetricMatrix SymmetricMatrix::identity(int order) {
  SymmetricMatrix s(order);
  s.m_.setIdentity();
  return s;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> diag) {
  SymmetricMatrix s(static_cast<int>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) s.m_(i, i) = diag[i];
  return s;
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const auto d = static_cast<int>(rows.size());
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[i].size()) != d) throw std::invalid_argument("matrix is not square");
    for (int j = 0; j < d; ++j) m(i, j) = rows[i][j];
  }
  return from_dense(m, 0.0);
}

void SymmetricMatrix::set(int i, int j, double v) {
  m_(i, j) = v;
  m_(j, i) = v;
}

std::vector<double> SymmetricMatrix::diagonal_entries() const {
  std::vector<double> d(static_cast<std::size_t>(order()));
  for (int i = 0; i < order(); ++i) d[i] = m_(i, i);
  return d;
}

Matrix DiagonalMatrix::dense() const {
  Matrix m = Matrix::Zero(order(), order());
  for (int i = 0; i < order(); ++i) m(i, i) = diag[i];
  return m;
}

SymmetricMatrix DiagonalMatrix::symmetric() const { return SymmetricMatrix::diagonal(diag); }

EigenDecomposition sym_eigen(const SymmetricMatrix& a) {
  const int d = a.order();
  Matrix m = a.dense();
  Matrix v = Matrix::Identity(d, d);
  const double threshold = 1e-12 * std::max(1.0, m.norm());

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) s += 2.0 * m(i, j) * m(i, j);
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > threshold; ++sweep) {
    for (int p = 0; p < d; ++p) {
      for (int q = p + 1; q < d; ++q) {
        if (m(p, q) == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * m(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < d; ++k) {
          const double mkp = m(k, p);
          const double mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < d; ++k) {
          const double mpk = m(p, k);
          const double mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
        for (int k = 0; k < d; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return m(x, x) > m(y, y); });

  EigenDecomposition out;
  out.values.resize(static_cast<std::size_t>(d));
  out.vectors.resize(d, d);
  for (int c = 0; c < d; ++c) {
    const int src = order[static_cast<std::size_t>(c)];
    out.values[static_cast<std::size_t>(c)] = m(src, src);
    Vector col = v.col(src);
    int arg = 0;
    for (int r = 1; r < d; ++r)
      if (std::abs(col(r)) > std::abs(col(arg))) arg = r;
    if (col(arg) < 0) col = -col;
    out.vectors.col(c) = col;
  }
  return out;
}

double determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const auto n = m.rows();
  if (n == 0) return 1.0;
  Matrix a = m;
  double det = 1.0;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    for (Eigen::Index r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (a(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      if (f != 0.0) a.row(r).tail(n - col) -= f * a.row(col).tail(n - col);
    }
  }
  return det;
}

double elementary_symmetric(std::span<const double> values, int k) {
  const int n = static_cast<int>(values.size());
  if (k < 0 || k > n) throw std::out_of_range("elementary symmetric index out of range");
  // e[j] holds S_j of the prefix processed so far.
  std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
  e[0] = 1.0;
  for (double x : values)
    for (int j = k; j >= 1; --j) e[j] += x * e[j - 1];
  return e[k];
}

LinearSolveResult solve_linear(const Matrix& g, const Vector& z, double tol_linear) {
  if (g.rows() != z.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
  LinearSolveResult out;
  const auto ncols = g.cols();
  if (ncols == 0) {
    out.particular = Vector(0);
    out.residual = z.size() ? z.cwiseAbs().maxCoeff() : 0.0;
    out.kind = out.residual <= tol_linear ? LinearSolveKind::Unique : LinearSolveKind::Inconsistent;
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double cutoff = 1e-11 * std::max(smax, 1e-300);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  out.rank = rank;

  Vector y = Vector::Zero(ncols);
  for (int i = 0; i < rank; ++i)
    y += (svd.matrixU().col(i).dot(z) / sv(i)) * svd.matrixV().col(i);
  out.particular = y;
  out.residual = g.rows() ? (g * y - z).cwiseAbs().maxCoeff() : 0.0;
  for (Eigen::Index c = rank; c < ncols; ++c) out.kernel_basis.emplace_back(svd.matrixV().col(c));

  if (out.residual > tol_linear) {
    out.kind = LinearSolveKind::Inconsistent;
  } else if (out.kernel_basis.empty()) {
    out.kind = LinearSolveKind::Unique;
  } else {
    out.kind = LinearSolveKind::Parameterized;
  }
  return out;
}

const char* to_string(LinearSolveKind kind) {
  switch (kind) {
    case LinearSolveKind::Unique: return "Unique";
    case LinearSolveKind::Parameterized: return "Parameterized";
    case LinearSolveKind::Inconsistent: return "Inconsistent";
  }
  return "?";
}

}  // namespace detrep
