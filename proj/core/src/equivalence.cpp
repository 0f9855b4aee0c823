#include "detrep/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace detrep {

namespace {

constexpr double kLexTol = 1e-8;

std::vector<double> flatten(const MSDR& rep) {
  std::vector<double> out;
  for (const auto& a : rep.A)
    for (int i = 0; i < a.order(); ++i)
      for (int j = 0; j < a.order(); ++j) out.push_back(a(i, j));
  return out;
}

// -1, 0, 1 for a < b, a ~ b, a > b.
int lex_compare(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (std::abs(a[i] - b[i]) <= kLexTol) continue;
    return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

double max_entry_distance(const MSDR& a, const MSDR& b) {
  if (a.A.size() != b.A.size()) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t k = 0; k < a.A.size(); ++k) {
    if (a.A[k].order() != b.A[k].order()) return std::numeric_limits<double>::infinity();
    m = std::max(m, (a.A[k].dense() - b.A[k].dense()).cwiseAbs().maxCoeff());
  }
  return m;
}

}  // namespace

Matrix SignatureMatrix::dense() const {
  Matrix m = Matrix::Zero(order(), order());
  for (int i = 0; i < order(); ++i) m(i, i) = signs[static_cast<std::size_t>(i)];
  return m;
}

std::vector<SignatureMatrix> SignatureMatrix::all(int d) {
  std::vector<SignatureMatrix> out;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    SignatureMatrix s;
    for (int i = 0; i < d; ++i) s.signs.push_back(mask & (1u << i) ? -1 : 1);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SignatureMatrix> SignatureMatrix::with_positive_first(int d) {
  std::vector<SignatureMatrix> out;
  for (auto& s : all(d))
    if (d == 0 || s.signs.front() == 1) out.push_back(std::move(s));
  return out;
}

SymmetricMatrix conjugate(const SymmetricMatrix& a, const SignatureMatrix& s) {
  if (a.order() != s.order()) throw std::invalid_argument("signature order differs from matrix order");
  SymmetricMatrix out = a;
  for (int i = 0; i < a.order(); ++i)
    for (int j = i + 1; j < a.order(); ++j)
      out.set(i, j, a(i, j) * s.signs[static_cast<std::size_t>(i)] * s.signs[static_cast<std::size_t>(j)]);
  return out;
}

MSDR conjugate(const MSDR& rep, const SignatureMatrix& s) {
  MSDR out = rep;
  for (auto& a : out.A) a = conjugate(a, s);
  return out;
}

std::vector<SymmetricMatrix> orbit(const SymmetricMatrix& a) {
  std::vector<SymmetricMatrix> out;
  for (const auto& s : SignatureMatrix::all(a.order())) {
    SymmetricMatrix c = conjugate(a, s);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Matrix> transition_orbit(const Matrix& v) {
  std::vector<Matrix> out;
  for (const auto& s : SignatureMatrix::all(static_cast<int>(v.rows()))) {
    Matrix c = s.dense() * v;
    if (std::none_of(out.begin(), out.end(), [&](const Matrix& m) { return m == c; })) out.push_back(std::move(c));
  }
  return out;
}

MSDR canonicalize(const MSDR& rep) {
  MSDR best = rep;
  std::vector<double> best_key = flatten(rep);
  for (const auto& s : SignatureMatrix::with_positive_first(rep.order())) {
    MSDR c = conjugate(rep, s);
    std::vector<double> key = flatten(c);
    if (lex_compare(key, best_key) > 0) {
      best = std::move(c);
      best_key = std::move(key);
    }
  }
  return best;
}

double orbit_distance(const MSDR& a, const MSDR& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : SignatureMatrix::with_positive_first(b.order()))
    best = std::min(best, max_entry_distance(a, conjugate(b, s)));
  return best;
}

std::vector<std::vector<MSDR>> classes(const std::vector<MSDR>& reps, double tol) {
  std::vector<std::vector<MSDR>> out;
  for (const auto& r : reps) {
    auto it = std::find_if(out.begin(), out.end(), [&](const std::vector<MSDR>& cls) {
      return orbit_distance(cls.front(), r) <= tol;
    });
    if (it == out.end()) {
      out.push_back({r});
    } else {
      it->push_back(r);
    }
  }
  return out;
}

std::vector<MSDR> class_representatives(const std::vector<MSDR>& reps, double tol) {
  std::vector<MSDR> out;
  for (const auto& cls : classes(reps, tol)) {
    auto best = std::min_element(cls.begin(), cls.end(),
                                 [](const MSDR& a, const MSDR& b) { return a.residual < b.residual; });
    out.push_back(canonicalize(*best));
  }
  std::sort(out.begin(), out.end(),
            [](const MSDR& a, const MSDR& b) { return lex_compare(flatten(a), flatten(b)) > 0; });
  return out;
}

Transition recover_transition(const SymmetricMatrix& a) {
  EigenDecomposition e = sym_eigen(a);
  return {DiagonalMatrix{std::move(e.values)}, std::move(e.vectors)};
}

double diagonal_defect(const Matrix& w, const DiagonalMatrix& d) {
  const Matrix dd = d.dense();
  return (w * dd * w.transpose() - dd).norm();
}

NearestSignature nearest_signature(const Matrix& w) {
  NearestSignature best;
  best.distance = std::numeric_limits<double>::infinity();
  for (auto& s : SignatureMatrix::all(static_cast<int>(w.rows()))) {
    const double dist = (w - s.dense()).cwiseAbs().maxCoeff();
    if (dist < best.distance) best = {std::move(s), dist};
  }
  return best;
}

}  // namespace detrep
