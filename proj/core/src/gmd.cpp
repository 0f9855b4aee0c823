#include "detrep/gmd.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

namespace detrep {

KOutOfRange::KOutOfRange(int k, int d)
    : std::out_of_range("gmd needs 1 <= k <= d, got k=" + std::to_string(k) + ", d=" + std::to_string(d)) {}

UnknownCollision::UnknownCollision(const std::string& name)
    : std::invalid_argument("unknown '" + name + "' names two different entries") {}

namespace {

int order_of(const Matrix& m) { return static_cast<int>(m.rows()); }
int order_of(const SymbolicMatrix& m) { return m.order(); }

// Determinant by expansion over column subsets, valid in any commutative ring.
Polynomial symbolic_det(const std::vector<std::vector<const Polynomial*>>& m, int nunknowns) {
  const int k = static_cast<int>(m.size());
  const unsigned full = (1u << k) - 1;
  std::vector<Polynomial> dp(full + 1, Polynomial(nunknowns));
  std::vector<bool> reached(full + 1, false);
  dp[0] = Polynomial::constant(nunknowns, 1.0);
  reached[0] = true;
  for (unsigned mask = 0; mask < full; ++mask) {
    if (!reached[mask] || dp[mask].is_zero()) continue;
    const int row = std::popcount(mask);
    for (int c = 0; c < k; ++c) {
      if (mask & (1u << c)) continue;
      const Polynomial& entry = *m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
      if (entry.is_zero()) continue;
      const bool odd = std::popcount(mask >> (c + 1)) % 2 == 1;
      Polynomial term = dp[mask] * entry;
      const unsigned next = mask | (1u << c);
      dp[next] = odd ? dp[next] - term : dp[next] + term;
      reached[next] = true;
    }
  }
  return dp[full];
}

template <class M>
std::vector<int> multiset_of(const std::vector<GmdSlot<M>>& t, int& d) {
  if (t.empty()) throw KOutOfRange(0, 0);
  d = order_of(t.front().matrix);
  std::vector<int> v;
  for (std::size_t s = 0; s < t.size(); ++s) {
    if (order_of(t[s].matrix) != d) throw OrderMismatch();
    if (t[s].multiplicity < 0) throw std::invalid_argument("negative multiplicity");
    v.insert(v.end(), static_cast<std::size_t>(t[s].multiplicity), static_cast<int>(s));
  }
  const int k = static_cast<int>(v.size());
  if (k < 1 || k > d) throw KOutOfRange(k, d);
  return v;
}

// Calls visit(alpha, sigma) for every increasing alpha of size k and every
// distinct arrangement sigma of the multiset v.
template <class Visit>
void enumerate(int d, const std::vector<int>& v, Visit visit) {
  const int k = static_cast<int>(v.size());
  std::vector<int> alpha(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) alpha[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<int> sigma = v;
    do {
      visit(alpha, sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    int i = k - 1;
    while (i >= 0 && alpha[static_cast<std::size_t>(i)] == d - k + i) --i;
    if (i < 0) break;
    ++alpha[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) alpha[static_cast<std::size_t>(j)] = alpha[static_cast<std::size_t>(j - 1)] + 1;
  }
}

void enumerate_exponents(int n, int max_total, Exponents& cur, int pos, int used,
                         std::vector<Exponents>& out) {
  if (pos == n) {
    if (used > 0) out.push_back(cur);
    return;
  }
  for (int e = 0; used + e <= max_total; ++e) {
    cur[static_cast<std::size_t>(pos)] = e;
    enumerate_exponents(n, max_total, cur, pos + 1, used + e, out);
  }
  cur[static_cast<std::size_t>(pos)] = 0;
}

template <class M>
std::vector<GmdSlot<M>> tuple_for(const std::vector<M>& a, const Exponents& e) {
  std::vector<GmdSlot<M>> t;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (e[i] > 0) t.push_back({a[i], e[i]});
  return t;
}

}  // namespace

double gmd(const NumericTuple& t) {
  int d = 0;
  const std::vector<int> v = multiset_of(t, d);
  const int k = static_cast<int>(v.size());
  Matrix minor(k, k);
  double total = 0.0;
  enumerate(d, v, [&](const std::vector<int>& alpha, const std::vector<int>& sigma) {
    for (int i = 0; i < k; ++i) {
      const Matrix& src = t[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])].matrix;
      for (int j = 0; j < k; ++j)
        minor(i, j) = src(alpha[static_cast<std::size_t>(i)], alpha[static_cast<std::size_t>(j)]);
    }
    total += determinant(minor);
  });
  return total;
}

Polynomial gmd(const SymbolicTuple& t, int nunknowns) {
  int d = 0;
  const std::vector<int> v = multiset_of(t, d);
  const auto k = v.size();
  std::vector<std::vector<const Polynomial*>> minor(k, std::vector<const Polynomial*>(k));
  Polynomial total(nunknowns);
  enumerate(d, v, [&](const std::vector<int>& alpha, const std::vector<int>& sigma) {
    for (std::size_t i = 0; i < k; ++i) {
      const SymbolicMatrix& src = t[static_cast<std::size_t>(sigma[i])].matrix;
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = &src(alpha[i], alpha[j]);
    }
    total = total + symbolic_det(minor, nunknowns);
  });
  return total;
}

double coefficient_of(const std::vector<Matrix>& a, const Exponents& e) {
  if (e.size() != a.size()) throw std::invalid_argument("exponent length differs from matrix count");
  if (total_degree(e) == 0) return 1.0;
  const int d = a.empty() ? 0 : order_of(a.front());
  if (total_degree(e) > d) return 0.0;
  return gmd(tuple_for(a, e));
}

Polynomial coefficient_of(const std::vector<SymbolicMatrix>& a, const Exponents& e, int nunknowns) {
  if (e.size() != a.size()) throw std::invalid_argument("exponent length differs from matrix count");
  if (total_degree(e) == 0) return Polynomial::constant(nunknowns, 1.0);
  const int d = a.empty() ? 0 : a.front().order();
  if (total_degree(e) > d) return Polynomial(nunknowns);
  return gmd(tuple_for(a, e), nunknowns);
}

Polynomial expand_det(const std::vector<Matrix>& a) {
  if (a.empty()) throw std::invalid_argument("expand_det needs at least one matrix");
  const int n = static_cast<int>(a.size());
  const int d = order_of(a.front());
  for (const auto& m : a)
    if (m.rows() != d || m.cols() != d) throw OrderMismatch();

  std::vector<Exponents> monomials;
  Exponents cur(static_cast<std::size_t>(n), 0);
  enumerate_exponents(n, d, cur, 0, 0, monomials);

  Polynomial::TermMap terms;
  terms.emplace(Exponents(static_cast<std::size_t>(n), 0), 1.0);
  for (const auto& e : monomials) {
    const double c = gmd(tuple_for(a, e));
    if (c != 0.0) terms.emplace(e, c);
  }
  return Polynomial(n, std::move(terms));
}

Polynomial expand_det(const std::vector<SymmetricMatrix>& a) {
  std::vector<Matrix> dense;
  dense.reserve(a.size());
  for (const auto& m : a) dense.push_back(m.dense());
  return expand_det(dense);
}

Polynomial expand_det(const DiagonalMatrix& d1, const std::vector<SymmetricMatrix>& a) {
  std::vector<Matrix> dense{d1.dense()};
  for (const auto& m : a) dense.push_back(m.dense());
  return expand_det(dense);
}

double principal_minor_sum(const Matrix& a, int k) {
  const int d = static_cast<int>(a.rows());
  if (k == 0) return 1.0;
  if (k < 0 || k > d) throw KOutOfRange(k, d);
  double total = 0.0;
  std::vector<bool> pick(static_cast<std::size_t>(d), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> idx;
    for (int i = 0; i < d; ++i)
      if (pick[static_cast<std::size_t>(i)]) idx.push_back(i);
    Matrix m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m(i, j) = a(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    total += determinant(m);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

MatrixTemplate::MatrixTemplate(int order)
    : order_(order), entries_(static_cast<std::size_t>(order * order), Entry(0.0)) {}

MatrixTemplate MatrixTemplate::from(const SymmetricMatrix& m) {
  MatrixTemplate t(m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = i; j < m.order(); ++j) t.set(i, j, m(i, j));
  return t;
}

MatrixTemplate MatrixTemplate::from(const DiagonalMatrix& m) {
  MatrixTemplate t(m.order());
  for (int i = 0; i < m.order(); ++i) t.set(i, i, m.diag[static_cast<std::size_t>(i)]);
  return t;
}

void MatrixTemplate::set(int i, int j, Entry e) {
  entries_[static_cast<std::size_t>(i * order_ + j)] = e;
  entries_[static_cast<std::size_t>(j * order_ + i)] = std::move(e);
}

PolynomialSystem coefficient_system(const DiagonalMatrix& d1, const std::vector<MatrixTemplate>& templates,
                                    const Polynomial& target, const std::vector<Exponents>& monomials) {
  const int n = 1 + static_cast<int>(templates.size());
  if (target.nvars() != n) throw NvarsMismatch(target.nvars(), n);
  const int d = d1.order();
  for (const auto& t : templates)
    if (t.order() != d) throw OrderMismatch();

  PolynomialSystem sys;
  std::map<std::string, std::tuple<std::size_t, int, int>> seen;
  for (std::size_t t = 0; t < templates.size(); ++t) {
    for (int i = 0; i < d; ++i) {
      for (int j = i; j < d; ++j) {
        const auto* name = std::get_if<std::string>(&templates[t](i, j));
        if (!name) continue;
        const auto where = std::make_tuple(t, i, j);
        auto [it, inserted] = seen.emplace(*name, where);
        if (inserted) {
          sys.unknowns.push_back(*name);
        } else if (it->second != where) {
          throw UnknownCollision(*name);
        }
      }
    }
  }
  const int nu = static_cast<int>(sys.unknowns.size());
  auto index_of = [&](const std::string& name) {
    return static_cast<int>(std::find(sys.unknowns.begin(), sys.unknowns.end(), name) - sys.unknowns.begin());
  };

  std::vector<SymbolicMatrix> mats;
  SymbolicMatrix m1(d, Polynomial(nu));
  for (int i = 0; i < d; ++i) m1(i, i) = Polynomial::constant(nu, d1.diag[static_cast<std::size_t>(i)]);
  mats.push_back(std::move(m1));
  for (const auto& t : templates) {
    SymbolicMatrix m(d, Polynomial(nu));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const auto& entry = t(i, j);
        if (const auto* name = std::get_if<std::string>(&entry)) {
          m(i, j) = Polynomial::variable(nu, index_of(*name) + 1);
        } else {
          m(i, j) = Polynomial::constant(nu, std::get<double>(entry));
        }
      }
    }
    mats.push_back(std::move(m));
  }

  for (const auto& e : monomials) {
    if (static_cast<int>(e.size()) != n) throw std::invalid_argument("monomial length differs from variable count");
    sys.monomials.push_back(e);
    sys.generators.push_back(coefficient_of(mats, e, nu) - Polynomial::constant(nu, target.coefficient(e)));
  }
  return sys;
}

}  // namespace detrep
