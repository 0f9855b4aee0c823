#include "detrep/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace detrep {

namespace {

using Coeffs = std::vector<double>;

// Remainders smaller than this (relative to the normalized dividend) end the
// Euclidean sequence; the last element is then the numerical gcd(p, p').
constexpr double kRemainderTol = 1e-12;

double max_abs(const Coeffs& c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

Coeffs normalized(Coeffs c) {
  const double m = max_abs(c);
  if (m > 0)
    for (double& v : c) v /= m;
  return c;
}

int deg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

double horner(const Coeffs& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Remainder of a / b. `scale` receives the magnitude of the largest quantity
// formed during the division, against which cancellation noise is measured.
Coeffs remainder(Coeffs a, const Coeffs& b, double& scale) {
  scale = max_abs(a);
  const int db = deg(b);
  while (deg(a) >= db && !a.empty()) {
    const double q = a.back() / b.back();
    const int shift = deg(a) - db;
    scale = std::max(scale, std::abs(q) * max_abs(b));
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(shift + k)] -= q * b[static_cast<std::size_t>(k)];
    a.pop_back();
  }
  return a;
}

class SturmChain {
 public:
  explicit SturmChain(const UnivariatePolynomial& p) {
    Coeffs p0 = normalized(p.coeffs());
    Coeffs p1 = normalized(UnivariatePolynomial(p0).derivative().coeffs());
    chain_.push_back(p0);
    chain_.push_back(p1);
    while (deg(chain_.back()) > 0) {
      double scale = 0.0;
      Coeffs r = remainder(chain_[chain_.size() - 2], chain_.back(), scale);
      while (!r.empty() && std::abs(r.back()) <= kRemainderTol * scale) r.pop_back();
      if (r.empty()) break;
      for (double& v : r) v = -v;
      chain_.push_back(normalized(std::move(r)));
    }
  }

  int variations(double x) const {
    int count = 0;
    int last = 0;
    for (const auto& c : chain_) {
      const double v = horner(c, x);
      const int s = (v > 0) - (v < 0);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  int variations_at_infinity(bool positive) const {
    int count = 0;
    int last = 0;
    for (const auto& c : chain_) {
      int s = c.back() > 0 ? 1 : -1;
      if (!positive && deg(c) % 2 == 1) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  int distinct_real() const { return variations_at_infinity(false) - variations_at_infinity(true); }
  int count(double a, double b) const { return variations(a) - variations(b); }
  // Degree of the numerical gcd(p, p').
  int gcd_degree() const { return deg(chain_.back()); }
  const Coeffs& gcd() const { return chain_.back(); }

 private:
  std::vector<Coeffs> chain_;
};

double cauchy_bound(const Coeffs& c) {
  double m = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, std::abs(c[k] / c.back()));
  return 1.0 + m;
}

void isolate(const SturmChain& chain, double a, double b, int n, std::vector<std::pair<double, double>>& out,
             int depth) {
  if (n <= 0) return;
  const double mid = 0.5 * (a + b);
  if (n == 1 || depth > 200 || mid <= a || mid >= b) {
    for (int i = 0; i < n; ++i) out.emplace_back(a, b);
    return;
  }
  const int left = chain.count(a, mid);
  isolate(chain, a, mid, left, out, depth + 1);
  isolate(chain, mid, b, n - left, out, depth + 1);
}

// Shrinks (a, b] around its single distinct root using the Sturm count.
double refine(const SturmChain& chain, double a, double b) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    if (chain.count(a, mid) >= 1) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return 0.5 * (a + b);
}

double newton_polish(const UnivariatePolynomial& p, double x, double lo, double hi) {
  const UnivariatePolynomial dp = p.derivative();
  double fx = p.evaluate(x);
  for (int it = 0; it < 8 && fx != 0.0; ++it) {
    const double d = dp.evaluate(x);
    if (d == 0.0) break;
    const double next = x - fx / d;
    if (!(next >= lo && next <= hi)) break;
    const double fn = p.evaluate(next);
    if (std::abs(fn) >= std::abs(fx)) break;
    x = next;
    fx = fn;
  }
  return x;
}

std::vector<RealRoot> cluster(std::vector<RealRoot> roots, double tol) {
  std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.value > b.value; });
  std::vector<RealRoot> out;
  for (const auto& r : roots) {
    if (!out.empty() && std::abs(out.back().value - r.value) <= tol * (1.0 + std::abs(r.value))) {
      auto& prev = out.back();
      const int m = prev.multiplicity + r.multiplicity;
      prev.value = (prev.value * prev.multiplicity + r.value * r.multiplicity) / m;
      prev.multiplicity = m;
    } else {
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace

int RealRoots::total_multiplicity() const {
  int s = 0;
  for (const auto& r : roots) s += r.multiplicity;
  return s;
}

int sturm_count(const UnivariatePolynomial& p, double a, double b) {
  if (p.degree() < 1) return 0;
  return SturmChain(p).count(a, b);
}

RealRoots real_roots(const UnivariatePolynomial& p, double tol_cluster) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("real_roots requires a nonconstant polynomial");

  RealRoots out;
  if (n == 1) {
    out.roots.push_back({-p[0] / p[1], 1});
    out.all_real = true;
    out.real_count = 1;
    return out;
  }

  const SturmChain chain(p);
  const int distinct = chain.distinct_real();
  const int g = chain.gcd_degree();
  const double bound = cauchy_bound(p.coeffs());

  std::vector<std::pair<double, double>> intervals;
  isolate(chain, -bound, bound, distinct, intervals, 0);

  std::vector<RealRoot> found;
  for (const auto& [a, b] : intervals) {
    double x = refine(chain, a, b);
    if (g == 0) x = newton_polish(p, x, a, b);
    found.push_back({x, 1});
  }
  out.real_count = distinct;

  if (distinct != n - g) {
    out.roots = cluster(std::move(found), 0.0);
    for (auto& r : out.roots) r.multiplicity = 1;
    out.all_real = false;
    return out;
  }

  if (g > 0) {
    // Multiple roots: the roots of gcd(p, p') carry the excess multiplicity.
    const RealRoots inner = real_roots(UnivariatePolynomial(chain.gcd()), tol_cluster);
    if (!inner.all_real || found.empty()) {
      out.roots = cluster(std::move(found), 0.0);
      out.all_real = false;
      return out;
    }
    for (const auto& r : inner.roots) {
      auto nearest = std::min_element(found.begin(), found.end(), [&](const RealRoot& a, const RealRoot& b) {
        return std::abs(a.value - r.value) < std::abs(b.value - r.value);
      });
      nearest->multiplicity += r.multiplicity;
      nearest->value = r.value;
    }
  }

  out.roots = cluster(std::move(found), tol_cluster);
  out.all_real = out.total_multiplicity() == n;
  return out;
}

ReciprocalEigs negative_reciprocal_eigs(const UnivariatePolynomial& p, int d) {
  if (p.degree() > d) throw std::invalid_argument("restriction degree exceeds representation size");
  if (std::abs(p[0] - 1.0) > 1e-9) throw std::invalid_argument("restriction must satisfy p(0) = 1");

  ReciprocalEigs out;
  if (p.degree() == 0) {
    out.values.assign(static_cast<std::size_t>(d), 0.0);
    out.all_real = true;
    return out;
  }
  const RealRoots roots = real_roots(p);
  out.real_count = roots.real_count;
  if (!roots.all_real) return out;
  for (const auto& r : roots.roots) {
    if (std::abs(r.value) <= 1e-14) throw ZeroRoot();
    for (int k = 0; k < r.multiplicity; ++k) out.values.push_back(-1.0 / r.value);
  }
  out.values.resize(static_cast<std::size_t>(d), 0.0);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  out.all_real = true;
  return out;
}

}  // namespace detrep
