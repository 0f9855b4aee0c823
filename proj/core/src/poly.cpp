#include "detrep/poly.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string>

namespace detrep {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

NvarsMismatch::NvarsMismatch(int lhs, int rhs)
    : std::invalid_argument("polynomial variable count mismatch: " + std::to_string(lhs) +
                            " vs " + std::to_string(rhs)) {}

namespace {

void check_same_nvars(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw NvarsMismatch(a.nvars(), b.nvars());
}

// Shortest fixed-notation decimal that parses back to the same double.
std::string format_fixed(double v) {
  std::string buf(1200, '\0');
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed);
  if (ec != std::errc{}) throw std::runtime_error("cannot format coefficient");
  buf.resize(static_cast<std::size_t>(end - buf.data()));
  return buf;
}

}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("polynomial variable count must be nonnegative");
}

Polynomial::Polynomial(int nvars, TermMap terms) : nvars_(nvars), terms_(std::move(terms)) {
  if (nvars < 0) throw std::invalid_argument("polynomial variable count must be nonnegative");
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(e.size()) != nvars_)
      throw std::invalid_argument("exponent vector length does not match variable count");
    if (std::any_of(e.begin(), e.end(), [](int k) { return k < 0; }))
      throw std::invalid_argument("negative exponent");
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite coefficient");
  }
  normalize();
}

Polynomial Polynomial::constant(int nvars, double c) {
  TermMap t;
  t.emplace(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return Polynomial(nvars, std::move(t));
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 1 || index > nvars) throw std::out_of_range("variable index out of range");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index - 1)] = 1;
  return monomial(std::move(e), 1.0);
}

Polynomial Polynomial::monomial(Exponents exps, double c) {
  const int n = static_cast<int>(exps.size());
  TermMap t;
  t.emplace(std::move(exps), c);
  return Polynomial(n, std::move(t));
}

void Polynomial::normalize() {
  const double cutoff = kDropThreshold * max_abs_coefficient();
  std::erase_if(terms_, [cutoff](const auto& kv) {
    return kv.second == 0.0 || std::abs(kv.second) <= cutoff;
  });
}

double Polynomial::coefficient(const Exponents& exps) const {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("exponent vector length does not match variable count");
  auto it = terms_.find(exps);
  return it == terms_.end() ? 0.0 : it->second;
}

int Polynomial::degree() const {
  // The map is graded, so the last key has the largest total degree.
  return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

double Polynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) term *= point[v];
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::derivative(int index) const {
  if (index < 1 || index > nvars_) throw std::out_of_range("variable index out of range");
  const auto v = static_cast<std::size_t>(index - 1);
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents d = e;
    d[v] -= 1;
    out[d] += c * e[v];
  }
  return Polynomial(nvars_, std::move(out));
}

Polynomial Polynomial::scaled(double c) const {
  TermMap out;
  for (const auto& [e, v] : terms_) out.emplace(e, v * c);
  return Polynomial(nvars_, std::move(out));
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  Polynomial result = constant(nvars_, 1.0);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_same_nvars(a, b);
  Polynomial::TermMap out = a.terms_;
  for (const auto& [e, c] : b.terms_) out[e] += c;
  return Polynomial(a.nvars_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  check_same_nvars(a, b);
  Polynomial::TermMap out = a.terms_;
  for (const auto& [e, c] : b.terms_) out[e] -= c;
  return Polynomial(a.nvars_, std::move(out));
}

Polynomial operator-(const Polynomial& a) { return a.scaled(-1.0); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_nvars(a, b);
  Polynomial::TermMap out;
  Exponents e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out[e] += ca * cb;
    }
  }
  return Polynomial(a.nvars_, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool is_const = total_degree(e) == 0;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    const double mag = std::abs(c);
    bool need_star = false;
    if (is_const || mag != 1.0) {
      s += format_fixed(mag);
      need_star = true;
    }
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (need_star) s += "*";
      s += "x" + std::to_string(v + 1);
      if (e[v] > 1) s += "^" + std::to_string(e[v]);
      need_star = true;
    }
  }
  return s;
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

int UnivariatePolynomial::degree() const {
  return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1;
}

double UnivariatePolynomial::operator[](int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(power)];
}

double UnivariatePolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (coeffs_.size() <= 1) return UnivariatePolynomial{};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::reversed(int d) const {
  if (d < degree()) throw std::invalid_argument("reversal degree below polynomial degree");
  std::vector<double> r(static_cast<std::size_t>(d) + 1, 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r[static_cast<std::size_t>(d) - k] = coeffs_[k];
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial restrict_axis(const Polynomial& f, int i) {
  if (i < 1 || i > f.nvars()) throw std::out_of_range("axis index out of range");
  const auto axis = static_cast<std::size_t>(i - 1);
  std::vector<double> coeffs(static_cast<std::size_t>(f.degree()) + 1, 0.0);
  for (const auto& [e, c] : f.terms()) {
    bool pure = true;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (v != axis && e[v] != 0) pure = false;
    if (pure) coeffs[static_cast<std::size_t>(e[axis])] += c;
  }
  return UnivariatePolynomial(std::move(coeffs));
}

Polynomial restrict_pair(const Polynomial& f, int i, int j) {
  if (i < 1 || j > f.nvars() || i >= j) throw std::out_of_range("pair indices out of range");
  const auto vi = static_cast<std::size_t>(i - 1);
  const auto vj = static_cast<std::size_t>(j - 1);
  Polynomial::TermMap out;
  for (const auto& [e, c] : f.terms()) {
    bool keep = true;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (v != vi && v != vj && e[v] != 0) keep = false;
    if (keep) out[Exponents{e[vi], e[vj]}] += c;
  }
  return Polynomial(2, std::move(out));
}

double max_coefficient_difference(const Polynomial& f, const Polynomial& g) {
  check_same_nvars(f, g);
  double m = 0.0;
  for (const auto& [e, c] : f.terms()) m = std::max(m, std::abs(c - g.coefficient(e)));
  for (const auto& [e, c] : g.terms())
    if (!f.terms().contains(e)) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace detrep
