#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace detrep {

/// Exponent vector of a monomial x1^k1 ... xn^kn.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Graded lexicographic order with x1 > x2 > ... > xn; the constant monomial
/// is the smallest element.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class NvarsMismatch : public std::invalid_argument {
 public:
  NvarsMismatch(int lhs, int rhs);
};

class UnivariatePolynomial;

/// Sparse multivariate polynomial with real coefficients.
///
/// Values are immutable after construction. Every constructor and arithmetic
/// operation normalizes: coefficients with |c| <= 1e-14 * max|c| (and exact
/// zeros) are dropped.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, double, GradedLexLess>;

  static constexpr double kDropThreshold = 1e-14;

  /// The zero polynomial in `nvars` variables.
  explicit Polynomial(int nvars = 1);
  Polynomial(int nvars, TermMap terms);

  static Polynomial constant(int nvars, double c);
  /// The monomial x_index (1-based).
  static Polynomial variable(int nvars, int index);
  static Polynomial monomial(Exponents exps, double c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  double coefficient(const Exponents& exps) const;
  /// Total degree; 0 for constants and for the zero polynomial.
  int degree() const;
  double max_abs_coefficient() const;
  double evaluate(std::span<const double> point) const;

  /// Partial derivative with respect to x_index (1-based).
  Polynomial derivative(int index) const;
  Polynomial scaled(double c) const;
  Polynomial pow(int e) const;

  /// Expression text accepted by parse_expression; re-parsing it reproduces
  /// the polynomial exactly.
  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void normalize();

  int nvars_;
  TermMap terms_;
};

inline Polynomial sub(const Polynomial& f, const Polynomial& g) { return f - g; }
inline Polynomial scale(const Polynomial& f, double c) { return f.scaled(c); }
inline double evaluate(const Polynomial& f, std::span<const double> point) {
  return f.evaluate(point);
}

/// Dense univariate polynomial, constant term first.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<double> coeffs);

  const std::vector<double>& coeffs() const { return coeffs_; }
  /// Index of the last nonzero coefficient; 0 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  double operator[](int power) const;
  double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

  double evaluate(double x) const;
  UnivariatePolynomial derivative() const;
  /// x^d p(1/x); the coefficients of p read in reverse order.
  UnivariatePolynomial reversed(int d) const;

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

 private:
  std::vector<double> coeffs_;
};

/// f with every variable except x_i set to zero (i is 1-based).
UnivariatePolynomial restrict_axis(const Polynomial& f, int i);

/// f with every variable except x_i, x_j set to zero, relabeled so that
/// x_i becomes the first and x_j the second variable (1-based, i < j).
Polynomial restrict_pair(const Polynomial& f, int i, int j);

/// Maximum absolute coefficient of f - g over the union of their supports.
double max_coefficient_difference(const Polynomial& f, const Polynomial& g);

}  // namespace detrep
