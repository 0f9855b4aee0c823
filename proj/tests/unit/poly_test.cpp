#include <random>

#include <gtest/gtest.h>

#include "detrep/expression.hpp"
#include "detrep/poly.hpp"
#include "detrep/poly_json.hpp"

using namespace detrep;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int nvars, int degree, int terms) {
  std::uniform_int_distribution<int> e(0, degree);
  std::uniform_real_distribution<double> c(-5, 5);
  Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    Exponents ex(static_cast<std::size_t>(nvars));
    for (auto& k : ex) k = e(rng);
    p = p + Polynomial::monomial(ex, c(rng));
  }
  return p;
}

}  // namespace

TEST(Polynomial, ProductOfLinearFactors) {
  Polynomial x = Polynomial::variable(2, 1);
  Polynomial y = Polynomial::variable(2, 2);
  Polynomial one = Polynomial::constant(2, 1);
  Polynomial p = (one + x) * (one - y);
  EXPECT_DOUBLE_EQ(p.coefficient({0, 0}), 1);
  EXPECT_DOUBLE_EQ(p.coefficient({1, 0}), 1);
  EXPECT_DOUBLE_EQ(p.coefficient({0, 1}), -1);
  EXPECT_DOUBLE_EQ(p.coefficient({1, 1}), -1);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p.degree(), 2);
}

TEST(Polynomial, CancellationDropsTerms) {
  Polynomial x = Polynomial::variable(1, 1);
  EXPECT_TRUE((x - x).is_zero());
  Polynomial tiny = x + Polynomial::constant(1, 1e-20);
  EXPECT_EQ(tiny.size(), 1u);
}

TEST(Polynomial, NvarsMismatchThrows) {
  EXPECT_THROW(Polynomial::variable(2, 1) + Polynomial::variable(3, 1), NvarsMismatch);
}

TEST(Polynomial, GradedLexOrder) {
  GradedLexLess less;
  EXPECT_TRUE(less({0, 0}, {0, 1}));
  EXPECT_TRUE(less({0, 1}, {1, 0}));
  EXPECT_TRUE(less({1, 0}, {0, 2}));
  EXPECT_TRUE(less({1, 1}, {2, 0}));
  EXPECT_FALSE(less({2, 0}, {2, 0}));
}

TEST(Polynomial, DerivativeAndPow) {
  Polynomial f = parse_expression("x1^3*x2 + 2*x2^2", 2);
  EXPECT_EQ(f.derivative(1), parse_expression("3*x1^2*x2", 2));
  EXPECT_EQ(f.derivative(2), parse_expression("x1^3 + 4*x2", 2));
  EXPECT_EQ(parse_expression("1+x1", 1).pow(3), parse_expression("1+3*x1+3*x1^2+x1^3", 1));
}

TEST(Polynomial, RestrictAxisAndPair) {
  Polynomial f = parse_expression("1 + 2*x1 + 3*x2 + 4*x3^2 + 5*x1*x3 + 6*x1*x2*x3", 3);
  EXPECT_EQ(restrict_axis(f, 3).coeffs(), (std::vector<double>{1, 0, 4}));
  Polynomial g = restrict_pair(f, 1, 3);
  EXPECT_EQ(g, parse_expression("1 + 2*x1 + 4*x2^2 + 5*x1*x2", 2));
}

TEST(Polynomial, ArithmeticMatchesEvaluation) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial a = random_poly(rng, 3, 3, 6);
    Polynomial b = random_poly(rng, 3, 3, 6);
    std::vector<double> x{u(rng), u(rng), u(rng)};
    EXPECT_NEAR((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x), 1e-9);
    EXPECT_NEAR((a - b).evaluate(x), a.evaluate(x) - b.evaluate(x), 1e-12);
  }
}

TEST(Polynomial, TextRoundTrip) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p = random_poly(rng, 3, 4, 8);
    EXPECT_EQ(parse_expression(p.to_string(), 3), p);
  }
}

TEST(Polynomial, JsonRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial p = random_poly(rng, 2, 5, 7);
    EXPECT_EQ(polynomial_from_json(to_json(p)), p);
  }
  nlohmann::json dup = {{"nvars", 1}, {"terms", {{{"exp", {1}}, {"coef", 1.0}}, {{"exp", {1}}, {"coef", 2.0}}}}};
  EXPECT_THROW(polynomial_from_json(dup), std::invalid_argument);
}

TEST(Polynomial, MaxCoefficientDifference) {
  Polynomial a = parse_expression("1 + 2*x1", 1);
  Polynomial b = parse_expression("1 + 2.5*x1 - x1^2", 1);
  EXPECT_DOUBLE_EQ(max_coefficient_difference(a, b), 1.0);
}

TEST(Univariate, ReversedAndEvaluate) {
  UnivariatePolynomial p({1, 6, 11, 6});
  EXPECT_EQ(p.degree(), 3);
  EXPECT_DOUBLE_EQ(p.evaluate(-1), 0);
  EXPECT_EQ(p.reversed(3).coeffs(), (std::vector<double>{6, 11, 6, 1}));
  EXPECT_EQ(p.derivative().coeffs(), (std::vector<double>{6, 22, 18}));
}

TEST(Expression, ParsesRationalsAndPowers) {
  Polynomial f = parse_expression("1/2*x1^4 - 1.5*x2^2 + (x1 + x2)^2", 2);
  EXPECT_DOUBLE_EQ(f.coefficient({4, 0}), 0.5);
  EXPECT_DOUBLE_EQ(f.coefficient({0, 2}), -0.5);
  EXPECT_DOUBLE_EQ(f.coefficient({1, 1}), 2);
}

TEST(Expression, LeadingSign) {
  EXPECT_EQ(parse_expression("-x1+1", 1), parse_expression("1-x1", 1));
}

TEST(Expression, RejectsImplicitMultiplication) {
  EXPECT_THROW(parse_expression("2x1", 1), SyntaxError);
  EXPECT_THROW(parse_expression("x1 x2", 2), SyntaxError);
}

TEST(Expression, ErrorPositions) {
  try {
    parse_expression("1 + * x1", 1);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  try {
    parse_expression("1 + x3", 2);
    FAIL();
  } catch (const VariableOutOfRange& e) {
    EXPECT_EQ(e.index(), 3);
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_expression("x0", 2), VariableOutOfRange);
  EXPECT_THROW(parse_expression("(1 + x1", 1), SyntaxError);
  EXPECT_THROW(parse_expression("1/0", 1), SyntaxError);
}
