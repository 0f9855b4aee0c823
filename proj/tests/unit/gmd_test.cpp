#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "detrep/bivariate.hpp"
#include "detrep/expression.hpp"
#include "detrep/gmd.hpp"

using namespace detrep;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int d) {
  std::uniform_real_distribution<double> u(-1, 1);
  Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = u(rng);
  return m;
}

// Principal minors of size k, enumerated with Eigen's LU.
double minor_sum(const Matrix& a, int k) {
  const int d = static_cast<int>(a.rows());
  double s = 0.0;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> idx;
    for (int i = 0; i < d; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    Matrix m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m(i, j) = a(idx[i], idx[j]);
    s += k == 0 ? 1.0 : m.partialPivLu().determinant();
  }
  return s;
}

double lu_det(const std::vector<Matrix>& ms, const std::vector<double>& x) {
  Matrix m = Matrix::Identity(ms[0].rows(), ms[0].cols());
  for (std::size_t i = 0; i < ms.size(); ++i) m += x[i] * ms[i];
  return m.partialPivLu().determinant();
}

}  // namespace

TEST(Gmd, SingleMatrixIsPrincipalMinorSum) {
  std::mt19937_64 rng(1);
  for (int d = 1; d <= 5; ++d) {
    Matrix a = random_matrix(rng, d);
    for (int k = 1; k <= d; ++k) {
      EXPECT_NEAR(gmd(NumericTuple{{a, k}}), minor_sum(a, k), 1e-12);
      EXPECT_NEAR(principal_minor_sum(a, k), minor_sum(a, k), 1e-12);
    }
    EXPECT_NEAR(gmd(NumericTuple{{a, d}}), a.determinant(), 1e-12);
  }
}

TEST(Gmd, MixedDiscriminantOfDiagonals) {
  Matrix a = Eigen::Vector2d(2, 3).asDiagonal();
  Matrix b = Eigen::Vector2d(5, 7).asDiagonal();
  EXPECT_DOUBLE_EQ(gmd(NumericTuple{{a, 1}, {b, 1}}), 2 * 7 + 3 * 5);
}

TEST(Gmd, MultilinearInRepeatedSlot) {
  // gmd((A,1),(A,1)) = 2 E_2(A): two arrangements of the same matrix.
  std::mt19937_64 rng(2);
  Matrix a = random_matrix(rng, 4);
  EXPECT_NEAR(gmd(NumericTuple{{a, 1}, {a, 1}}), 2 * minor_sum(a, 2), 1e-12);
}

TEST(Gmd, Errors) {
  Matrix a = Matrix::Identity(2, 2);
  Matrix b = Matrix::Identity(3, 3);
  EXPECT_THROW(gmd(NumericTuple{{a, 3}}), KOutOfRange);
  EXPECT_THROW(gmd(NumericTuple{{a, 1}, {b, 1}}), OrderMismatch);
}

TEST(ExpandDet, AgreesWithLuDeterminant) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 1 + trial % 5;
    int n = 1 + trial % 3;
    std::vector<Matrix> ms;
    for (int i = 0; i < n; ++i) ms.push_back(random_matrix(rng, d));
    Polynomial p = expand_det(ms);
    EXPECT_NEAR(p.coefficient(Exponents(static_cast<std::size_t>(n), 0)), 1.0, 1e-14);
    EXPECT_LE(p.degree(), d);
    for (int k = 0; k < 10; ++k) {
      std::vector<double> x(static_cast<std::size_t>(n));
      for (auto& xi : x) xi = u(rng);
      double ref = lu_det(ms, x);
      EXPECT_NEAR(p.evaluate(x), ref, 1e-9 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST(ExpandDet, CubicExampleTuple) {
  DiagonalMatrix d1{{3, 2, 1}};
  std::vector<SymmetricMatrix> a{SymmetricMatrix::from_rows({{4.5, -1.616658, .152704},
                                                            {-1.616658, 4, -.783161},
                                                            {.152704, -.783161, 2.5}})};
  Polynomial f = parse_expression(
      "6*x1^3+36*x1^2*x2+11*x1^2+66*x1*x2^2+42*x1*x2+6*x1+36*x2^3+36*x2^2+11*x2+1", 2);
  // The printed entries carry six decimals.
  EXPECT_LE(max_coefficient_difference(expand_det(d1, a), f), 1e-3);
}

TEST(Gmd, SymbolicMatchesNumeric) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  const int d = 3;
  // Entries (0,1) and (1,2) of the second matrix are unknowns.
  Matrix a = random_matrix(rng, d);
  Matrix b = random_matrix(rng, d);
  SymbolicMatrix sa(d, Polynomial(2)), sb(d, Polynomial(2));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      sa(i, j) = Polynomial::constant(2, a(i, j));
      sb(i, j) = Polynomial::constant(2, b(i, j));
    }
  sb(0, 1) = Polynomial::variable(2, 1);
  sb(1, 2) = Polynomial::variable(2, 2);
  Polynomial sym = gmd(SymbolicTuple{{sa, 1}, {sb, 2}}, 2);
  for (int k = 0; k < 5; ++k) {
    std::vector<double> v{u(rng), u(rng)};
    Matrix bv = b;
    bv(0, 1) = v[0];
    bv(1, 2) = v[1];
    EXPECT_NEAR(sym.evaluate(v), gmd(NumericTuple{{a, 1}, {bv, 2}}), 1e-12);
  }
}

TEST(CoefficientSystem, RejectsCollidingUnknowns) {
  MatrixTemplate t(2);
  t.set(0, 0, 1.0);
  t.set(1, 1, 2.0);
  t.set(0, 1, std::string("u"));
  Polynomial f = parse_expression("1+x1+x2+x3", 3);
  EXPECT_THROW(coefficient_system(DiagonalMatrix{{1, 2}}, {t, t}, f, {{0, 1, 1}}), UnknownCollision);
  auto sys = coefficient_system(DiagonalMatrix{{1, 2}}, {t}, parse_expression("1+x1+x2", 2), {{0, 2}});
  ASSERT_EQ(sys.unknowns, std::vector<std::string>{"u"});
  // det(I + x2 [[1,u],[u,2]]) has x2^2 coefficient 2 - u^2; the target has none.
  EXPECT_LE(max_coefficient_difference(sys.generators[0], parse_expression("2 - x1^2", 1)), 1e-14);
}

TEST(CoefficientSystem, CubicExampleRelations) {
  Polynomial f = parse_expression(
      "6*x1^3+36*x1^2*x2+11*x1^2+66*x1*x2^2+42*x1*x2+6*x1+36*x2^3+36*x2^2+11*x2+1", 2);
  auto sys = offdiag_system(f, DiagonalMatrix{{3, 2, 1}}, {4.5, 4, 2.5});
  ASSERT_EQ(sys.unknowns, (std::vector<std::string>{"u12", "u13", "u23"}));
  ASSERT_EQ(sys.monomials, (std::vector<Exponents>{{0, 2}, {1, 2}, {0, 3}}));
  // d^2+e^2+f^2 = 3.25, d^2+2e^2+3f^2 = 4.5, 2.5d^2+4e^2+4.5f^2-2def = 9,
  // written as expansion minus target.
  const char* printed[] = {"3.25 - (x1^2+x2^2+x3^2)", "4.5 - (x1^2+2*x2^2+3*x3^2)",
                           "9 - (2.5*x1^2+4*x2^2+4.5*x3^2-2*x1*x2*x3)"};
  for (int i = 0; i < 3; ++i)
    EXPECT_LE(max_coefficient_difference(sys.generators[i], parse_expression(printed[i], 3)), 1e-12) << i;
}

TEST(CoefficientSystem, QuarticExampleRelations) {
  const double r = 1 / std::sqrt(2.0);
  Polynomial f = parse_expression("1/2*x1^4+1/2*x2^4-1.5*x1^2-1.5*x2^2+1/2*x1^2*x2^2+1", 2);
  auto sys = offdiag_system(f, DiagonalMatrix{{1, r, -r, -1}}, {0, 0, 0, 0});
  ASSERT_EQ(sys.generators.size(), 6u);
  // Unknowns e f g h k l are u12 u13 u14 u23 u24 u34; printed relations
  // carry four decimals.
  const char* printed[] = {
      "-(x1^2+x2^2+x3^2+x4^2+x5^2+x6^2) + 1.5",
      "1.7071*x1^2+0.2929*x2^2-0.2929*x5^2-1.7071*x6^2",
      "-0.7071*x1^2+0.7071*x2^2+0.5*x3^2+x4^2+0.7071*x5^2-0.7071*x6^2 - 0.5",
      "2*(x4*x5*x6+x2*x3*x6+x1*x3*x5+x1*x2*x4)",
      "2*x4*x5*x6+1.4142*x2*x3*x6-1.4142*x1*x3*x5-2*x1*x2*x4",
      "x1^2*x6^2+x2^2*x5^2+x3^2*x4^2-2*(x1*x2*x5*x6+x1*x3*x4*x6+x2*x3*x4*x5) - 0.5",
  };
  for (int i = 0; i < 6; ++i)
    EXPECT_LE(max_coefficient_difference(sys.generators[i], parse_expression(printed[i], 6)), 1e-4) << i;
}
