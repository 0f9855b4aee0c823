#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "detrep/bivariate.hpp"
#include "detrep/linalg.hpp"
#include "detrep/roots.hpp"

using namespace detrep;

namespace {

SymmetricMatrix random_symmetric(std::mt19937_64& rng, int d) {
  std::uniform_real_distribution<double> u(-1, 1);
  SymmetricMatrix a(d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) a.set(i, j, u(rng));
  return a;
}

}  // namespace

TEST(SymEigen, ReconstructsAndIsOrthonormal) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    int d = 1 + trial % 6;
    SymmetricMatrix a = random_symmetric(rng, d);
    auto e = sym_eigen(a);
    Matrix v = e.vectors;
    Matrix lam = Eigen::Map<const Vector>(e.values.data(), d).asDiagonal();
    EXPECT_LE((v * lam * v.transpose() - a.dense()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LE((v.transpose() * v - Matrix::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_TRUE(std::is_sorted(e.values.rbegin(), e.values.rend()));
    for (int j = 0; j < d; ++j) {
      Eigen::Index k;
      v.col(j).cwiseAbs().maxCoeff(&k);
      EXPECT_GT(v(k, j), 0);
    }
  }
}

TEST(SymEigen, AgreesWithEigen) {
  std::mt19937_64 rng(6);
  SymmetricMatrix a = random_symmetric(rng, 5);
  Eigen::SelfAdjointEigenSolver<Matrix> ref(a.dense());
  auto e = sym_eigen(a);
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(e.values[i], ref.eigenvalues()(4 - i), 1e-12);
}

TEST(SymmetricMatrix, FromDenseRejectsAsymmetry) {
  Matrix m(2, 2);
  m << 1, 2, 3, 4;
  EXPECT_THROW(SymmetricMatrix::from_dense(m), std::invalid_argument);
}

TEST(Linalg, DeterminantMatchesEigen) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int d = 1; d <= 6; ++d) {
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = u(rng);
    EXPECT_NEAR(determinant(m), m.fullPivLu().determinant(), 1e-12);
  }
}

TEST(Linalg, ElementarySymmetricFromProduct) {
  // Coefficients of prod (1 + r_i t).
  std::vector<double> r{3, -2, 0.5, 7};
  std::vector<double> c{1};
  for (double ri : r) {
    std::vector<double> n(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      n[k] += c[k];
      n[k + 1] += ri * c[k];
    }
    c = n;
  }
  for (int k = 0; k <= 4; ++k) EXPECT_NEAR(elementary_symmetric(r, k), c[k], 1e-12);
  EXPECT_THROW(elementary_symmetric(r, 5), std::out_of_range);
}

TEST(SolveLinear, DiagonalSystemOfCubicExample) {
  DiagonalMatrix d1{{3, 2, 1}};
  Matrix g = diagonal_system_matrix(d1);
  Matrix expected(3, 3);
  expected << 1, 1, 1, 3, 4, 5, 2, 3, 6;
  EXPECT_LE((g - expected).cwiseAbs().maxCoeff(), 1e-14);
  Vector z(3);
  z << 11, 42, 36;
  auto r = solve_linear(g, z, 1e-8);
  EXPECT_EQ(r.kind, LinearSolveKind::Unique);
  EXPECT_NEAR(r.particular(0), 4.5, 1e-12);
  EXPECT_NEAR(r.particular(1), 4.0, 1e-12);
  EXPECT_NEAR(r.particular(2), 2.5, 1e-12);
}

TEST(SolveLinear, DeterminantOfDiagonalSystem) {
  std::vector<double> r{2.5, 1.0, -0.3, -4};
  Matrix g = diagonal_system_matrix(DiagonalMatrix{r});
  double vander = 1.0;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) vander *= r[i] - r[j];
  EXPECT_NEAR(std::abs(g.determinant()), std::abs(vander), 1e-9);
}

TEST(SolveLinear, ParameterizedAndInconsistent) {
  Matrix m(2, 3);
  m << 1, 1, 1, 1, 2, 3;
  Vector rhs(2);
  rhs << 3.25, 4.5;
  auto r = solve_linear(m, rhs, 1e-10);
  EXPECT_EQ(r.kind, LinearSolveKind::Parameterized);
  ASSERT_EQ(r.kernel_basis.size(), 1u);
  EXPECT_LE((m * r.particular - rhs).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((m * r.kernel_basis[0]).cwiseAbs().maxCoeff(), 1e-12);
  // The printed particular solution differs from the minimum-norm one by a
  // kernel element.
  Vector printed(3);
  printed << 2.5, 0.25, 0.5;
  Vector diff = printed - r.particular;
  Vector along = r.kernel_basis[0] * r.kernel_basis[0].dot(diff);
  EXPECT_LE((diff - along).cwiseAbs().maxCoeff(), 1e-12);

  Matrix s(2, 1);
  s << 1, 1;
  Vector b(2);
  b << 1, 2;
  EXPECT_EQ(solve_linear(s, b, 1e-8).kind, LinearSolveKind::Inconsistent);
}

TEST(RandomOrthogonal, IsOrthogonal) {
  std::mt19937_64 rng(9);
  for (int d = 1; d <= 6; ++d) {
    Matrix q = random_orthogonal(d, rng);
    EXPECT_LE((q.transpose() * q - Matrix::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(RealRoots, DistinctRoots) {
  auto r = real_roots(UnivariatePolynomial({1, 6, 11, 6}));
  ASSERT_TRUE(r.all_real);
  ASSERT_EQ(r.roots.size(), 3u);
  EXPECT_NEAR(r.roots[0].value, -1.0 / 3, 1e-12);
  EXPECT_NEAR(r.roots[1].value, -0.5, 1e-12);
  EXPECT_NEAR(r.roots[2].value, -1.0, 1e-12);
}

TEST(RealRoots, Multiplicities) {
  // (x - 1)^2 (x + 2)
  auto r = real_roots(UnivariatePolynomial({2, -3, 0, 1}));
  ASSERT_TRUE(r.all_real);
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_NEAR(r.roots[0].value, 1, 1e-7);
  EXPECT_EQ(r.roots[0].multiplicity, 2);
  EXPECT_EQ(r.total_multiplicity(), 3);
}

TEST(RealRoots, ComplexPair) {
  auto r = real_roots(UnivariatePolynomial({1, 0, 1, 1}));  // one real root
  EXPECT_FALSE(r.all_real);
  EXPECT_EQ(r.real_count, 1);
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_NEAR(UnivariatePolynomial({1, 0, 1, 1}).evaluate(r.roots[0].value), 0, 1e-10);
}

TEST(RealRoots, RandomProducts) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> roots(1 + trial % 6);
    for (auto& x : roots) x = u(rng);
    std::vector<double> c{1};
    for (double x : roots) {
      std::vector<double> n(c.size() + 1, 0.0);
      for (std::size_t k = 0; k < c.size(); ++k) {
        n[k + 1] += c[k];
        n[k] -= x * c[k];
      }
      c = n;
    }
    auto r = real_roots(UnivariatePolynomial(c));
    ASSERT_TRUE(r.all_real);
    EXPECT_EQ(r.total_multiplicity(), static_cast<int>(roots.size()));
    std::sort(roots.rbegin(), roots.rend());
    for (const auto& root : r.roots) {
      double best = 1e9;
      for (double x : roots) best = std::min(best, std::abs(x - root.value));
      EXPECT_LE(best, 1e-6);
    }
  }
}

TEST(RealRoots, SturmCount) {
  UnivariatePolynomial p({1, 6, 11, 6});
  EXPECT_EQ(sturm_count(p, -2, 0), 3);
  EXPECT_EQ(sturm_count(p, -0.75, 0), 2);
}

TEST(NegativeReciprocalEigs, CubicAxis) {
  auto e = negative_reciprocal_eigs(UnivariatePolynomial({1, 6, 11, 6}), 3);
  ASSERT_TRUE(e.all_real);
  EXPECT_NEAR(e.values[0], 3, 1e-12);
  EXPECT_NEAR(e.values[1], 2, 1e-12);
  EXPECT_NEAR(e.values[2], 1, 1e-12);
}

TEST(NegativeReciprocalEigs, PadsWithZeros) {
  // 1 + 2x has degree 1 < d.
  auto e = negative_reciprocal_eigs(UnivariatePolynomial({1, 2}), 3);
  ASSERT_TRUE(e.all_real);
  EXPECT_EQ(e.values, (std::vector<double>{2, 0, 0}));
}

TEST(NegativeReciprocalEigs, QuarticAxis) {
  auto e = negative_reciprocal_eigs(UnivariatePolynomial({1, 0, -1.5, 0, 0.5}), 4);
  ASSERT_TRUE(e.all_real);
  const double r = 1 / std::sqrt(2.0);
  EXPECT_NEAR(e.values[0], 1, 1e-12);
  EXPECT_NEAR(e.values[1], r, 1e-12);
  EXPECT_NEAR(e.values[2], -r, 1e-12);
  EXPECT_NEAR(e.values[3], -1, 1e-12);
}

TEST(NegativeReciprocalEigs, RejectsNonMonic) {
  EXPECT_THROW(negative_reciprocal_eigs(UnivariatePolynomial({2, 1}), 2), std::invalid_argument);
  EXPECT_FALSE(negative_reciprocal_eigs(UnivariatePolynomial({1, 0, 1}), 2).all_real);
}
