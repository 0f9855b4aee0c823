#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "detrep/equivalence.hpp"
#include "detrep/expression.hpp"
#include "detrep/gmd.hpp"
#include "detrep/multivariate.hpp"
#include "detrep/random_instance.hpp"

using namespace detrep;

namespace {

const double kS2 = 2 * std::sqrt(2.0);

MSDR trivariate_tuple() {
  MSDR r;
  r.D1.diag = {3, 2, 1};
  r.A = {SymmetricMatrix::from_rows({{4.5, -1.616658, .152704}, {-1.616658, 4, -.783161}, {.152704, -.783161, 2.5}}),
         SymmetricMatrix::from_rows({{5, 0, kS2}, {0, 6, 0}, {kS2, 0, 7}})};
  return r;
}

void expect_verified(const Polynomial& f, const SolveReport& rep) {
  ASSERT_EQ(rep.status, SolveStatus::Found);
  for (const auto& r : rep.representations)
    EXPECT_LE(max_coefficient_difference(f, expand_det(r.D1, r.A)), 1e-8 * std::max(1.0, f.max_abs_coefficient()));
}

}  // namespace

TEST(RestrictLeading, DropsTrailingVariables) {
  Polynomial f = parse_expression("1 + x1 + x2*x3 + x1*x2 + x3^2", 3);
  EXPECT_EQ(restrict_leading(f, 2), parse_expression("1 + x1 + x1*x2", 2));
}

TEST(TrivariateOffdiag, PrintedMatrixAndSolution) {
  MSDR t = trivariate_tuple();
  // The printed cubic rounds its mixed coefficients; the exact expansion is
  // used here.
  Polynomial f = expand_det(t.D1, t.A);
  auto ext = trivariate_offdiag(t.D1, t.A[0], {5, 6, 7}, f, SolveConfig{});
  Matrix h(3, 3);
  h << -3.2332, 0.3054, -1.5662, -7.8438, -1.3103, -6.5542, -3.2332, 0.6108, -4.6986;
  EXPECT_LE((ext.H - h).cwiseAbs().maxCoeff(), 1e-3);
  EXPECT_NEAR(ext.z(0), 0.8632, 1e-3);
  EXPECT_NEAR(ext.z(1), -3.7076, 1e-3);
  EXPECT_NEAR(ext.z(2), 1.7268, 1e-3);
  ASSERT_EQ(ext.linear.kind, LinearSolveKind::Unique);
  EXPECT_NEAR(ext.linear.particular(0), 0, 1e-6);
  EXPECT_NEAR(ext.linear.particular(1), kS2, 1e-6);
  EXPECT_NEAR(ext.linear.particular(2), 0, 1e-6);
  ASSERT_EQ(ext.candidates.size(), 1u);
}

TEST(ExtendCubic, MatchesTrivariateFormula) {
  MSDR t = trivariate_tuple();
  Polynomial f = expand_det(t.D1, t.A);
  auto a = trivariate_offdiag(t.D1, t.A[0], {5, 6, 7}, f, SolveConfig{});
  auto b = extend_cubic(t.D1, {t.A[0]}, {5, 6, 7}, f, 3, SolveConfig{});
  ASSERT_EQ(b.linear.kind, LinearSolveKind::Unique);
  EXPECT_LE((a.linear.particular - b.linear.particular).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Compatibility, ExactTupleIsCompatible) {
  MSDR t = trivariate_tuple();
  // A13 = V13 D3 V13^T, and A23 is the x2 coefficient of the (2,3) slice
  // in the basis of V13.
  auto tr = recover_transition(t.A[1]);
  Matrix a23 = tr.V.transpose() * t.A[0].dense() * tr.V;
  auto c = compatibility_check(t.A[0], t.A[1], SymmetricMatrix::from_dense(a23, 1e-9), tr.D);
  EXPECT_LE(c.residual, 1e-10);
  // The other slice class is incompatible.
  SymmetricMatrix other = SymmetricMatrix::from_rows({{5, -2, 0}, {-2, 6, 2}, {0, 2, 7}});
  auto c2 = compatibility_check(t.A[0], other, SymmetricMatrix::from_dense(a23, 1e-9), tr.D);
  EXPECT_GT(c2.residual, 1e-3);
}

TEST(Compatibility, EigenvalueMismatchThrows) {
  MSDR t = trivariate_tuple();
  EXPECT_THROW(compatibility_check(t.A[0], t.A[1], t.A[0], DiagonalMatrix{{1, 2, 3}}), EigOrderMismatch);
}

TEST(SolveMultivariate, ExactTrivariateBothRoutes) {
  MSDR t = trivariate_tuple();
  Polynomial f = expand_det(t.D1, t.A);
  for (auto route : {MultivariateRoute::Linear, MultivariateRoute::Compatibility}) {
    SolveConfig cfg;
    cfg.route = route;
    auto rep = solve_multivariate(f, cfg);
    expect_verified(f, rep);
    ASSERT_EQ(rep.classes(), 1);
    const auto& a13 = rep.representations[0].A[1];
    EXPECT_NEAR(a13(0, 1), 0, 1e-6);
    EXPECT_NEAR(std::abs(a13(0, 2)), kS2, 1e-6);
    EXPECT_NEAR(a13(1, 2), 0, 1e-6);
  }
}

TEST(SolveMultivariate, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    int d = 2 + static_cast<int>(seed % 3);
    int n = 3 + static_cast<int>((seed / 3) % 2);
    auto inst = random_instance(d, n, seed);
    auto rep = solve(inst.polynomial);
    expect_verified(inst.polynomial, rep);
    double best = INFINITY;
    for (const auto& r : rep.representations) best = std::min(best, orbit_distance(inst.representation, r));
    EXPECT_LE(best, 1e-5) << "d " << d << " n " << n << " seed " << seed;
  }
}

TEST(SolveMultivariate, RepeatedFirstEigenvalue) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1, 1);
  MSDR r;
  r.D1.diag = {1, 1, -0.5};
  Matrix v = random_orthogonal(3, rng);
  for (int k = 0; k < 2; ++k) {
    SymmetricMatrix a(3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) a.set(i, j, u(rng));
    r.A.push_back(a);
  }
  Polynomial f = expand_det(r.D1, r.A);
  expect_verified(f, solve(f));
}

TEST(SolveMultivariate, RejectsComplexAxis) {
  auto rep = solve(parse_expression("1 + x1 + x2 + x3 + x3^2", 3));
  EXPECT_EQ(rep.status, SolveStatus::NoRealEigs);
  EXPECT_TRUE(is_certified_impossible(rep.status));
}

TEST(Solve, UnivariateInput) {
  Polynomial f = parse_expression("1 + 6*x1 + 11*x1^2 + 6*x1^3", 1);
  auto rep = solve(f);
  ASSERT_EQ(rep.status, SolveStatus::Found);
  const auto& d1 = rep.representations[0].D1.diag;
  ASSERT_EQ(d1.size(), 3u);
  EXPECT_NEAR(d1[0], 3, 1e-12);
  EXPECT_NEAR(d1[1], 2, 1e-12);
  EXPECT_NEAR(d1[2], 1, 1e-12);
}
