#include "detrep/multivariate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "detrep/bivariate.hpp"
#include "detrep/gmd.hpp"
#include "detrep/newton.hpp"
#include "detrep/roots.hpp"

namespace detrep {

namespace {

bool has_repeated(const std::vector<double>& desc) {
  for (std::size_t i = 0; i + 1 < desc.size(); ++i)
    if (std::abs(desc[i] - desc[i + 1]) <= kRootClusterTol * (1.0 + std::abs(desc[i]))) return true;
  return false;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Monomials of degree 1..max_deg in n variables.
void monomials_upto(int n, int max_deg, Exponents& cur, int pos, int used, std::vector<Exponents>& out) {
  if (pos == n) {
    if (used > 0) out.push_back(cur);
    return;
  }
  for (int e = 0; used + e <= max_deg; ++e) {
    cur[static_cast<std::size_t>(pos)] = e;
    monomials_upto(n, max_deg, cur, pos + 1, used + e, out);
  }
  cur[static_cast<std::size_t>(pos)] = 0;
}

MatrixTemplate offdiag_template(const std::vector<double>& diag) {
  const int d = static_cast<int>(diag.size());
  MatrixTemplate t(d);
  for (int i = 0; i < d; ++i) {
    t.set(i, i, diag[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < d; ++j) t.set(i, j, offdiag_name(i, j));
  }
  return t;
}

// p(ys): substitutes polynomials (all in the same variables) for the variables of p.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& ys, int nvars) {
  Polynomial out(nvars);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(nvars, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) term = term * ys[v].pow(e[v]);
    out = out + term;
  }
  return out;
}

// Resolves a solved linear system for the off-diagonal of A1m into complete
// candidate matrices.
std::vector<SymmetricMatrix> candidates_from(const LinearSolveResult& lin, const DiagonalMatrix& d1,
                                             const std::vector<SymmetricMatrix>& fixed,
                                             const std::vector<double>& diag_am, const Polynomial& target,
                                             const SolveConfig& cfg) {
  if (lin.kind == LinearSolveKind::Inconsistent) return {};
  if (lin.kind == LinearSolveKind::Unique) return {assemble(diag_am, lin.particular)};

  const int d = d1.order();
  const int m = target.nvars();
  std::vector<MatrixTemplate> templates;
  for (const auto& a : fixed) templates.push_back(MatrixTemplate::from(a));
  templates.push_back(offdiag_template(diag_am));

  std::vector<Exponents> monomials;
  {
    std::vector<Exponents> all;
    Exponents cur(static_cast<std::size_t>(m), 0);
    monomials_upto(m, d, cur, 0, 0, all);
    for (const auto& e : all)
      if (e.back() >= 2) monomials.push_back(e);
  }
  std::vector<SymmetricMatrix> out;
  auto accept = [&](const Vector& y) {
    std::vector<SymmetricMatrix> tuple = fixed;
    tuple.push_back(assemble(diag_am, y));
    const double r = representation_residual(target, d1, tuple);
    if (!within_tolerance(target, r, cfg.tol_verify)) return false;
    out.push_back(tuple.back());
    return true;
  };
  if (monomials.empty()) {
    accept(lin.particular);
    return out;
  }

  const PolynomialSystem sys = coefficient_system(d1, templates, target, monomials);
  const int nt = static_cast<int>(lin.kernel_basis.size());
  const int nu = static_cast<int>(sys.unknowns.size());
  std::vector<Polynomial> ys;
  for (int i = 0; i < nu; ++i) {
    Polynomial y = Polynomial::constant(nt, lin.particular(i));
    for (int j = 0; j < nt; ++j)
      y = y + Polynomial::variable(nt, j + 1).scaled(lin.kernel_basis[static_cast<std::size_t>(j)](i));
    ys.push_back(std::move(y));
  }
  std::vector<Polynomial> reduced;
  for (const auto& g : sys.generators) reduced.push_back(substitute(g, ys, nt));

  const ReciprocalEigs eig = negative_reciprocal_eigs(restrict_axis(target, m), d);
  const double bound = eig ? max_abs(eig.values) : target.max_abs_coefficient();
  NewtonConfig nc;
  nc.starts = cfg.newton_starts > 0 ? cfg.newton_starts : 100 * nt;
  nc.max_iter = cfg.max_iter;
  nc.radius = 1.0 + std::sqrt(static_cast<double>(nu)) * bound;
  nc.seed = cfg.seed;
  nc.tol_residual = 1e-10 * (1.0 + target.max_abs_coefficient());
  solve_newton(CompiledSystem(reduced), nc, [&](const Vector& t) {
    Vector y = lin.particular;
    for (int j = 0; j < nt; ++j) y += t(j) * lin.kernel_basis[static_cast<std::size_t>(j)];
    return accept(y);
  });
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Variables of f renamed: new variable i is old variable order[i] (0-based).
Polynomial permute_variables(const Polynomial& f, const std::vector<int>& order) {
  Polynomial::TermMap t;
  for (const auto& [e, c] : f.terms()) {
    Exponents ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[static_cast<std::size_t>(order[i])];
    t.emplace(std::move(ne), c);
  }
  return Polynomial(f.nvars(), std::move(t));
}

SolveStatus slice_failure(SolveStatus s) {
  return is_certified_impossible(s) ? s : SolveStatus::BudgetExhausted;
}

struct Search {
  const Polynomial& f;
  const SolveConfig& cfg;
  DiagonalMatrix d1;
  std::vector<std::vector<double>> diag;  // diag[m] for A1m, m = 2..n
  std::vector<MSDR> found;
  double best_residual = std::numeric_limits<double>::infinity();
  long branches = 0;

  void verify(const std::vector<SymmetricMatrix>& tuple) {
    MSDR rep = make_verified(f, d1, tuple, cfg.tol_verify);
    best_residual = std::min(best_residual, rep.residual);
    if (rep.verified) found.push_back(std::move(rep));
  }
};

void extend_linear(Search& s, std::vector<SymmetricMatrix>& tuple, int m) {
  const int n = s.f.nvars();
  if (m > n) {
    s.verify(tuple);
    return;
  }
  ++s.branches;
  const Extension ext = extend_cubic(s.d1, tuple, s.diag[static_cast<std::size_t>(m)], s.f, m, s.cfg);
  for (const auto& a : ext.candidates) {
    tuple.push_back(a);
    extend_linear(s, tuple, m + 1);
    tuple.pop_back();
  }
}

struct SliceSolutions {
  std::map<std::pair<int, int>, SolveReport> reports;
};

void extend_compat(Search& s, const SliceSolutions& slices, std::vector<SymmetricMatrix>& tuple, int m,
                   double tol_compat) {
  const int n = s.f.nvars();
  if (m > n) {
    s.verify(tuple);
    return;
  }
  for (const auto& rep : slices.reports.at({1, m}).representations) {
    for (const auto& a1m : orbit(rep.A.front())) {
      ++s.branches;
      bool ok = true;
      for (int k = 2; k < m && ok; ++k) {
        const SymmetricMatrix& a1k = tuple[static_cast<std::size_t>(k - 2)];
        double best = std::numeric_limits<double>::infinity();
        for (const auto& skm : slices.reports.at({k, m}).representations)
          best = std::min(best, compatibility_check(a1m, a1k, skm.A.front(), skm.D1).residual);
        ok = best <= tol_compat * (1.0 + a1m.dense().norm());
      }
      if (!ok) continue;
      tuple.push_back(a1m);
      extend_compat(s, slices, tuple, m + 1, tol_compat);
      tuple.pop_back();
    }
  }
}

SolveReport solve_with_distinct_d1(const Polynomial& f, const SolveConfig& cfg, SolveReport report,
                                   const std::vector<std::vector<double>>& eigs) {
  const int n = f.nvars();
  const int d = f.degree();
  Search s{f, cfg, DiagonalMatrix{eigs[0]}, std::vector<std::vector<double>>(static_cast<std::size_t>(n + 1)), {}};

  for (int m = 2; m <= n; ++m) {
    const LinearSolveResult diag = diagonal_step(restrict_pair(f, 1, m), s.d1, cfg.tol_linear);
    if (diag.kind == LinearSolveKind::Inconsistent) {
      report.status = SolveStatus::DiagInconsistent;
      report.diagnostics.push_back("diagonal system for A1" + std::to_string(m) + " inconsistent");
      return report;
    }
    s.diag[static_cast<std::size_t>(m)].assign(diag.particular.data(), diag.particular.data() + d);
  }

  MultivariateRoute route = cfg.route;
  if (route == MultivariateRoute::Auto) route = d <= 3 ? MultivariateRoute::Linear : MultivariateRoute::Compatibility;

  SliceSolutions slices;
  auto solve_slice = [&](int i, int j) {
    SolveReport r = solve_bivariate(restrict_pair(f, i, j), cfg);
    report.diagnostics.push_back("slice (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                                 to_string(r.status) + ", " + std::to_string(r.classes()) + " classes");
    const SolveStatus st = r.status;
    slices.reports.emplace(std::make_pair(i, j), std::move(r));
    return st;
  };

  if (const SolveStatus st = solve_slice(1, 2); st != SolveStatus::Found) {
    report.status = slice_failure(st);
    return report;
  }

  std::vector<SymmetricMatrix> tuple;
  if (route == MultivariateRoute::Linear) {
    report.diagnostics.push_back("route: linear extension");
    for (const auto& rep : slices.reports.at({1, 2}).representations) {
      for (const auto& a12 : orbit(rep.A.front())) {
        tuple = {a12};
        extend_linear(s, tuple, 3);
      }
    }
  } else {
    report.diagnostics.push_back("route: slice compatibility");
    for (int j = 3; j <= n; ++j) {
      for (int i = 1; i < j; ++i) {
        if (const SolveStatus st = solve_slice(i, j); st != SolveStatus::Found) {
          report.status = slice_failure(st);
          return report;
        }
      }
    }
    try {
      for (const auto& rep : slices.reports.at({1, 2}).representations) {
        for (const auto& a12 : orbit(rep.A.front())) {
          ++s.branches;
          tuple = {a12};
          extend_compat(s, slices, tuple, 3, cfg.tol_compat);
        }
      }
    } catch (const EigOrderMismatch& e) {
      report.diagnostics.push_back(std::string("aborted: ") + e.what());
    }
  }
  report.diagnostics.push_back("branches explored: " + std::to_string(s.branches));

  if (s.found.empty()) {
    report.status = SolveStatus::CompatibilityExhausted;
    if (std::isfinite(s.best_residual))
      report.diagnostics.push_back("best full residual among complete tuples: " + fmt(s.best_residual));
    return report;
  }
  report.representations = class_representatives(s.found);
  report.status = SolveStatus::Found;
  report.diagnostics.push_back("verified tuples: " + std::to_string(s.found.size()) + " in " +
                               std::to_string(report.classes()) + " classes");
  return report;
}

}  // namespace

Compatibility compatibility_check(const SymmetricMatrix& a1j, const SymmetricMatrix& a1k, const SymmetricMatrix& akj,
                                  const DiagonalMatrix& dk) {
  const Transition t = recover_transition(a1k);
  if (t.D.order() != dk.order()) throw EigOrderMismatch();
  for (int i = 0; i < dk.order(); ++i) {
    const double want = dk.diag[static_cast<std::size_t>(i)];
    if (std::abs(t.D.diag[static_cast<std::size_t>(i)] - want) > 1e-6 * (1.0 + std::abs(want)))
      throw EigOrderMismatch();
  }
  Compatibility best;
  best.residual = std::numeric_limits<double>::infinity();
  for (auto& s : SignatureMatrix::with_positive_first(dk.order())) {
    const Matrix v = t.V * s.dense();
    const double r = (a1j.dense() * v - v * akj.dense()).norm();
    if (r < best.residual) best = {r, std::move(s)};
  }
  return best;
}

Polynomial restrict_leading(const Polynomial& f, int m) {
  if (m < 1 || m > f.nvars()) throw std::out_of_range("restriction size out of range");
  Polynomial::TermMap t;
  for (const auto& [e, c] : f.terms()) {
    if (std::any_of(e.begin() + m, e.end(), [](int k) { return k != 0; })) continue;
    t.emplace(Exponents(e.begin(), e.begin() + m), c);
  }
  return Polynomial(m, std::move(t));
}

Extension trivariate_offdiag(const DiagonalMatrix& d1, const SymmetricMatrix& a12,
                             const std::vector<double>& diag_a13, const Polynomial& f, const SolveConfig& cfg) {
  if (d1.order() != 3 || a12.order() != 3 || diag_a13.size() != 3)
    throw std::invalid_argument("trivariate_offdiag needs 3 x 3 matrices");
  const Polynomial target = restrict_leading(f, 3);
  const double a = a12(0, 0), b = a12(1, 1), c = a12(2, 2);
  const double d = a12(0, 1), e = a12(0, 2), ff = a12(1, 2);
  const double l = diag_a13[0], m = diag_a13[1], n = diag_a13[2];
  const double d1v = d1.diag[0], d2v = d1.diag[1], d3v = d1.diag[2];

  Extension ext;
  ext.H = Matrix(3, 3);
  ext.H << d, e, ff,
           c * d - e * ff, b * e - d * ff, a * ff - d * e,
           d3v * d, d2v * e, d1v * ff;
  ext.H *= 2.0;
  ext.z = Vector(3);
  ext.z << a * (m + n) + b * (l + n) + c * (l + m) - target.coefficient({0, 1, 1}),
           l * (b * c - ff * ff) + m * (a * c - e * e) + n * (a * b - d * d) - target.coefficient({0, 2, 1}),
           d1v * (b * n + m * c) + d2v * (a * n + c * l) + d3v * (a * m + b * l) - target.coefficient({1, 1, 1});
  ext.linear = solve_linear(ext.H, ext.z, cfg.tol_linear * (1.0 + ext.z.cwiseAbs().maxCoeff()));
  ext.candidates = candidates_from(ext.linear, d1, {a12}, diag_a13, target, cfg);
  return ext;
}

Extension extend_cubic(const DiagonalMatrix& d1, const std::vector<SymmetricMatrix>& fixed,
                       const std::vector<double>& diag_am, const Polynomial& f, int m, const SolveConfig& cfg) {
  if (static_cast<int>(fixed.size()) != m - 2) throw std::invalid_argument("extend_cubic needs A12..A1,m-1");
  const int d = d1.order();
  const Polynomial target = restrict_leading(f, m);

  std::vector<Exponents> monomials;
  {
    std::vector<Exponents> mus;
    Exponents cur(static_cast<std::size_t>(m - 1), 0);
    monomials_upto(m - 1, d - 1, cur, 0, 0, mus);
    for (auto& mu : mus) {
      if (std::all_of(mu.begin() + 1, mu.end(), [](int k) { return k == 0; })) continue;
      mu.push_back(1);
      monomials.push_back(std::move(mu));
    }
  }

  std::vector<MatrixTemplate> templates;
  for (const auto& a : fixed) templates.push_back(MatrixTemplate::from(a));
  templates.push_back(offdiag_template(diag_am));
  const PolynomialSystem sys = coefficient_system(d1, templates, target, monomials);

  const int nu = static_cast<int>(sys.unknowns.size());
  Extension ext;
  ext.H = Matrix::Zero(static_cast<Eigen::Index>(monomials.size()), nu);
  ext.z = Vector::Zero(static_cast<Eigen::Index>(monomials.size()));
  for (std::size_t r = 0; r < sys.generators.size(); ++r) {
    for (const auto& [e, c] : sys.generators[r].terms()) {
      const int deg = total_degree(e);
      if (deg == 0) {
        ext.z(static_cast<Eigen::Index>(r)) = -c;
      } else if (deg == 1) {
        ext.H(static_cast<Eigen::Index>(r), std::find(e.begin(), e.end(), 1) - e.begin()) = c;
      } else {
        throw std::logic_error("extension equations are not linear");
      }
    }
  }
  const double scale = 1.0 + (ext.z.size() ? ext.z.cwiseAbs().maxCoeff() : 0.0);
  ext.linear = solve_linear(ext.H, ext.z, cfg.tol_linear * scale);
  ext.candidates = candidates_from(ext.linear, d1, fixed, diag_am, target, cfg);
  return ext;
}

SolveReport solve_multivariate(const Polynomial& f, const SolveConfig& cfg) {
  const int n = f.nvars();
  if (n < 3) throw std::invalid_argument("solve_multivariate needs at least 3 variables");
  require_monic(f);
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("polynomial must have degree at least 1");

  SolveReport report;
  std::vector<std::vector<double>> eigs;
  for (int i = 1; i <= n; ++i) {
    const ReciprocalEigs e = negative_reciprocal_eigs(restrict_axis(f, i), d);
    if (!e) {
      report.status = SolveStatus::NoRealEigs;
      report.diagnostics.push_back("restriction to axis " + std::to_string(i) + " has non-real roots");
      return report;
    }
    eigs.push_back(e.values);
  }

  if (!has_repeated(eigs[0])) return solve_with_distinct_d1(f, cfg, std::move(report), eigs);

  // Put an axis with distinct eigenvalues first, solve, and rotate back.
  int p = -1;
  for (int i = 1; i < n && p < 0; ++i)
    if (!has_repeated(eigs[static_cast<std::size_t>(i)])) p = i;
  if (p < 0) {
    report.status = SolveStatus::BudgetExhausted;
    report.diagnostics.push_back("every axis has repeated eigenvalues; not supported for n >= 3");
    return report;
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::swap(order[0], order[static_cast<std::size_t>(p)]);
  report.diagnostics.push_back("repeated eigenvalues on axis 1; solving with axes 1 and " + std::to_string(p + 1) +
                               " swapped");
  std::vector<std::vector<double>> peigs(eigs);
  std::swap(peigs[0], peigs[static_cast<std::size_t>(p)]);
  SolveReport inner = solve_with_distinct_d1(permute_variables(f, order), cfg, SolveReport{}, peigs);
  for (const auto& line : inner.diagnostics) report.diagnostics.push_back("  swapped: " + line);
  if (inner.status != SolveStatus::Found) {
    report.status = inner.status;
    return report;
  }
  std::vector<MSDR> reps;
  for (const auto& r : inner.representations) {
    // Matrices by new variable index; old variable 1 is new variable p.
    std::vector<Matrix> mats{r.D1.dense()};
    for (const auto& a : r.A) mats.push_back(a.dense());
    std::swap(mats[0], mats[static_cast<std::size_t>(p)]);
    const EigenDecomposition e = sym_eigen(SymmetricMatrix::from_dense(mats[0], 1e-9));
    std::vector<SymmetricMatrix> a;
    for (int i = 1; i < n; ++i)
      a.push_back(SymmetricMatrix::from_dense(e.vectors.transpose() * mats[static_cast<std::size_t>(i)] * e.vectors,
                                              1e-9));
    MSDR rep = make_verified(f, DiagonalMatrix{eigs[0]}, std::move(a), cfg.tol_verify);
    if (rep.verified) reps.push_back(std::move(rep));
  }
  if (reps.empty()) {
    report.status = SolveStatus::CompatibilityExhausted;
    return report;
  }
  report.representations = class_representatives(reps);
  report.status = SolveStatus::Found;
  return report;
}

SolveReport solve(const Polynomial& f, const SolveConfig& cfg) {
  if (f.nvars() == 1) {
    require_monic(f);
    SolveReport report;
    const int d = std::max(1, f.degree());
    const ReciprocalEigs e = negative_reciprocal_eigs(restrict_axis(f, 1), d);
    if (!e) {
      report.status = SolveStatus::NoRealEigs;
      report.diagnostics.push_back("restriction to axis 1 has non-real roots");
      return report;
    }
    report.representations.push_back(make_verified(f, DiagonalMatrix{e.values}, {}, cfg.tol_verify));
    report.status = SolveStatus::Found;
    return report;
  }
  if (f.nvars() == 2) return solve_bivariate(f, cfg);
  return solve_multivariate(f, cfg);
}

}  // namespace detrep
