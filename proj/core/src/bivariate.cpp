#include "detrep/bivariate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detrep/equivalence.hpp"
#include "detrep/newton.hpp"
#include "detrep/roots.hpp"

namespace detrep {

namespace {

std::string join(const std::vector<double>& v) {
  std::ostringstream os;
  os.precision(10);
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

bool has_repeated(const std::vector<double>& desc) {
  for (std::size_t i = 0; i + 1 < desc.size(); ++i)
    if (std::abs(desc[i] - desc[i + 1]) <= kRootClusterTol * (1.0 + std::abs(desc[i]))) return true;
  return false;
}

bool all_equal(const std::vector<double>& desc) {
  return desc.empty() || std::abs(desc.front() - desc.back()) <= kRootClusterTol * (1.0 + std::abs(desc.front()));
}

int choose2(int d) { return d * (d - 1) / 2; }

// Generic number of real solutions of the off-diagonal system: the class
// count 2^C(d-1,2) times the orbit size 2^(d-1).
std::size_t expected_solutions(int d) {
  return std::size_t{1} << (choose2(d - 1) + d - 1);
}

Polynomial swap_variables(const Polynomial& f) {
  Polynomial::TermMap t;
  for (const auto& [e, c] : f.terms()) t.emplace(Exponents{e[1], e[0]}, c);
  return Polynomial(2, std::move(t));
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

SolveReport finish(SolveReport report, const std::vector<MSDR>& reps, SolveStatus empty_status) {
  if (reps.empty()) {
    report.status = empty_status;
    return report;
  }
  report.representations = class_representatives(reps);
  report.status = SolveStatus::Found;
  report.diagnostics.push_back("verified representations: " + std::to_string(reps.size()) + " in " +
                               std::to_string(report.classes()) + " classes");
  return report;
}

}  // namespace

EigenStep eigen_step(const Polynomial& f, int d) {
  EigenStep out;
  const ReciprocalEigs e1 = negative_reciprocal_eigs(restrict_axis(f, 1), d);
  if (!e1) {
    out.failed_axis = 1;
    return out;
  }
  const ReciprocalEigs e2 = negative_reciprocal_eigs(restrict_axis(f, 2), d);
  if (!e2) {
    out.failed_axis = 2;
    return out;
  }
  out.ok = true;
  out.D1 = DiagonalMatrix{e1.values};
  out.eigs2 = e2.values;
  return out;
}

Matrix diagonal_system_matrix(const DiagonalMatrix& d1) {
  const int d = d1.order();
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    std::vector<double> rest;
    for (int l = 0; l < d; ++l)
      if (l != i) rest.push_back(d1.diag[static_cast<std::size_t>(l)]);
    for (int j = 0; j < d; ++j) g(j, i) = elementary_symmetric(rest, j);
  }
  return g;
}

Vector diagonal_rhs(const Polynomial& f, int d) {
  Vector z(d);
  for (int j = 0; j < d; ++j) z(j) = f.coefficient({j, 1});
  return z;
}

LinearSolveResult diagonal_step(const Polynomial& f, const DiagonalMatrix& d1, double tol_linear) {
  const int d = d1.order();
  const Vector z = diagonal_rhs(f, d);
  const double scale = 1.0 + (d ? z.cwiseAbs().maxCoeff() : 0.0);
  return solve_linear(diagonal_system_matrix(d1), z, tol_linear * scale);
}

std::vector<Exponents> offdiag_monomials(int d) {
  std::vector<Exponents> out;
  for (int b = 2; b <= d; ++b)
    for (int a = 0; a <= d - 2 && a + b <= d; ++a) out.push_back({a, b});
  return out;
}

std::string offdiag_name(int i, int j) { return "u" + std::to_string(i + 1) + std::to_string(j + 1); }

PolynomialSystem offdiag_system(const Polynomial& f, const DiagonalMatrix& d1, const std::vector<double>& diag_a) {
  const int d = d1.order();
  MatrixTemplate t(d);
  for (int i = 0; i < d; ++i) {
    t.set(i, i, diag_a[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < d; ++j) t.set(i, j, offdiag_name(i, j));
  }
  return coefficient_system(d1, {t}, f, offdiag_monomials(d));
}

SymmetricMatrix assemble(const std::vector<double>& diag, const Vector& offdiag) {
  const int d = static_cast<int>(diag.size());
  SymmetricMatrix a = SymmetricMatrix::diagonal(diag);
  int k = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) a.set(i, j, offdiag(k++));
  return a;
}

std::optional<CubicSquares> cubic_squares(const PolynomialSystem& sys) {
  if (sys.unknowns.size() != 3) return std::nullopt;
  auto find = [&](const Exponents& m) -> const Polynomial* {
    for (std::size_t i = 0; i < sys.monomials.size(); ++i)
      if (sys.monomials[i] == m) return &sys.generators[i];
    return nullptr;
  };
  const Polynomial* g02 = find({0, 2});
  const Polynomial* g12 = find({1, 2});
  const Polynomial* g03 = find({0, 3});
  if (!g02 || !g12 || !g03) return std::nullopt;

  // Splits g into constant + squares + t * u12 u13 u23; false on other terms.
  auto split = [](const Polynomial& g, double& c0, Vector& sq, double& t) {
    c0 = 0.0;
    sq = Vector::Zero(3);
    t = 0.0;
    for (const auto& [e, c] : g.terms()) {
      if (e == Exponents{0, 0, 0}) {
        c0 = c;
      } else if (e == Exponents{1, 1, 1}) {
        t = c;
      } else if (total_degree(e) == 2 && std::count(e.begin(), e.end(), 2) == 1) {
        sq(std::find(e.begin(), e.end(), 2) - e.begin()) = c;
      } else {
        return false;
      }
    }
    return true;
  };

  CubicSquares cs;
  cs.M = Matrix(2, 3);
  cs.rhs = Vector(2);
  double c0 = 0.0, t = 0.0;
  Vector sq;
  const Polynomial* linear[2] = {g02, g12};
  for (int r = 0; r < 2; ++r) {
    if (!split(*linear[r], c0, sq, t) || t != 0.0) return std::nullopt;
    cs.M.row(r) = sq.transpose();
    cs.rhs(r) = -c0;
  }
  if (!split(*g03, cs.c0, cs.c, cs.t)) return std::nullopt;
  return cs;
}

UnivariatePolynomial cubic_in_k(const CubicSquares& cs, const Vector& particular, const Vector& gamma) {
  // prod_i (p_i + k g_i), coefficients by power of k.
  std::vector<double> prod{1.0};
  for (int i = 0; i < 3; ++i) {
    std::vector<double> next(prod.size() + 1, 0.0);
    for (std::size_t j = 0; j < prod.size(); ++j) {
      next[j] += prod[j] * particular(i);
      next[j + 1] += prod[j] * gamma(i);
    }
    prod = std::move(next);
  }
  const double l0 = cs.c0 + cs.c.dot(particular);
  const double l1 = cs.c.dot(gamma);
  std::vector<double> out(4, 0.0);
  for (std::size_t j = 0; j < 4; ++j) out[j] = cs.t * cs.t * prod[j];
  out[0] -= l0 * l0;
  out[1] -= 2.0 * l0 * l1;
  out[2] -= l1 * l1;
  return UnivariatePolynomial(std::move(out));
}

ClosedForm solve_cubic_closed_form(const PolynomialSystem& sys, double tol_linear, double tol_residual,
                                   const std::function<bool(const Vector&)>& accept) {
  ClosedForm cf;
  const auto cs = cubic_squares(sys);
  if (!cs) {
    cf.notes.push_back("closed form: generators not in squares form");
    return cf;
  }
  const double scale = 1.0 + cs->rhs.cwiseAbs().maxCoeff();
  cf.squares = solve_linear(cs->M, cs->rhs, tol_linear * scale);
  if (cf.squares.kind == LinearSolveKind::Inconsistent) {
    cf.applicable = true;
    cf.notes.push_back("closed form: squares system inconsistent");
    return cf;
  }
  if (cf.squares.kernel_basis.size() != 1) {
    cf.notes.push_back("closed form: squares system has a kernel of dimension " +
                       std::to_string(cf.squares.kernel_basis.size()));
    return cf;
  }
  const Vector& p = cf.squares.particular;
  const Vector& g = cf.squares.kernel_basis.front();

  std::vector<double> coeffs = cubic_in_k(*cs, p, g).coeffs();
  const double top = coeffs.empty() ? 0.0 : coeffs.back();
  double cmax = 0.0;
  for (double c : coeffs) cmax = std::max(cmax, std::abs(c));
  if (cmax == 0.0) {
    cf.notes.push_back("closed form: equation in k vanishes identically");
    return cf;
  }
  for (double& c : coeffs) c = c / cmax * (top < 0 ? -1.0 : 1.0);
  cf.cubic = UnivariatePolynomial(coeffs);
  cf.applicable = true;
  if (cf.cubic.degree() < 1) {
    cf.notes.push_back("closed form: equation in k has no roots");
    return cf;
  }
  for (const auto& r : real_roots(cf.cubic).roots) cf.k_roots.push_back(r.value);

  const CompiledSystem compiled(sys.generators);
  for (double k : cf.k_roots) {
    Vector s = p + k * g;
    const double sscale = 1.0 + s.cwiseAbs().maxCoeff();
    if (s.minCoeff() < -1e-7 * sscale) {
      cf.notes.push_back("k=" + std::to_string(k) + ": negative square, rejected");
      continue;
    }
    s = s.cwiseMax(0.0);
    const Vector mag = s.cwiseSqrt();
    const double l = cs->c0 + cs->c.dot(s);
    int kept = 0;
    for (int se : {1, -1}) {
      for (int sf : {1, -1}) {
        const Vector x = (Vector(3) << mag(0), se * mag(1), sf * mag(2)).finished();
        const double prod = x(0) * x(1) * x(2);
        if (std::abs(cs->t * prod + l) > 1e-6 * (1.0 + std::abs(l) + std::abs(cs->t * prod))) continue;
        const auto polished = newton_from(compiled, x, 20, tol_residual);
        if (!polished || (*polished - x).cwiseAbs().maxCoeff() > 1e-4 * (1.0 + x.cwiseAbs().maxCoeff())) continue;
        bool dup = false;
        for (const auto& y : cf.solutions)
          if ((y - *polished).cwiseAbs().maxCoeff() <= 1e-6) dup = true;
        if (dup || !accept(*polished)) continue;
        cf.solutions.push_back(*polished);
        ++kept;
      }
    }
    cf.notes.push_back("k=" + std::to_string(k) + ": " + std::to_string(kept) + " sign patterns verified");
  }
  return cf;
}

namespace {

SolveReport solve_distinct(const Polynomial& f, const EigenStep& es, const SolveConfig& cfg, SolveReport report) {
  const int d = es.D1.order();
  const LinearSolveResult diag = diagonal_step(f, es.D1, cfg.tol_linear);
  if (diag.kind == LinearSolveKind::Inconsistent) {
    report.diagnostics.push_back("diagonal system inconsistent, residual " + std::to_string(diag.residual));
    report.status = SolveStatus::DiagInconsistent;
    return report;
  }
  const std::vector<double> diag_a(diag.particular.data(), diag.particular.data() + d);
  report.diagnostics.push_back("diag A12: " + join(diag_a));

  std::vector<MSDR> reps;
  auto accept = [&](const Vector& x) {
    MSDR rep = make_verified(f, es.D1, {assemble(diag_a, x)}, cfg.tol_verify);
    if (rep.verified) reps.push_back(std::move(rep));
    return rep.verified;
  };

  if (d == 1) {
    accept(Vector(0));
    return finish(std::move(report), reps, SolveStatus::NoRealSolution);
  }

  const PolynomialSystem sys = offdiag_system(f, es.D1, diag_a);
  report.diagnostics.push_back("generators: " + std::to_string(sys.generators.size()) + " in " +
                               std::to_string(sys.unknowns.size()) + " unknowns");
  const double tol_residual = 1e-10 * (1.0 + f.max_abs_coefficient());

  if (d == 3 && cfg.closed_form) {
    const ClosedForm cf = solve_cubic_closed_form(sys, cfg.tol_linear, tol_residual, accept);
    report.diagnostics.insert(report.diagnostics.end(), cf.notes.begin(), cf.notes.end());
    if (cf.applicable) {
      report.diagnostics.push_back("closed form: cubic in k " + join(cf.cubic.coeffs()) + ", real roots " +
                                   join(cf.k_roots));
      return finish(std::move(report), reps, SolveStatus::NoRealSolution);
    }
  }

  NewtonConfig nc;
  nc.starts = cfg.newton_starts > 0 ? cfg.newton_starts : 200 * choose2(d);
  nc.max_iter = cfg.max_iter;
  nc.radius = 1.0 + max_abs(es.eigs2);
  nc.seed = cfg.seed;
  nc.tol_residual = tol_residual;
  nc.stop_after = expected_solutions(d);
  const NewtonResult nr = solve_newton(CompiledSystem(sys.generators), nc, accept);
  report.diagnostics.push_back("newton: starts " + std::to_string(nr.stats.starts_run) + ", converged " +
                               std::to_string(nr.stats.converged) + ", rejected " +
                               std::to_string(nr.stats.rejected) + ", solutions " +
                               std::to_string(nr.solutions.size()));
  return finish(std::move(report), reps, SolveStatus::BudgetExhausted);
}

// Repeated eigenvalues in D1 and in the x2 axis: every entry of A12 unknown.
SolveReport solve_enlarged(const Polynomial& f, const EigenStep& es, const SolveConfig& cfg, SolveReport report) {
  const int d = es.D1.order();
  MatrixTemplate t(d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) t.set(i, j, offdiag_name(i, j));
  std::vector<Exponents> monomials;
  for (int b = 1; b <= d; ++b)
    for (int a = 0; a + b <= d; ++a) monomials.push_back({a, b});
  const PolynomialSystem sys = coefficient_system(es.D1, {t}, f, monomials);
  report.diagnostics.push_back("repeated eigenvalues on both axes: " + std::to_string(sys.unknowns.size()) +
                               " unknowns");

  std::vector<MSDR> reps;
  auto accept = [&](const Vector& x) {
    SymmetricMatrix a(d);
    int k = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) a.set(i, j, x(k++));
    MSDR rep = make_verified(f, es.D1, {a}, cfg.tol_verify);
    if (rep.verified) reps.push_back(std::move(rep));
    return rep.verified;
  };
  NewtonConfig nc;
  nc.starts = cfg.newton_starts > 0 ? cfg.newton_starts : 200 * std::max(1, choose2(d));
  nc.max_iter = cfg.max_iter;
  nc.radius = 1.0 + max_abs(es.eigs2);
  nc.seed = cfg.seed;
  nc.tol_residual = 1e-10 * (1.0 + f.max_abs_coefficient());
  nc.stop_after = expected_solutions(d);
  const NewtonResult nr = solve_newton(CompiledSystem(sys.generators), nc, accept);
  report.diagnostics.push_back("newton: starts " + std::to_string(nr.stats.starts_run) + ", solutions " +
                               std::to_string(nr.solutions.size()));
  return finish(std::move(report), reps, SolveStatus::BudgetExhausted);
}

}  // namespace

SolveReport solve_bivariate(const Polynomial& f, const SolveConfig& cfg) {
  if (f.nvars() != 2) throw std::invalid_argument("solve_bivariate needs a polynomial in 2 variables");
  require_monic(f);
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("polynomial must have degree at least 1");

  SolveReport report;
  const EigenStep es = eigen_step(f, d);
  if (!es.ok) {
    report.status = SolveStatus::NoRealEigs;
    report.diagnostics.push_back("restriction to axis " + std::to_string(es.failed_axis) +
                                 " has non-real roots");
    return report;
  }
  report.diagnostics.push_back("eigs x1: " + join(es.D1.diag));
  report.diagnostics.push_back("eigs x2: " + join(es.eigs2));

  if (!has_repeated(es.D1.diag)) return solve_distinct(f, es, cfg, std::move(report));

  if (all_equal(es.D1.diag)) {
    // det((1 + l x1) I + x2 A) depends only on the eigenvalues of A.
    report.diagnostics.push_back("D1 is scalar; trying A12 = diag(eigs x2)");
    std::vector<MSDR> reps;
    MSDR rep = make_verified(f, es.D1, {SymmetricMatrix::diagonal(es.eigs2)}, cfg.tol_verify);
    if (rep.verified) reps.push_back(std::move(rep));
    return finish(std::move(report), reps, SolveStatus::NoRealSolution);
  }

  if (!has_repeated(es.eigs2)) {
    report.diagnostics.push_back("repeated eigenvalues on axis 1; solving with the axes swapped");
    SolveReport swapped = solve_bivariate(swap_variables(f), cfg);
    for (const auto& line : swapped.diagnostics) report.diagnostics.push_back("  swapped: " + line);
    if (swapped.status != SolveStatus::Found) {
      report.status = swapped.status;
      return report;
    }
    std::vector<MSDR> reps;
    for (const auto& r : swapped.representations) {
      // det(I + x2 D2 + x1 B) with B = W L W^T becomes det(I + x1 L + x2 W^T D2 W).
      const EigenDecomposition e = sym_eigen(r.A.front());
      const Matrix a = e.vectors.transpose() * DiagonalMatrix{es.eigs2}.dense() * e.vectors;
      MSDR rep = make_verified(f, es.D1, {SymmetricMatrix::from_dense(a, 1e-9)}, cfg.tol_verify);
      if (rep.verified) reps.push_back(std::move(rep));
    }
    return finish(std::move(report), reps, SolveStatus::BudgetExhausted);
  }

  return solve_enlarged(f, es, cfg, std::move(report));
}

}  // namespace detrep
