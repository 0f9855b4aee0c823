#include "detrep/newton.hpp"

#include <cmath>
#include <random>

namespace detrep {

CompiledSystem::CompiledSystem(const std::vector<Polynomial>& generators)
    : nvars_(generators.empty() ? 0 : generators.front().nvars()) {
  for (const auto& g : generators) {
    if (g.nvars() != nvars_) throw NvarsMismatch(g.nvars(), nvars_);
    f_.push_back(flatten(g));
    std::vector<Flat> row;
    for (int v = 1; v <= nvars_; ++v) row.push_back(flatten(g.derivative(v)));
    jac_.push_back(std::move(row));
  }
}

CompiledSystem::Flat CompiledSystem::flatten(const Polynomial& p) {
  Flat out;
  for (const auto& [e, c] : p.terms()) {
    Term t{c, {}};
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) t.powers.emplace_back(static_cast<int>(v), e[v]);
    out.push_back(std::move(t));
  }
  return out;
}

double CompiledSystem::eval(const Flat& f, const Vector& x) {
  double s = 0.0;
  for (const auto& t : f) {
    double m = t.coef;
    for (const auto& [v, k] : t.powers) {
      const double xv = x(v);
      for (int i = 0; i < k; ++i) m *= xv;
    }
    s += m;
  }
  return s;
}

Vector CompiledSystem::value(const Vector& x) const {
  Vector out(equations());
  for (int i = 0; i < equations(); ++i) out(i) = eval(f_[static_cast<std::size_t>(i)], x);
  return out;
}

Matrix CompiledSystem::jacobian(const Vector& x) const {
  Matrix out(equations(), nvars_);
  for (int i = 0; i < equations(); ++i)
    for (int j = 0; j < nvars_; ++j)
      out(i, j) = eval(jac_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], x);
  return out;
}

std::optional<Vector> newton_from(const CompiledSystem& sys, Vector x, int max_iter, double tol_residual) {
  Vector fx = sys.value(x);
  double norm2 = fx.squaredNorm();
  for (int it = 0; it < max_iter; ++it) {
    if (fx.cwiseAbs().maxCoeff() <= tol_residual) return x;
    const Matrix j = sys.jacobian(x);
    const Vector step = j.completeOrthogonalDecomposition().solve(-fx);
    if (!step.allFinite()) return std::nullopt;

    // Armijo backtracking on ||F||^2.
    double t = 1.0;
    bool moved = false;
    while (t >= 1.0 / 1024) {
      const Vector trial = x + t * step;
      const Vector ft = sys.value(trial);
      const double n2 = ft.squaredNorm();
      if (std::isfinite(n2) && n2 <= (1.0 - 1e-4 * t) * norm2) {
        x = trial;
        fx = ft;
        norm2 = n2;
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) break;
  }
  if (fx.cwiseAbs().maxCoeff() <= tol_residual) return x;
  return std::nullopt;
}

NewtonResult solve_newton(const CompiledSystem& sys, const NewtonConfig& cfg,
                          const std::function<bool(const Vector&)>& accept) {
  NewtonResult out;
  const int n = sys.unknowns();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uni(-cfg.radius, cfg.radius);

  for (int s = 0; s < cfg.starts; ++s) {
    if (cfg.stop_after > 0 && out.solutions.size() >= cfg.stop_after) break;
    Vector x0(n);
    for (int i = 0; i < n; ++i) x0(i) = uni(rng);
    ++out.stats.starts_run;

    auto x = newton_from(sys, x0, cfg.max_iter, cfg.tol_residual);
    if (!x) continue;
    ++out.stats.converged;
    bool duplicate = false;
    for (const auto& y : out.solutions)
      if ((y - *x).cwiseAbs().maxCoeff() <= cfg.dedupe) duplicate = true;
    if (duplicate) continue;
    if (!accept(*x)) {
      ++out.stats.rejected;
      continue;
    }
    out.solutions.push_back(*x);
  }
  return out;
}

}  // namespace detrep
