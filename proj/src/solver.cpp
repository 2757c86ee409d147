#include "dwsvm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace dwsvm {

void SolverConfig::validate() const {
  if (max_iters < 1) throw std::invalid_argument("SolverConfig: max_iters must be >= 1");
  if (!std::isfinite(tol) || tol <= 0.0)
    throw std::invalid_argument("SolverConfig: tol must be positive");
  if (smoothing_stages < 1 || stage_iters < 1 || round_iters < 1)
    throw std::invalid_argument("SolverConfig: iteration knobs must be >= 1");
  if (!(smoothing_shrink > 0.0) || !(smoothing_shrink < 1.0))
    throw std::invalid_argument("SolverConfig: smoothing_shrink must lie in (0, 1)");
}

namespace {

// Flattened problem: variables z = [beta0?, beta, omega...], one row per
// term with A.row(t) = y_t * x_t.
struct Problem {
  Eigen::MatrixXd A;
  Eigen::VectorXd y;
  Eigen::VectorXi slot;
  Eigen::VectorXd w;
  Eigen::VectorXd c;
  Eigen::VectorXd kink;    // 1/sqrt(c)
  Eigen::VectorXd root_c;  // sqrt(c)
  std::vector<LossKind> kind;
  Eigen::Index d = 0;
  Eigen::Index off = 1;  // intercept slots ahead of omega
  bool ball = true;
  double lambda = 0.0;
  bool any_hinge = false;
};

Problem build_problem(const ObjectiveSpec& spec) {
  const auto& data = spec.data();
  const Eigen::Index m = static_cast<Eigen::Index>(spec.terms().size());
  Problem p;
  p.d = spec.dim();
  p.off = spec.has_axillary() ? 2 : 1;
  p.ball = spec.constraint() == ConstraintMode::UnitBall;
  p.lambda = spec.constraint() == ConstraintMode::Penalty ? spec.lambda() : 0.0;
  p.A.resize(m, p.d);
  p.y.resize(m);
  p.slot.resize(m);
  p.w.resize(m);
  p.c.resize(m);
  p.kink.resize(m);
  p.root_c.resize(m);
  p.kind.resize(static_cast<std::size_t>(m));
  for (Eigen::Index t = 0; t < m; ++t) {
    const auto& term = spec.terms()[static_cast<std::size_t>(t)];
    const double y = static_cast<double>(data.labels()[term.observation]);
    p.A.row(t) = y * data.features().row(term.observation);
    p.y[t] = y;
    p.slot[t] = term.intercept == InterceptRole::Axillary ? 0 : static_cast<int>(p.off - 1);
    p.w[t] = term.weight;
    p.c[t] = term.c;
    p.root_c[t] = std::sqrt(term.c);
    p.kink[t] = 1.0 / p.root_c[t];
    p.kind[static_cast<std::size_t>(t)] = term.kind;
    if (term.kind == LossKind::Hinge && term.weight > 0.0) p.any_hinge = true;
  }
  return p;
}

Eigen::VectorXd compute_margins(const Problem& p, const Eigen::VectorXd& z) {
  Eigen::VectorXd u = p.A * z.tail(p.d);
  for (Eigen::Index t = 0; t < u.size(); ++t) u[t] += p.y[t] * z[p.slot[t]];
  return u;
}

double true_value(const Problem& p, const Eigen::VectorXd& u, const Eigen::VectorXd& z) {
  double total = 0.0;
  for (Eigen::Index t = 0; t < u.size(); ++t) {
    if (p.w[t] == 0.0) continue;
    double v;
    if (p.kind[static_cast<std::size_t>(t)] == LossKind::Hinge)
      v = u[t] <= p.kink[t] ? p.root_c[t] - p.c[t] * u[t] : 0.0;
    else
      v = u[t] <= p.kink[t] ? 2.0 * p.root_c[t] - p.c[t] * u[t] : 1.0 / u[t];
    total += p.w[t] * v;
  }
  if (p.lambda > 0.0) total += 0.5 * p.lambda * z.tail(p.d).squaredNorm();
  return total;
}

// Hinge terms Huberized with parameter mu (mu <= 0 means the exact loss).
double smoothed_value(const Problem& p, const Eigen::VectorXd& u, const Eigen::VectorXd& z,
                      double mu) {
  if (mu <= 0.0) return true_value(p, u, z);
  double total = 0.0;
  for (Eigen::Index t = 0; t < u.size(); ++t) {
    if (p.w[t] == 0.0) continue;
    double v;
    if (p.kind[static_cast<std::size_t>(t)] == LossKind::Hinge) {
      const double gap = p.kink[t] - u[t];
      if (gap <= 0.0)
        v = 0.0;
      else if (gap <= mu)
        v = p.c[t] * gap * gap / (2.0 * mu);
      else
        v = p.c[t] * (gap - 0.5 * mu);
    } else {
      v = u[t] <= p.kink[t] ? 2.0 * p.root_c[t] - p.c[t] * u[t] : 1.0 / u[t];
    }
    total += p.w[t] * v;
  }
  if (p.lambda > 0.0) total += 0.5 * p.lambda * z.tail(p.d).squaredNorm();
  return total;
}

// Gradient of the smoothed objective (mu <= 0: subgradient of the true one,
// with the documented -c tie-break at the hinge kink).
Eigen::VectorXd gradient(const Problem& p, const Eigen::VectorXd& u, const Eigen::VectorXd& z,
                         double mu) {
  Eigen::VectorXd coef(u.size());
  for (Eigen::Index t = 0; t < u.size(); ++t) {
    if (p.w[t] == 0.0) {
      coef[t] = 0.0;
      continue;
    }
    double slope;
    if (p.kind[static_cast<std::size_t>(t)] == LossKind::Hinge) {
      if (mu > 0.0) {
        const double gap = p.kink[t] - u[t];
        slope = -p.c[t] * std::clamp(gap / mu, 0.0, 1.0);
      } else {
        slope = u[t] <= p.kink[t] ? -p.c[t] : 0.0;
      }
    } else {
      slope = u[t] <= p.kink[t] ? -p.c[t] : -1.0 / (u[t] * u[t]);
    }
    coef[t] = p.w[t] * slope;
  }
  Eigen::VectorXd g = Eigen::VectorXd::Zero(p.off + p.d);
  g.tail(p.d) = p.A.transpose() * coef;
  for (Eigen::Index t = 0; t < u.size(); ++t) g[p.slot[t]] += coef[t] * p.y[t];
  if (p.lambda > 0.0) g.tail(p.d) += p.lambda * z.tail(p.d);
  return g;
}

void project(const Problem& p, Eigen::VectorXd& z) {
  if (!p.ball) return;
  const double n = z.tail(p.d).norm();
  if (n > 1.0) z.tail(p.d) /= n;
}

// Largest eigenvalue of sum_t kappa_t a_t a_t' (a_t the augmented row) by
// power iteration; kappa is the per-term curvature bound.
double curvature_bound(const Problem& p, const Eigen::VectorXd& kappa) {
  const Eigen::Index n = p.off + p.d;
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double lam = 0.0;
  for (int it = 0; it < 25; ++it) {
    // s_t = kappa_t * (a_t' v)
    Eigen::VectorXd s = p.A * v.tail(p.d);
    for (Eigen::Index t = 0; t < s.size(); ++t) s[t] += p.y[t] * v[p.slot[t]];
    s.array() *= kappa.array();
    Eigen::VectorXd mv = Eigen::VectorXd::Zero(n);
    mv.tail(p.d) = p.A.transpose() * s;
    for (Eigen::Index t = 0; t < s.size(); ++t) mv[p.slot[t]] += s[t] * p.y[t];
    const double norm = mv.norm();
    if (norm <= 0.0) return 0.0;
    lam = v.dot(mv);
    v = mv / norm;
  }
  return std::max(lam, 0.0);
}

struct Workspace {
  Eigen::VectorXd x_best;
  double f_best = std::numeric_limits<double>::infinity();
  int iterations = 0;
  double max_omega_norm = 0.0;
  std::vector<double>* trace = nullptr;

  void observe(const Problem& p, const Eigen::VectorXd& z, double f) {
    if (f < f_best) {
      f_best = f;
      x_best = z;
    }
    max_omega_norm = std::max(max_omega_norm, z.tail(p.d).norm());
    if (trace) trace->push_back(f_best);
  }
};

// Accelerated projected gradient on the mu-smoothed objective, with
// function-value adaptive restart. Returns when the smoothed objective's
// relative change over a 10-iteration window drops below rtol or the
// iteration caps are hit.
void fista_stage(const Problem& p, double mu, double rtol, int iter_cap, int total_cap,
                 Eigen::VectorXd& z, Workspace& ws) {
  Eigen::VectorXd kappa(p.w.size());
  for (Eigen::Index t = 0; t < kappa.size(); ++t) {
    const bool hinge = p.kind[static_cast<std::size_t>(t)] == LossKind::Hinge;
    const double curv = hinge ? (mu > 0.0 ? p.c[t] / mu : 0.0) : 2.0 * p.c[t] * p.root_c[t];
    kappa[t] = p.w[t] * curv;
  }
  double L = curvature_bound(p, kappa) + p.lambda;
  if (L <= 0.0) return;  // flat smoothed objective; nothing to do
  L *= 1.05;

  Eigen::VectorXd v = z;
  double t_mom = 1.0;
  double f_prev = smoothed_value(p, compute_margins(p, z), z, mu);
  double window_ref = f_prev;
  for (int it = 0; it < iter_cap && ws.iterations < total_cap; ++it) {
    const Eigen::VectorXd uv = compute_margins(p, v);
    const Eigen::VectorXd g = gradient(p, uv, v, mu);
    Eigen::VectorXd z_new = v - g / L;
    project(p, z_new);
    const Eigen::VectorXd u_new = compute_margins(p, z_new);
    const double f_smooth = smoothed_value(p, u_new, z_new, mu);
    ws.observe(p, z_new, true_value(p, u_new, z_new));
    ++ws.iterations;

    if (f_smooth > f_prev) {  // adaptive restart
      t_mom = 1.0;
      v = z_new;
    } else {
      const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_mom * t_mom));
      v = z_new + ((t_mom - 1.0) / t_next) * (z_new - z);
      t_mom = t_next;
    }
    z = z_new;
    f_prev = f_smooth;

    if ((it + 1) % 10 == 0) {
      const double scale = 1.0 + std::abs(f_smooth);
      if (window_ref - f_smooth < rtol * scale) break;
      window_ref = f_smooth;
    }
  }
}

// Polyak-target projected subgradient polish on the true objective. The
// target sits gamma below the incumbent; rounds that fail to cut the gap
// halve gamma, and the solve is declared converged once gamma falls below
// a fixed fraction of tol.
bool polyak_polish(const Problem& p, const SolverConfig& config, Eigen::VectorXd& z,
                   Workspace& ws) {
  const double gscale = p.w.dot(p.c) + p.lambda + 1.0;
  const double eps_g2 = 1e-28 * gscale * gscale;
  auto scale = [&] { return 1.0 + std::abs(ws.f_best); };
  double gamma = std::max(1e-4 * scale(), 8.0 * config.tol * scale());
  z = ws.x_best;

  while (ws.iterations < config.max_iters) {
    if (gamma <= 0.125 * config.tol * scale()) return true;
    const double f_round_start = ws.f_best;
    for (int k = 0; k < config.round_iters && ws.iterations < config.max_iters; ++k) {
      const Eigen::VectorXd u = compute_margins(p, z);
      const double fx = true_value(p, u, z);
      ws.observe(p, z, fx);
      const Eigen::VectorXd g = gradient(p, u, z, -1.0);
      const double gn2 = g.squaredNorm();
      if (gn2 <= eps_g2) return true;  // zero subgradient at a feasible point
      const double target = ws.f_best - gamma;
      double step = (fx - target) / gn2;
      const double cap = 1e4 * (1.0 + z.norm()) / std::sqrt(gn2);
      step = std::min(step, cap);
      z -= step * g;
      project(p, z);
      ++ws.iterations;
    }
    {
      const Eigen::VectorXd u = compute_margins(p, z);
      ws.observe(p, z, true_value(p, u, z));
    }
    if (f_round_start - ws.f_best < 0.5 * gamma) gamma *= 0.5;
    z = ws.x_best;
  }
  return gamma <= 0.125 * config.tol * scale();
}

Eigen::VectorXd initial_point(const ObjectiveSpec& spec, const Problem& p,
                              const std::optional<SolvePoint>& init) {
  Eigen::VectorXd z = Eigen::VectorXd::Zero(p.off + p.d);
  if (init) {
    if (init->omega.size() != p.d)
      throw std::invalid_argument("solve: init omega dimension mismatch");
    if (p.off == 2) z[0] = init->beta0;
    z[p.off - 1] = init->beta;
    z.tail(p.d) = init->omega;
    project(p, z);
    return z;
  }
  // scaled mean-difference warm start
  const auto& data = spec.data();
  const Eigen::Index n_plus = data.count_positive();
  const Eigen::Index n_minus = data.count_negative();
  Eigen::VectorXd omega;
  double beta = 0.0;
  if (n_plus > 0 && n_minus > 0) {
    Eigen::VectorXd mean_plus = Eigen::VectorXd::Zero(p.d);
    Eigen::VectorXd mean_minus = Eigen::VectorXd::Zero(p.d);
    for (Eigen::Index i = 0; i < data.n(); ++i) {
      if (data.labels()[i] == 1)
        mean_plus += data.features().row(i).transpose();
      else
        mean_minus += data.features().row(i).transpose();
    }
    mean_plus /= static_cast<double>(n_plus);
    mean_minus /= static_cast<double>(n_minus);
    Eigen::VectorXd diff = mean_plus - mean_minus;
    const double norm = diff.norm();
    if (norm > 1e-12) {
      omega = diff / norm;
      beta = -omega.dot(0.5 * (mean_plus + mean_minus));
    }
  }
  if (omega.size() == 0) {
    omega = Eigen::VectorXd::Zero(p.d);
    omega[0] = 1.0;
  }
  if (p.off == 2) z[0] = beta;
  z[p.off - 1] = beta;
  z.tail(p.d) = omega;
  return z;
}

SolveResult run_solve(const ObjectiveSpec& spec, const SolverConfig& config,
                      const std::optional<SolvePoint>& init) {
  config.validate();
  const Problem p = build_problem(spec);
  Eigen::VectorXd z = initial_point(spec, p, init);

  SolveResult result;
  Workspace ws;
  if (config.record_trace) ws.trace = &result.best_trace;
  ws.observe(p, z, true_value(p, compute_margins(p, z), z));

  const int fista_cap = std::max(1, config.max_iters / 2);
  const double stage_rtol = std::max(1e-13, 0.02 * config.tol);
  if (p.any_hinge) {
    double mu0 = 0.0;
    for (Eigen::Index t = 0; t < p.kink.size(); ++t)
      if (p.kind[static_cast<std::size_t>(t)] == LossKind::Hinge && p.w[t] > 0.0)
        mu0 = std::max(mu0, p.kink[t]);
    double mu = 0.5 * mu0;
    for (int stage = 0; stage < config.smoothing_stages && ws.iterations < fista_cap; ++stage) {
      fista_stage(p, mu, stage_rtol, config.stage_iters, fista_cap, z, ws);
      mu *= config.smoothing_shrink;
    }
    z = ws.x_best;
    result.converged = polyak_polish(p, config, z, ws);
  } else {
    // no hinge terms: the objective is C^1, run accelerated stages on the
    // exact loss and finish with the same polish
    for (int stage = 0; stage < config.smoothing_stages && ws.iterations < fista_cap; ++stage)
      fista_stage(p, -1.0, stage_rtol, config.stage_iters, fista_cap, z, ws);
    z = ws.x_best;
    result.converged = polyak_polish(p, config, z, ws);
  }

  const Eigen::VectorXd& best = ws.x_best;
  SolvePoint point;
  if (p.off == 2) result.beta0 = best[0];
  point.beta0 = p.off == 2 ? best[0] : 0.0;
  result.beta = best[p.off - 1];
  point.beta = result.beta;
  result.omega = best.tail(p.d);
  point.omega = result.omega;
  result.objective = evaluate_objective(spec, point);
  result.iterations = ws.iterations;
  result.max_omega_norm = ws.max_omega_norm;
  return result;
}

}  // namespace

SolveResult solve_constrained(const ObjectiveSpec& spec, const SolverConfig& config,
                              const std::optional<SolvePoint>& init) {
  if (spec.constraint() != ConstraintMode::UnitBall)
    throw std::invalid_argument("solve_constrained: spec must use the unit-ball constraint");
  return run_solve(spec, config, init);
}

SolveResult solve_penalized(const ObjectiveSpec& spec, const SolverConfig& config,
                            const std::optional<SolvePoint>& init) {
  if (spec.constraint() != ConstraintMode::Penalty || spec.lambda() <= 0.0)
    throw std::invalid_argument("solve_penalized: spec must carry a penalty with lambda > 0");
  return run_solve(spec, config, init);
}

double solve_intercept_1d(const Eigen::VectorXd& projections, const Eigen::VectorXi& labels,
                          double c) {
  const Eigen::Index n = projections.size();
  if (n < 1) throw std::invalid_argument("solve_intercept_1d: empty input");
  if (labels.size() != n) throw std::invalid_argument("solve_intercept_1d: size mismatch");
  if (!std::isfinite(c) || c <= 0.0)
    throw std::invalid_argument("solve_intercept_1d: c must be positive");
  const double kink = 1.0 / std::sqrt(c);

  // The objective sum_i hinge(y_i (p_i + beta); c) is piecewise linear in
  // beta. Sweeping breakpoints left to right, every breakpoint adds +c to
  // the slope, which starts at -c * n_plus; the slope is zero exactly on the
  // segment after n_plus breakpoints.
  Eigen::Index n_plus = 0;
  std::vector<double> breaks;
  breaks.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    if (labels[i] != 1 && labels[i] != -1)
      throw std::invalid_argument("solve_intercept_1d: labels must be +1 or -1");
    if (labels[i] == 1) {
      ++n_plus;
      breaks.push_back(kink - projections[i]);
    } else {
      breaks.push_back(-kink - projections[i]);
    }
  }
  std::sort(breaks.begin(), breaks.end());

  const double cap = projections.cwiseAbs().maxCoeff() + kink;
  double beta;
  if (n_plus == 0) {
    beta = breaks.front();  // minimizing interval (-inf, first breakpoint]
  } else if (n_plus == static_cast<Eigen::Index>(n)) {
    beta = breaks.back();  // minimizing interval [last breakpoint, +inf)
  } else {
    beta = 0.5 * (breaks[static_cast<std::size_t>(n_plus - 1)] +
                  breaks[static_cast<std::size_t>(n_plus)]);
  }
  return std::clamp(beta, -cap, cap);
}

}  // namespace dwsvm
