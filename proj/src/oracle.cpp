#include "dwsvm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dwsvm {

namespace {

struct Box {
  Eigen::VectorXd center;
  Eigen::VectorXd halfwidth;
};

}  // namespace

SolveResult oracle_solve_small(const ObjectiveSpec& spec, int grid_points, int refine_rounds) {
  const Eigen::Index d = spec.dim();
  const Eigen::Index off = spec.has_axillary() ? 2 : 1;
  const Eigen::Index vars = off + d;
  if (vars > 4)
    throw std::invalid_argument("oracle_solve_small: supports at most 4 variables");
  if (grid_points < 3) throw std::invalid_argument("oracle_solve_small: grid_points must be >= 3");
  const bool ball = spec.constraint() == ConstraintMode::UnitBall;

  // Bounding box from the data range: intercepts are bounded by the largest
  // feature norm plus the widest kink offset; omega by the ball, or by the
  // penalty level set in penalized mode.
  double max_norm = 0.0;
  for (Eigen::Index i = 0; i < spec.data().n(); ++i)
    max_norm = std::max(max_norm, spec.data().features().row(i).norm());
  double max_kink = 0.0;
  for (const auto& t : spec.terms()) max_kink = std::max(max_kink, 1.0 / std::sqrt(t.c));
  const double b_intercept = max_norm + max_kink + 1.0;
  double b_omega = 1.0;
  if (!ball) {
    SolvePoint zero{0.0, 0.0, Eigen::VectorXd::Zero(d)};
    const double f0 = evaluate_objective(spec, zero);
    b_omega = spec.lambda() > 0.0 ? std::sqrt(2.0 * f0 / spec.lambda()) + 1.0 : b_intercept;
  }

  Box box;
  box.center = Eigen::VectorXd::Zero(vars);
  box.halfwidth.resize(vars);
  for (Eigen::Index j = 0; j < off; ++j) box.halfwidth[j] = b_intercept;
  for (Eigen::Index j = off; j < vars; ++j) box.halfwidth[j] = b_omega;
  const Eigen::VectorXd original_halfwidth = box.halfwidth;

  auto to_point = [&](const Eigen::VectorXd& z) {
    SolvePoint point;
    point.beta0 = off == 2 ? z[0] : 0.0;
    point.beta = z[off - 1];
    point.omega = z.tail(d);
    if (ball) {
      const double n = point.omega.norm();
      if (n > 1.0) point.omega /= n;
    }
    return point;
  };

  Eigen::VectorXd best = box.center;
  double best_value = evaluate_objective(spec, to_point(best));
  long evals = 1;

  for (int round = 0; round < refine_rounds; ++round) {
    std::vector<int> idx(static_cast<std::size_t>(vars), 0);
    Eigen::VectorXd z(vars);
    Eigen::VectorXd round_best = best;
    double round_best_value = best_value;
    std::vector<int> round_best_idx;
    bool done = false;
    while (!done) {
      for (Eigen::Index j = 0; j < vars; ++j) {
        const double frac =
            grid_points == 1 ? 0.5 : static_cast<double>(idx[static_cast<std::size_t>(j)]) /
                                         static_cast<double>(grid_points - 1);
        z[j] = box.center[j] + (2.0 * frac - 1.0) * box.halfwidth[j];
      }
      const double value = evaluate_objective(spec, to_point(z));
      ++evals;
      if (value < round_best_value) {
        round_best_value = value;
        round_best = z;
        round_best_idx = idx;
      }
      // odometer increment
      Eigen::Index j = 0;
      for (; j < vars; ++j) {
        if (++idx[static_cast<std::size_t>(j)] < grid_points) break;
        idx[static_cast<std::size_t>(j)] = 0;
      }
      done = j == vars;
    }

    if (round_best_value < best_value) {
      best_value = round_best_value;
      best = round_best;
    }

    // Shrink around the incumbent; if it sits on the box edge the basin may
    // lie outside, so grow back toward the original bounds instead.
    bool on_edge = false;
    for (std::size_t j = 0; j < round_best_idx.size(); ++j)
      if (round_best_idx[j] == 0 || round_best_idx[j] == grid_points - 1) on_edge = true;
    const double spacing_factor = 5.0 / static_cast<double>(grid_points - 1);
    double max_hw = 0.0;
    for (Eigen::Index j = 0; j < vars; ++j) {
      double hw = box.halfwidth[j];
      hw = on_edge ? std::min(2.0 * hw, original_halfwidth[j]) : hw * spacing_factor;
      box.halfwidth[j] = hw;
      max_hw = std::max(max_hw, hw);
    }
    box.center = best;
    for (Eigen::Index j = 0; j < vars; ++j) {
      box.center[j] = std::clamp(box.center[j], -original_halfwidth[j] + box.halfwidth[j],
                                 original_halfwidth[j] - box.halfwidth[j]);
    }
    if (max_hw < 1e-12) break;
  }

  const SolvePoint point = to_point(best);
  SolveResult result;
  if (off == 2) result.beta0 = point.beta0;
  result.beta = point.beta;
  result.omega = point.omega;
  result.objective = evaluate_objective(spec, point);
  result.converged = true;
  result.iterations = static_cast<int>(std::min<long>(evals, INT32_MAX));
  result.max_omega_norm = point.omega.norm();
  return result;
}

}  // namespace dwsvm
