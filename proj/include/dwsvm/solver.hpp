#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <vector>

#include "dwsvm/objective.hpp"

namespace dwsvm {

/// Solver knobs. Defaults suit unit tests; experiments relax tol to 1e-6.
struct SolverConfig {
  int max_iters = 50000;       // cap on polish iterations
  double tol = 1e-8;           // relative objective tolerance at the optimum
  int smoothing_stages = 10;   // hinge Huberization homotopy stages
  double smoothing_shrink = 0.125;  // geometric factor between stages
  int stage_iters = 400;       // FISTA iteration cap per stage
  int round_iters = 60;        // polish iterations between target updates
  std::uint64_t seed = 0;      // reserved for randomized restarts; unused
  bool record_trace = false;   // keep per-iteration best objective

  void validate() const;
};

struct SolveResult {
  std::optional<double> beta0;  // absent when the spec has no axillary terms
  double beta = 0.0;
  Eigen::VectorXd omega;
  double objective = 0.0;
  bool converged = false;
  int iterations = 0;
  double max_omega_norm = 0.0;        // largest ||omega|| seen across iterates
  std::vector<double> best_trace;     // filled when record_trace is set

  SolvePoint point() const {
    return SolvePoint{beta0.value_or(0.0), beta, omega};
  }
};

/// Minimize the spec over (beta0?, beta, omega) subject to ||omega||^2 <= 1.
///
/// Projected subgradient descent with Polyak-style adaptive-target steps,
/// accelerated by a smoothed-hinge homotopy (Huberization parameter shrinking
/// geometrically under FISTA); the final polish runs on the true objective.
/// Deterministic given config and init. Non-convergence within max_iters
/// yields converged=false with the best iterate, not an exception.
SolveResult solve_constrained(const ObjectiveSpec& spec, const SolverConfig& config = {},
                              const std::optional<SolvePoint>& init = std::nullopt);

/// Minimize the unconstrained penalized objective (spec must carry a ridge
/// penalty with lambda > 0). The caller may rescale (beta0, beta, omega) by
/// 1/||omega|| afterwards to recover a unit-norm direction.
SolveResult solve_penalized(const ObjectiveSpec& spec, const SolverConfig& config = {},
                            const std::optional<SolvePoint>& init = std::nullopt);

/// Exact global minimizer of beta -> sum_i hinge(y_i*(p_i + beta); c).
/// The objective is piecewise linear; the minimum is attained on an interval
/// with endpoints in the breakpoint set {y_i/sqrt(c) - p_i}. Returns the
/// midpoint of the minimizing interval; one-sided (single-class) inputs give
/// an unbounded interval whose finite endpoint is returned, capped at
/// +-(max|p_i| + 1/sqrt(c)).
double solve_intercept_1d(const Eigen::VectorXd& projections, const Eigen::VectorXi& labels,
                          double c);

}  // namespace dwsvm
