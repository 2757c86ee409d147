#pragma once

#include "dwsvm/solver.hpp"

namespace dwsvm {

/// Brute-force reference solver for tiny instances (total variable count
/// d + intercepts <= 4): exhaustive grid search over a bounded box followed
/// by iterated local grid refinement. Independent of the iterative solve
/// path; used only by tests to pin solver accuracy.
///
/// The box is [-B, B] per coordinate with B derived from the data range:
/// B = 1 for omega coordinates (ball constraint; grid points are projected
/// onto the ball) and B = max_i ||x_i|| + max_t 1/sqrt(c_t) + 1 for the
/// intercepts. Penalized specs bound omega by sqrt(2 f(0)/lambda) + 1
/// instead.
///
/// grid_points is the number of samples per coordinate per refinement round.
/// Throws std::invalid_argument when the variable count exceeds 4.
SolveResult oracle_solve_small(const ObjectiveSpec& spec, int grid_points = 11,
                               int refine_rounds = 70);

}  // namespace dwsvm
