#pragma once

#include <functional>

#include "fermat/core.hpp"
#include "fermat/weiszfeld.hpp"

namespace fermat::detail {

using FixedPointMap = std::function<Point(const Point&, const AnchorSet&)>;

// Shared iteration loop for the L2 and L^p solvers. `map` is applied to the
// canonicalized problem; p selects the objective, the anchor test and the
// step-off direction.
SolveResult run_fixed_point(const AnchorSet& problem, double p, const SolverConfig& config,
                            const FixedPointMap& map);

}  // namespace fermat::detail
