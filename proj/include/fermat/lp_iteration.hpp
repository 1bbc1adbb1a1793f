#pragma once

#include "fermat/core.hpp"
#include "fermat/weiszfeld.hpp"

namespace fermat {

/// One step of the generalized reweighting map for 1 < p < inf.
///
/// With D_i = ||M_i - x||_p and u_ij = k_i |m_ij - x_j|^(p-2) D_i^(1-p), the
/// next iterate is x_j = sum_i u_ij m_ij / sum_i u_ij. Fixed points are
/// exactly the zeros of the gradient; at p = 2 the map is Weiszfeld's.
/// For p < 2, coordinate gaps are clamped below at the coincidence tolerance
/// so a shared coordinate cannot produce an infinite weight.
Point lp_map(const Point& x, const AnchorSet& problem, double p);

/// Iterates lp_map (or weiszfeld_map for NormKind::Two) with the same stop
/// rules and anchor handling as solve_l2. One and Infinity are rejected.
SolveResult solve_lp(const AnchorSet& problem, const NormSpec& norm,
                     const SolverConfig& config = {});

}  // namespace fermat
