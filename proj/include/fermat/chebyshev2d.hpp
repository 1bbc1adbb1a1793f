#pragma once

// Planar Chebyshev (L-infinity) Fermat point via the rotation that turns
// L-infinity into L1: T(x, y) = ((x - y) / 2, (x + y) / 2), a quarter-turn
// rotation by pi/4 scaled by sqrt(2)/2. |a - b|_inf = |T a - T b|_1 holds
// only in two dimensions.

#include <array>

#include "fermat/core.hpp"
#include "fermat/median_l1.hpp"

namespace fermat {

Point to_manhattan(const Point& pt);
Point from_manhattan(const Point& pt);

struct LinfSolution {
  SolutionBox manhattan_box;     // minimizer set in rotated coordinates
  std::array<Point, 4> corners;  // rotated rectangle, original coordinates
  Point center;
};

// Throws UnsupportedNorm unless problem.dim() == 2.
LinfSolution solve_linf_2d(const AnchorSet& problem);

}  // namespace fermat
