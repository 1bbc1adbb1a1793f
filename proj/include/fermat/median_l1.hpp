#pragma once

// Exact Manhattan-norm Fermat point. The L1 objective separates into one
// weighted-median problem per coordinate, and the minimizer set is a box.

#include <span>
#include <vector>

#include "fermat/core.hpp"

namespace fermat {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool degenerate() const noexcept { return lo == hi; }
  double mid() const noexcept { return lo + 0.5 * (hi - lo); }
  bool operator==(const Interval&) const = default;
};

/// Axis-aligned set of minimizers; degenerate intervals pin a coordinate.
struct SolutionBox {
  std::vector<Interval> intervals;

  std::size_t dim() const noexcept { return intervals.size(); }
  bool is_point() const noexcept;
  Point center() const;
  Point lower() const;
  Point upper() const;
  // All 2^k distinct corners, k = number of non-degenerate intervals.
  std::vector<Point> corners() const;
  bool contains(const Point& x, double slack = 0.0) const;

  bool operator==(const SolutionBox&) const = default;
};

// Minimizers of sum_i w_i |v_i - x|. When a prefix of the sorted values holds
// exactly half the total weight, the result spans up to the next distinct
// value; otherwise it is the single crossing value.
Interval weighted_median(std::span<const double> values, std::span<const double> weights);

SolutionBox solve_l1(const AnchorSet& problem);

}  // namespace fermat
