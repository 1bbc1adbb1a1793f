#include "fermat/chebyshev2d.hpp"

#include <string>

namespace fermat {

namespace {

void require_planar(const Point& pt) {
  if (pt.dim() != 2) {
    throw FermatError(ErrorCode::DimensionMismatch,
                      "expected a 2-D point, got " + std::to_string(pt.dim()) + " coordinates");
  }
}

}  // namespace

Point to_manhattan(const Point& pt) {
  require_planar(pt);
  return Point{0.5 * (pt[0] - pt[1]), 0.5 * (pt[0] + pt[1])};
}

Point from_manhattan(const Point& pt) {
  require_planar(pt);
  return Point{pt[0] + pt[1], pt[1] - pt[0]};
}

LinfSolution solve_linf_2d(const AnchorSet& problem) {
  if (problem.dim() != 2) {
    throw FermatError(ErrorCode::UnsupportedNorm,
                      "infinity norm is supported only in 2 dimensions (no L1 equivalence for n > 2)");
  }
  std::vector<Point> rotated;
  rotated.reserve(problem.size());
  for (const Point& m : problem.anchors()) rotated.push_back(to_manhattan(m));
  const AnchorSet manhattan(std::move(rotated), problem.weights());

  LinfSolution out;
  out.manhattan_box = solve_l1(manhattan);
  const Interval& u = out.manhattan_box.intervals[0];
  const Interval& v = out.manhattan_box.intervals[1];
  out.corners = {from_manhattan(Point{u.lo, v.lo}), from_manhattan(Point{u.hi, v.lo}),
                 from_manhattan(Point{u.hi, v.hi}), from_manhattan(Point{u.lo, v.hi})};
  out.center = from_manhattan(out.manhattan_box.center());
  return out;
}

}  // namespace fermat
