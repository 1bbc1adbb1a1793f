#pragma once

// Weiszfeld fixed-point iteration for the weighted Euclidean Fermat point.
//
// The map T(x) = (sum k_i M_i / |x - M_i|) / (sum k_i / |x - M_i|) is the
// stationarity condition of the objective solved for x. Each application
// strictly decreases the objective unless x is already optimal. T is
// undefined on the anchors themselves; when an iterate lands on an anchor the
// solver checks whether that anchor is optimal and, if not, steps off it along
// the residual pull of the other anchors. Convergence from a starting point
// whose iterates never hit an anchor is classical; for the (denumerable, when
// the anchors span the space) set of starts that do hit one, the step-off
// rule takes over.

#include <cstddef>
#include <optional>
#include <string_view>

#include "fermat/core.hpp"

namespace fermat {

struct SolverConfig {
  double precision = 1e-6;  // stop once the step's infinity-norm drops below this
  int max_iters = 10000;
  std::optional<Point> start;  // defaults to the weighted centroid

  void validate() const;
};

enum class SolveStatus { Converged, MaxIters, AtAnchor };

std::string_view to_string(SolveStatus status);

struct SolveResult {
  Point point;
  IterationTrace trace;
  SolveStatus status = SolveStatus::MaxIters;
};

struct AnchorTest {
  bool optimal = false;
  Point residual;         // sum_{i != t} k_i * unit pull from M_t towards M_i
  double residual_norm = 0.0;
  double anchor_weight = 0.0;  // k_t plus any anchors coincident with M_t
};

Point weiszfeld_map(const Point& x, const AnchorSet& problem);

// Anchor M_t minimizes the objective iff |residual| <= k_t. For p != 2 the
// residual is the negated gradient of the other terms, measured in the dual
// norm q = p / (p - 1).
AnchorTest anchor_optimality_test(std::size_t t, const AnchorSet& problem, double p = 2.0);

SolveResult solve_l2(const AnchorSet& problem, const SolverConfig& config = {});

}  // namespace fermat
