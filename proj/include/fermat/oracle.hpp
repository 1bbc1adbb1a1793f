#pragma once

// Independent checks for the solvers: brute-force grid refinement, central
// finite differences, and the hanging-weights (Varignon frame) energy.
// None of these share code paths with the iterative maps.

#include <span>

#include "fermat/core.hpp"

namespace fermat {

inline constexpr std::size_t kGridMaxDim = 6;
inline constexpr std::size_t kGridMaxAnchors = 64;

// Multi-resolution search over the anchors' bounding box. Each level scans a
// 5^n lattice around the incumbent, then halves the spacing (or recentres
// without halving when the incumbent sits on the lattice edge). Stops once
// the cell's L1 diagonal is below tol, so the objective gap to the true
// minimum is at most total_weight * tol for any convex objective.
// Ties keep the lexicographically first lattice point.
Point grid_minimize(const AnchorSet& problem, const NormSpec& norm, double tol);

Point finite_diff_gradient(const Point& x, const AnchorSet& problem, double p, double h = 1e-6);

// Potential energy sum_i k_i [height - (l_i - |x - M_i|_2)] of a frame whose
// strings of length l_i hang through holes at the anchors, knotted at x.
double varignon_energy(const Point& x, const AnchorSet& problem, double height,
                       std::span<const double> lengths);

// The part of the energy that does not depend on x: sum_i k_i (height - l_i).
double varignon_offset(const AnchorSet& problem, double height, std::span<const double> lengths);

}  // namespace fermat
