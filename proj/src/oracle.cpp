#include "fermat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fermat {

namespace {

constexpr int kHalfWidth = 2;  // lattice offsets -2..2 per axis
constexpr int kMaxLevels = 100000;

void require_lengths(const AnchorSet& problem, std::span<const double> lengths) {
  if (lengths.size() != problem.size()) {
    throw FermatError(ErrorCode::DimensionMismatch, "one string length per anchor required");
  }
}

}  // namespace

Point grid_minimize(const AnchorSet& problem, const NormSpec& norm, double tol) {
  if (!(tol > 0.0)) throw FermatError(ErrorCode::InvalidArgument, "tol must be positive");
  if (problem.dim() > kGridMaxDim || problem.size() > kGridMaxAnchors) {
    throw FermatError(ErrorCode::InstanceTooLarge,
                      "grid oracle limited to n <= 6 and m <= 64");
  }
  const std::size_t n = problem.dim();
  std::vector<double> lo(n, std::numeric_limits<double>::infinity());
  std::vector<double> hi(n, -std::numeric_limits<double>::infinity());
  for (const Point& m : problem.anchors()) {
    for (std::size_t j = 0; j < n; ++j) {
      lo[j] = std::min(lo[j], m[j]);
      hi[j] = std::max(hi[j], m[j]);
    }
  }
  // One spacing for every axis: lattice diagonals stay true diagonals, which
  // the rotated kinks of the infinity norm need.
  std::vector<double> center(n);
  double width = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    center[j] = 0.5 * (lo[j] + hi[j]);
    width = std::max(width, hi[j] - lo[j]);
  }
  std::vector<double> spacing(n, width / (2 * kHalfWidth));

  const int side = 2 * kHalfWidth + 1;
  std::size_t lattice = 1;
  for (std::size_t j = 0; j < n; ++j) lattice *= side;

  std::vector<double> coords(n);
  std::vector<int> offset(n);
  std::vector<int> best_offset(n);
  Point best(center);
  double best_value = objective(best, problem, norm);

  for (int level = 0; level < kMaxLevels; ++level) {
    // Lexicographic scan; strict improvement keeps the first minimizer.
    bool moved = false;
    std::fill(best_offset.begin(), best_offset.end(), 0);
    for (std::size_t cell = 0; cell < lattice; ++cell) {
      std::size_t code = cell;
      for (std::size_t j = n; j-- > 0;) {
        offset[j] = static_cast<int>(code % side) - kHalfWidth;
        code /= side;
      }
      for (std::size_t j = 0; j < n; ++j) {
        coords[j] = std::clamp(center[j] + offset[j] * spacing[j], lo[j], hi[j]);
      }
      Point candidate(coords);
      const double value = objective(candidate, problem, norm);
      if (value < best_value) {
        best_value = value;
        best = std::move(candidate);
        best_offset = offset;
        moved = true;
      }
    }

    double diagonal = 0.0;
    for (double s : spacing) diagonal += s;
    const bool on_edge = std::any_of(best_offset.begin(), best_offset.end(),
                                     [](int o) { return std::abs(o) == kHalfWidth; });
    center = best.values();
    if (on_edge && moved) continue;  // recentre at the same resolution
    if (diagonal < tol) break;
    for (double& s : spacing) s *= 0.5;
  }
  return best;
}

Point finite_diff_gradient(const Point& x, const AnchorSet& problem, double p, double h) {
  if (!(h > 0.0)) throw FermatError(ErrorCode::InvalidArgument, "h must be positive");
  const NormSpec norm = p == 2.0 ? NormSpec::two() : NormSpec::lp(p);
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (distance(problem.anchor(i), x, norm) < 10.0 * h) {
      throw FermatError(ErrorCode::AnchorCoincidence,
                        "difference stencil touches anchor " + std::to_string(i), i);
    }
  }
  std::vector<double> grad(x.dim());
  std::vector<double> probe(x.values());
  for (std::size_t j = 0; j < grad.size(); ++j) {
    probe[j] = x[j] + h;
    const double forward = objective(Point(probe), problem, norm);
    probe[j] = x[j] - h;
    const double backward = objective(Point(probe), problem, norm);
    probe[j] = x[j];
    grad[j] = (forward - backward) / (2.0 * h);
  }
  return Point(std::move(grad));
}

double varignon_energy(const Point& x, const AnchorSet& problem, double height,
                       std::span<const double> lengths) {
  require_lengths(problem, lengths);
  double energy = 0.0;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const double reach = distance(x, problem.anchor(i), NormSpec::two());
    if (lengths[i] < reach) {
      throw FermatError(ErrorCode::InvalidArgument,
                        "string " + std::to_string(i) + " is shorter than the knot distance");
    }
    energy += problem.weight(i) * (height - (lengths[i] - reach));
  }
  return energy;
}

double varignon_offset(const AnchorSet& problem, double height, std::span<const double> lengths) {
  require_lengths(problem, lengths);
  double offset = 0.0;
  for (std::size_t i = 0; i < problem.size(); ++i) offset += problem.weight(i) * (height - lengths[i]);
  return offset;
}

}  // namespace fermat
