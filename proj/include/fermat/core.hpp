#pragma once

// Problem representation shared by every solver: points, weighted anchor
// sets, norm selection, and the objective F(x) = sum_i k_i * ||M_i - x||.

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

#include "fermat/errors.hpp"

namespace fermat {

/// Dense real coordinate vector. All coordinates are finite.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t j) const { return coords_[j]; }
  std::span<const double> coords() const noexcept { return coords_; }
  const std::vector<double>& values() const noexcept { return coords_; }

  bool operator==(const Point&) const = default;

 private:
  std::vector<double> coords_;
};

/// m anchor points M_i with positive weights k_i, all of dimension n.
class AnchorSet {
 public:
  AnchorSet(std::vector<Point> anchors, std::vector<double> weights);

  std::size_t size() const noexcept { return anchors_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Point>& anchors() const noexcept { return anchors_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const Point& anchor(std::size_t i) const { return anchors_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

  double total_weight() const noexcept { return total_weight_; }
  // Largest absolute anchor coordinate.
  double coordinate_scale() const noexcept { return scale_; }

 private:
  std::vector<Point> anchors_;
  std::vector<double> weights_;
  std::size_t dim_ = 0;
  double total_weight_ = 0.0;
  double scale_ = 0.0;
};

enum class NormKind { One, Two, P, Infinity };

/// Choice of distance. Kind P carries an exponent 1 < p < inf.
class NormSpec {
 public:
  static NormSpec one() { return NormSpec(NormKind::One, 1.0); }
  static NormSpec two() { return NormSpec(NormKind::Two, 2.0); }
  static NormSpec infinity() {
    return NormSpec(NormKind::Infinity, std::numeric_limits<double>::infinity());
  }
  // Throws UnsupportedNorm unless 1 < p < inf.
  static NormSpec lp(double p);

  NormKind kind() const noexcept { return kind_; }
  // Exponent: 1 for One, 2 for Two, +inf for Infinity.
  double p() const noexcept { return p_; }

  bool operator==(const NormSpec&) const = default;

 private:
  NormSpec(NormKind kind, double p) : kind_(kind), p_(p) {}
  NormKind kind_;
  double p_;
};

struct TraceRecord {
  int iter = 0;
  Point point;
  double objective = 0.0;
  double step = 0.0;  // infinity-norm of the move that produced this point
};

/// Iterates of a fixed-point solve. Record 0 is the start point.
struct IterationTrace {
  std::vector<TraceRecord> records;

  std::size_t size() const noexcept { return records.size(); }
  const TraceRecord& back() const { return records.back(); }
};

double distance(const Point& a, const Point& b, const NormSpec& norm);

double objective(const Point& x, const AnchorSet& problem, const NormSpec& norm);

// Gradient of the L^p objective, p > 1. Throws AnchorCoincidence when x sits
// on an anchor.
Point gradient_lp(const Point& x, const AnchorSet& problem, double p);

Point weighted_centroid(const AnchorSet& problem);

// Distance below which a point counts as sitting on an anchor:
// 1e-12 * (1 + coordinate scale).
double coincidence_tolerance(const AnchorSet& problem);

// Anchors merged within coincidence tolerance (weights summed) and sorted
// lexicographically. The objective is unchanged; the result does not depend
// on the input order.
AnchorSet canonicalize(const AnchorSet& problem);

}  // namespace fermat
