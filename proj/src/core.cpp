#include "fermat/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fermat {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AnchorCoincidence: return "AnchorCoincidence";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::UnsupportedNorm: return "UnsupportedNorm";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double c : coords_) {
    if (!std::isfinite(c)) {
      throw FermatError(ErrorCode::NonFiniteValue, "point coordinates must be finite");
    }
  }
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

AnchorSet::AnchorSet(std::vector<Point> anchors, std::vector<double> weights)
    : anchors_(std::move(anchors)), weights_(std::move(weights)) {
  if (anchors_.empty()) {
    throw FermatError(ErrorCode::EmptyInput, "at least one anchor required");
  }
  if (weights_.size() != anchors_.size()) {
    throw FermatError(ErrorCode::DimensionMismatch,
                      "expected " + std::to_string(anchors_.size()) + " weights, got " +
                          std::to_string(weights_.size()));
  }
  dim_ = anchors_.front().dim();
  if (dim_ == 0) {
    throw FermatError(ErrorCode::DimensionMismatch, "anchors must have at least one coordinate");
  }
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    if (anchors_[i].dim() != dim_) {
      throw FermatError(ErrorCode::DimensionMismatch,
                        "anchor " + std::to_string(i) + " has " +
                            std::to_string(anchors_[i].dim()) + " coordinates, expected " +
                            std::to_string(dim_));
    }
    if (!std::isfinite(weights_[i]) || weights_[i] <= 0.0) {
      throw FermatError(ErrorCode::NonPositiveWeight,
                        "weight " + std::to_string(i) + " must be positive and finite");
    }
    total_weight_ += weights_[i];
    for (double c : anchors_[i].coords()) scale_ = std::max(scale_, std::abs(c));
  }
}

NormSpec NormSpec::lp(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw FermatError(ErrorCode::UnsupportedNorm,
                      "iterative norm exponent must satisfy 1 < p < inf");
  }
  return NormSpec(NormKind::P, p);
}

namespace {

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw FermatError(ErrorCode::DimensionMismatch,
                      "points have " + std::to_string(a.dim()) + " and " +
                          std::to_string(b.dim()) + " coordinates");
  }
}

// (sum |d_j|^p)^(1/p) with the largest term factored out to keep pow() in range.
double lp_length(std::span<const double> a, std::span<const double> b, double p) {
  double largest = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) largest = std::max(largest, std::abs(a[j] - b[j]));
  if (largest == 0.0) return 0.0;
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) sum += std::pow(std::abs(a[j] - b[j]) / largest, p);
  return largest * std::pow(sum, 1.0 / p);
}

}  // namespace

double distance(const Point& a, const Point& b, const NormSpec& norm) {
  require_same_dim(a, b);
  const auto x = a.coords();
  const auto y = b.coords();
  switch (norm.kind()) {
    case NormKind::One: {
      double sum = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) sum += std::abs(x[j] - y[j]);
      return sum;
    }
    case NormKind::Two: {
      double sum = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) sum += (x[j] - y[j]) * (x[j] - y[j]);
      return std::sqrt(sum);
    }
    case NormKind::P:
      return lp_length(x, y, norm.p());
    case NormKind::Infinity: {
      double largest = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) largest = std::max(largest, std::abs(x[j] - y[j]));
      return largest;
    }
  }
  return 0.0;
}

double objective(const Point& x, const AnchorSet& problem, const NormSpec& norm) {
  if (x.dim() != problem.dim()) {
    throw FermatError(ErrorCode::DimensionMismatch,
                      "point has " + std::to_string(x.dim()) + " coordinates, problem has " +
                          std::to_string(problem.dim()));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    total += problem.weight(i) * distance(problem.anchor(i), x, norm);
  }
  return total;
}

Point gradient_lp(const Point& x, const AnchorSet& problem, double p) {
  const NormSpec norm = p == 2.0 ? NormSpec::two() : NormSpec::lp(p);
  if (x.dim() != problem.dim()) {
    throw FermatError(ErrorCode::DimensionMismatch, "point and problem dimensions differ");
  }
  const double tol = coincidence_tolerance(problem);
  std::vector<double> grad(problem.dim(), 0.0);
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const Point& m = problem.anchor(i);
    const double d = distance(m, x, norm);
    if (d < tol) {
      throw FermatError(ErrorCode::AnchorCoincidence,
                        "gradient undefined at anchor " + std::to_string(i), i);
    }
    for (std::size_t j = 0; j < grad.size(); ++j) {
      const double diff = m[j] - x[j];
      if (diff == 0.0) continue;
      // -k * sign(diff) * |diff|^(p-1) * D^(1-p)
      grad[j] -= problem.weight(i) * std::copysign(std::pow(std::abs(diff) / d, p - 1.0), diff);
    }
  }
  return Point(std::move(grad));
}

Point weighted_centroid(const AnchorSet& problem) {
  std::vector<double> sum(problem.dim(), 0.0);
  for (std::size_t i = 0; i < problem.size(); ++i) {
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += problem.weight(i) * problem.anchor(i)[j];
  }
  for (double& s : sum) s /= problem.total_weight();
  return Point(std::move(sum));
}

double coincidence_tolerance(const AnchorSet& problem) {
  return 1e-12 * (1.0 + problem.coordinate_scale());
}

AnchorSet canonicalize(const AnchorSet& problem) {
  const double tol = coincidence_tolerance(problem);
  std::vector<Point> anchors;
  std::vector<double> weights;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    bool merged = false;
    for (std::size_t r = 0; r < anchors.size(); ++r) {
      if (distance(anchors[r], problem.anchor(i), NormSpec::infinity()) < tol) {
        weights[r] += problem.weight(i);
        merged = true;
        break;
      }
    }
    if (!merged) {
      anchors.push_back(problem.anchor(i));
      weights.push_back(problem.weight(i));
    }
  }
  std::vector<std::size_t> order(anchors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (anchors[a].values() != anchors[b].values()) return anchors[a].values() < anchors[b].values();
    return weights[a] < weights[b];
  });
  std::vector<Point> sorted_anchors;
  std::vector<double> sorted_weights;
  for (std::size_t i : order) {
    sorted_anchors.push_back(anchors[i]);
    sorted_weights.push_back(weights[i]);
  }
  return AnchorSet(std::move(sorted_anchors), std::move(sorted_weights));
}

}  // namespace fermat
