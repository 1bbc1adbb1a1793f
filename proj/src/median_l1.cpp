#include "fermat/median_l1.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fermat {

bool SolutionBox::is_point() const noexcept {
  return std::all_of(intervals.begin(), intervals.end(),
                     [](const Interval& iv) { return iv.degenerate(); });
}

Point SolutionBox::center() const {
  std::vector<double> c;
  c.reserve(intervals.size());
  for (const auto& iv : intervals) c.push_back(iv.mid());
  return Point(std::move(c));
}

Point SolutionBox::lower() const {
  std::vector<double> c;
  for (const auto& iv : intervals) c.push_back(iv.lo);
  return Point(std::move(c));
}

Point SolutionBox::upper() const {
  std::vector<double> c;
  for (const auto& iv : intervals) c.push_back(iv.hi);
  return Point(std::move(c));
}

std::vector<Point> SolutionBox::corners() const {
  std::vector<std::vector<double>> acc{{}};
  for (const auto& iv : intervals) {
    std::vector<std::vector<double>> next;
    for (const auto& prefix : acc) {
      auto lo = prefix;
      lo.push_back(iv.lo);
      next.push_back(std::move(lo));
      if (!iv.degenerate()) {
        auto hi = prefix;
        hi.push_back(iv.hi);
        next.push_back(std::move(hi));
      }
    }
    acc = std::move(next);
  }
  std::vector<Point> out;
  out.reserve(acc.size());
  for (auto& c : acc) out.emplace_back(std::move(c));
  return out;
}

bool SolutionBox::contains(const Point& x, double slack) const {
  if (x.dim() != intervals.size()) return false;
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    if (x[j] < intervals[j].lo - slack || x[j] > intervals[j].hi + slack) return false;
  }
  return true;
}

Interval weighted_median(std::span<const double> values, std::span<const double> weights) {
  if (values.empty()) throw FermatError(ErrorCode::EmptyInput, "at least one value required");
  if (values.size() != weights.size()) {
    throw FermatError(ErrorCode::DimensionMismatch, "values and weights differ in length");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw FermatError(ErrorCode::NonFiniteValue, "values must be finite");
    }
    if (!std::isfinite(weights[i]) || weights[i] <= 0.0) {
      throw FermatError(ErrorCode::NonPositiveWeight,
                        "weight " + std::to_string(i) + " must be positive and finite");
    }
  }

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  // Merge equal values so a tie interval always reaches the next distinct value.
  std::vector<double> vals;
  std::vector<double> wts;
  for (std::size_t i : order) {
    if (!vals.empty() && vals.back() == values[i]) {
      wts.back() += weights[i];
    } else {
      vals.push_back(values[i]);
      wts.push_back(weights[i]);
    }
  }

  const double total = std::accumulate(wts.begin(), wts.end(), 0.0);
  const double tie_slack = 1e-12 * total;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    cumulative += wts[i];
    const double excess = 2.0 * cumulative - total;
    if (std::abs(excess) <= tie_slack && i + 1 < vals.size()) return {vals[i], vals[i + 1]};
    if (excess > 0.0) return {vals[i], vals[i]};
  }
  return {vals.back(), vals.back()};
}

SolutionBox solve_l1(const AnchorSet& problem) {
  SolutionBox box;
  box.intervals.reserve(problem.dim());
  std::vector<double> column(problem.size());
  for (std::size_t j = 0; j < problem.dim(); ++j) {
    for (std::size_t i = 0; i < problem.size(); ++i) column[i] = problem.anchor(i)[j];
    box.intervals.push_back(weighted_median(column, problem.weights()));
  }
  return box;
}

}  // namespace fermat
