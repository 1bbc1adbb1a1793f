#pragma once

// Shared fixtures and random instance generators for the test binaries.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fermat/core.hpp"

namespace fermat::testing {

inline AnchorSet box6d_problem() {
  return AnchorSet({Point{4, 11, 3, 4, 5, 6}, Point{13, 13, 2, 1, 5, 7}, Point{17, 6, 8, 6, 7, 8},
                    Point{8, 6, 4, 6, 7, 9}},
                   {2, 3, 1, 2});
}

inline AnchorSet planar_problem() {
  return AnchorSet({Point{4.71, -1.84}, Point{-3.15, -2.44}, Point{0.17, 2.99}, Point{6.35, 2.86},
                    Point{5.55, 2.44}, Point{3.22, -2.56}},
                   {1, 2, 4, 7, 6, 5});
}

inline AnchorSet lp5d_problem() {
  return AnchorSet({Point{8, 5, 4, 8, 3}, Point{3, 3, 7, 6, 3}, Point{8, 7, 2, 6, 6},
                    Point{4, 9, 3, 6, 2}, Point{5, 6, 4, 5, 4}},
                   {5, 9, 1, 8, 6});
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  Point point(std::size_t dim, double lo = -10.0, double hi = 10.0) {
    std::vector<double> c(dim);
    for (double& v : c) v = uniform(lo, hi);
    return Point(std::move(c));
  }

  AnchorSet problem(std::size_t m, std::size_t dim, double lo = -10.0, double hi = 10.0) {
    std::vector<Point> anchors;
    std::vector<double> weights;
    for (std::size_t i = 0; i < m; ++i) {
      anchors.push_back(point(dim, lo, hi));
      weights.push_back(uniform(0.5, 5.0));
    }
    return AnchorSet(std::move(anchors), std::move(weights));
  }

  // Integer coordinates and weights, so exact weighted-median ties happen.
  AnchorSet integer_problem(std::size_t m, std::size_t dim) {
    std::vector<Point> anchors;
    std::vector<double> weights;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<double> c(dim);
      for (double& v : c) v = integer(-5, 5);
      anchors.emplace_back(std::move(c));
      weights.push_back(integer(1, 4));
    }
    return AnchorSet(std::move(anchors), std::move(weights));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline double max_abs_diff(const Point& a, const Point& b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.dim(); ++j) d = std::max(d, std::abs(a[j] - b[j]));
  return d;
}

inline double norm2(const Point& a) {
  double s = 0.0;
  for (double v : a.coords()) s += v * v;
  return std::sqrt(s);
}

}  // namespace fermat::testing
