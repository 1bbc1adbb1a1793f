#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fermat/oracle.hpp"
#include "fermat/weiszfeld.hpp"
#include "../support.hpp"

using namespace fermat;
using fermat::testing::max_abs_diff;
using fermat::testing::norm2;
using fermat::testing::Rng;

namespace {

void check_descent(const IterationTrace& trace) {
  for (std::size_t k = 1; k < trace.size(); ++k) {
    if (trace.records[k].point == trace.records[k - 1].point) continue;
    CHECK(trace.records[k].objective < trace.records[k - 1].objective);
    CHECK(trace.records[k].iter == trace.records[k - 1].iter + 1);
  }
}

}  // namespace

TEST_CASE("weiszfeld_map on the unit square") {
  const AnchorSet square({Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}}, {1, 1, 1, 1});
  const Point next = weiszfeld_map(Point{0.5, 0.6}, square);
  CHECK(std::abs(next[1] - 0.5) < 0.1);
  CHECK(max_abs_diff(next, Point{0.5, 0.5}) < max_abs_diff(Point{0.5, 0.6}, Point{0.5, 0.5}));
  const Point fixed = weiszfeld_map(Point{0.5, 0.5}, square);
  CHECK(max_abs_diff(fixed, Point{0.5, 0.5}) < 1e-15);
}

TEST_CASE("weiszfeld_map matches the direct formula") {
  // Between two equally weighted anchors every point is optimal, so T(x) = x:
  // ((0/0.5) + (2/1.5)) / ((1/0.5) + (1/1.5)) = 0.5.
  const AnchorSet pair({Point{0}, Point{2}}, {1, 1});
  const double expected = ((0.0 / 0.5) + (2.0 / 1.5)) / ((1.0 / 0.5) + (1.0 / 1.5));
  CHECK(weiszfeld_map(Point{0.5}, pair)[0] == doctest::Approx(expected).epsilon(1e-15));
  CHECK(expected == doctest::Approx(0.5).epsilon(1e-15));

  // Planar six-anchor instance from (1.480, -0.140); 40-digit evaluation of T.
  const Point next = weiszfeld_map(Point{1.480, -0.140}, fermat::testing::planar_problem());
  CHECK(next[0] == doctest::Approx(3.400411745897095).epsilon(1e-13));
  CHECK(next[1] == doctest::Approx(0.7217511674227497).epsilon(1e-13));
}

TEST_CASE("weiszfeld_map rejects anchor points") {
  const AnchorSet pair({Point{0, 0}, Point{2, 0}}, {1, 1});
  try {
    weiszfeld_map(Point{2, 0}, pair);
    FAIL("expected AnchorCoincidence");
  } catch (const FermatError& e) {
    CHECK(e.code() == ErrorCode::AnchorCoincidence);
    CHECK(e.anchor() == 1u);
  }
}

TEST_CASE("anchor_optimality_test examples") {
  const AnchorTest single = anchor_optimality_test(0, AnchorSet({Point{4, 2}}, {3}));
  CHECK(single.optimal);
  CHECK(single.residual == Point{0, 0});

  const double h = std::sqrt(3.0) / 2.0;
  const AnchorSet triangle({Point{0, 0}, Point{1, 0}, Point{0.5, h}}, {1, 1, 1});
  for (std::size_t t = 0; t < 3; ++t) {
    const AnchorTest test = anchor_optimality_test(t, triangle);
    CHECK_FALSE(test.optimal);
    // two unit pulls 60 degrees apart
    CHECK(test.residual_norm == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  }

  const AnchorSet heavy({Point{0, 0}, Point{1, 0}, Point{-1, 0}}, {10, 1, 1});
  const AnchorTest test = anchor_optimality_test(0, heavy);
  CHECK(test.optimal);
  CHECK(test.residual_norm == 0.0);
  const Point grid = grid_minimize(heavy, NormSpec::two(), 1e-4);
  CHECK(max_abs_diff(grid, Point{0, 0}) < 1e-4);

  CHECK_THROWS_AS(anchor_optimality_test(3, heavy), FermatError);
}

TEST_CASE("anchor_optimality_test merges coincident anchors") {
  const AnchorSet dup({Point{0, 0}, Point{0, 0}, Point{1, 0}, Point{0, 1}}, {1, 1, 1, 1});
  const AnchorTest test = anchor_optimality_test(0, dup);
  CHECK(test.anchor_weight == 2.0);
  CHECK(test.residual_norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(test.optimal);
}

TEST_CASE("solve_l2 with identical anchors returns immediately") {
  const AnchorSet same({Point{3, 1}, Point{3, 1}}, {1, 2});
  const SolveResult r = solve_l2(same, {.precision = 1e-3});
  CHECK(r.status == SolveStatus::AtAnchor);
  CHECK(r.point == Point{3, 1});
  CHECK(r.trace.size() == 1);
}

TEST_CASE("solve_l2 on the planar six-anchor instance finds the optimal anchor") {
  const AnchorSet problem = fermat::testing::planar_problem();
  CHECK(anchor_optimality_test(4, problem).optimal);
  const SolveResult r = solve_l2(problem, {.precision = 1e-3, .start = Point{1.480, -0.140}});
  CHECK(r.status == SolveStatus::AtAnchor);
  CHECK(r.point == Point{5.55, 2.44});
  check_descent(r.trace);
}

TEST_CASE("solve_l2 matches grid oracle and zero gradient") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const AnchorSet problem = rng.problem(6, 2);
    const SolveResult r = solve_l2(problem, {.precision = 1e-12});
    check_descent(r.trace);
    const Point grid = grid_minimize(problem, NormSpec::two(), 1e-4);
    CHECK(max_abs_diff(r.point, grid) < 1e-3);
    if (r.status == SolveStatus::Converged) {
      CHECK(norm2(gradient_lp(r.point, problem, 2.0)) < 1e-6 * problem.total_weight());
    } else {
      CHECK(r.status == SolveStatus::AtAnchor);
    }
  }
}

TEST_CASE("solve_l2 invariances") {
  Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    const AnchorSet problem = rng.problem(static_cast<std::size_t>(rng.integer(3, 8)), n);
    // Distinct solves agree only to the level where the objective stops
    // resolving further descent, well above a 1e-10 step tolerance.
    const SolverConfig config{.precision = 1e-10};
    const double agree = 1e-6;
    const SolveResult base = solve_l2(problem, config);
    if (base.status == SolveStatus::Converged) {
      CHECK(norm2(gradient_lp(base.point, problem, 2.0)) <= 1e-4 * problem.total_weight());
    }

    const Point shift = rng.point(n);
    std::vector<Point> moved;
    for (const Point& m : problem.anchors()) {
      std::vector<double> c(m.values());
      for (std::size_t j = 0; j < n; ++j) c[j] += shift[j];
      moved.emplace_back(std::move(c));
    }
    const SolveResult translated = solve_l2(AnchorSet(moved, problem.weights()), config);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(std::abs(translated.point[j] - (base.point[j] + shift[j])) < agree);
    }

    std::vector<double> scaled(problem.weights());
    for (double& w : scaled) w *= 7.25;
    const SolveResult heavier = solve_l2(AnchorSet(problem.anchors(), scaled), config);
    CHECK(max_abs_diff(heavier.point, base.point) < agree);
  }
}

TEST_CASE("solve_l2 stops on a dominant anchor") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    AnchorSet base = rng.problem(5, 2);
    std::vector<double> w(base.weights());
    const std::size_t t = static_cast<std::size_t>(rng.integer(0, 4));
    double others = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) others += i == t ? 0.0 : w[i];
    w[t] = others * rng.uniform(1.0, 3.0);
    const AnchorSet problem(base.anchors(), w);
    const SolveResult r = solve_l2(problem, {.precision = 1e-6});
    CHECK(r.status == SolveStatus::AtAnchor);
    CHECK(r.point == problem.anchor(t));
    check_descent(r.trace);
  }
}

TEST_CASE("solve_l2 steps off a non-optimal anchor") {
  const double h = std::sqrt(3.0) / 2.0;
  const AnchorSet triangle({Point{0, 0}, Point{1, 0}, Point{0.5, h}}, {1, 1, 1});
  const SolveResult r = solve_l2(triangle, {.precision = 1e-12, .start = Point{0, 0}});
  CHECK(r.status == SolveStatus::Converged);
  CHECK(max_abs_diff(r.point, Point{0.5, h / 3.0}) < 1e-7);
  check_descent(r.trace);
}

TEST_CASE("solve_l2 reports MaxIters without throwing") {
  const SolveResult r = solve_l2(fermat::testing::lp5d_problem(), {.precision = 1e-14, .max_iters = 3});
  CHECK(r.status == SolveStatus::MaxIters);
  CHECK(r.trace.size() == 4);
}

TEST_CASE("solver config validation") {
  const AnchorSet p({Point{0}}, {1});
  CHECK_THROWS_AS(solve_l2(p, {.precision = 0.0}), FermatError);
  CHECK_THROWS_AS(solve_l2(p, {.precision = 1e-3, .max_iters = 0}), FermatError);
  CHECK_THROWS_AS(solve_l2(p, {.precision = 1e-3, .start = Point{1, 2}}), FermatError);
}
