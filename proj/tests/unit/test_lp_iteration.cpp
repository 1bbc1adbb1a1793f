#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fermat/lp_iteration.hpp"
#include "fermat/median_l1.hpp"
#include "fermat/oracle.hpp"
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
  }
}

}  // namespace

TEST_CASE("lp_map at p = 2 is the Weiszfeld map") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
    const AnchorSet problem = rng.problem(static_cast<std::size_t>(rng.integer(1, 8)), n);
    const Point x = rng.point(n);
    const Point a = lp_map(x, problem, 2.0);
    const Point b = weiszfeld_map(x, problem);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(std::abs(a[j] - b[j]) <= 1e-14 * std::max(1.0, std::abs(b[j])));
    }
  }
}

TEST_CASE("lp_map first step on the five-dimensional fixture") {
  const AnchorSet problem = fermat::testing::lp5d_problem();
  const Point next = lp_map(weighted_centroid(problem), problem, 2.4);
  const double expected[] = {4.95849, 5.91367, 4.57670, 5.74708, 3.46078};
  for (std::size_t j = 0; j < 5; ++j) CHECK(std::abs(next[j] - expected[j]) < 1e-3);
}

TEST_CASE("lp_map errors") {
  const AnchorSet pair({Point{0, 0}, Point{1, 1}}, {1, 1});
  CHECK_THROWS_AS(lp_map(Point{0.5, 0.2}, pair, 1.0), FermatError);
  CHECK_THROWS_AS(lp_map(Point{0.5, 0.2}, pair, INFINITY), FermatError);
  try {
    lp_map(Point{1, 1}, pair, 3.0);
    FAIL("expected AnchorCoincidence");
  } catch (const FermatError& e) {
    CHECK(e.code() == ErrorCode::AnchorCoincidence);
  }
}

TEST_CASE("lp_map fixed points have zero gradient") {
  Rng rng(9);
  for (double p : {1.5, 2.4, 3.0, 4.0}) {
    for (int trial = 0; trial < 10; ++trial) {
      const AnchorSet problem = rng.problem(5, 3);
      const SolveResult r = solve_lp(problem, NormSpec::lp(p), {.precision = 1e-13});
      if (r.status != SolveStatus::Converged) continue;
      CHECK(norm2(gradient_lp(r.point, problem, p)) < 1e-6 * problem.total_weight());
      // A 1e-13 step is below what the objective can resolve; the solver
      // stops where descent becomes invisible, a few 1e-8 from the fixed point.
      CHECK(max_abs_diff(lp_map(r.point, problem, p), r.point) < 1e-6);
    }
  }
}

TEST_CASE("solve_lp on the five-dimensional fixture") {
  const AnchorSet problem = fermat::testing::lp5d_problem();
  const SolveResult r = solve_lp(problem, NormSpec::lp(2.4), {.precision = 1e-5});
  CHECK(r.status == SolveStatus::Converged);
  const double expected[] = {4.94956, 6.01676, 4.32056, 5.47656, 3.58924};
  for (std::size_t j = 0; j < 5; ++j) CHECK(std::abs(r.point[j] - expected[j]) < 1e-3);
  CHECK(r.trace.back().iter >= 20);
  CHECK(r.trace.back().iter <= 35);
  check_descent(r.trace);
}

TEST_CASE("solve_lp single anchor") {
  const AnchorSet single({Point{1, 2, 3}}, {2});
  const SolveResult r = solve_lp(single, NormSpec::lp(3.0), {.precision = 1e-6});
  CHECK(r.status == SolveStatus::AtAnchor);
  CHECK(r.point == Point{1, 2, 3});
}

TEST_CASE("solve_lp rejects exact-solver norms") {
  const AnchorSet p({Point{0, 0}, Point{1, 0}}, {1, 1});
  try {
    solve_lp(p, NormSpec::one());
    FAIL("expected UnsupportedNorm");
  } catch (const FermatError& e) {
    CHECK(e.code() == ErrorCode::UnsupportedNorm);
  }
  CHECK_THROWS_AS(solve_lp(p, NormSpec::infinity()), FermatError);
}

TEST_CASE("solve_lp p = 3 against gradient and grid oracles") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const AnchorSet problem = rng.problem(4, 3);
    const SolveResult r = solve_lp(problem, NormSpec::lp(3.0), {.precision = 1e-13});
    check_descent(r.trace);
    const Point grid = grid_minimize(problem, NormSpec::lp(3.0), 1e-6);
    CHECK(objective(r.point, problem, NormSpec::lp(3.0)) <=
          objective(grid, problem, NormSpec::lp(3.0)) + 1e-6);
    if (r.status == SolveStatus::Converged) {
      CHECK(norm2(gradient_lp(r.point, problem, 3.0)) < 1e-6 * problem.total_weight());
    } else {
      CHECK(r.status == SolveStatus::AtAnchor);
    }
  }
}

TEST_CASE("solve_lp agrees with solve_l2 at p = 2") {
  Rng rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const AnchorSet problem = rng.problem(6, 3);
    const SolverConfig config{.precision = 1e-8};
    const SolveResult a = solve_lp(problem, NormSpec::lp(2.0), config);
    const SolveResult b = solve_l2(problem, config);
    CHECK(max_abs_diff(a.point, b.point) < 1e-8);
  }
}

TEST_CASE("solve_lp in one dimension lands in the weighted-median interval") {
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const AnchorSet problem = rng.problem(static_cast<std::size_t>(rng.integer(2, 7)), 1);
    const SolutionBox box = solve_l1(problem);
    for (double p : {1.5, 2.4, 4.0}) {
      const double precision = 1e-9;
      const SolveResult r = solve_lp(problem, NormSpec::lp(p), {.precision = precision});
      CHECK(box.contains(r.point, 1e-6));
      check_descent(r.trace);
    }
  }
}

TEST_CASE("solve_lp is invariant to anchor order") {
  Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const AnchorSet problem = rng.problem(6, 3);
    std::vector<std::size_t> order{0, 1, 2, 3, 4, 5};
    std::shuffle(order.begin(), order.end(), rng.engine());
    std::vector<Point> anchors;
    std::vector<double> weights;
    for (std::size_t i : order) {
      anchors.push_back(problem.anchor(i));
      weights.push_back(problem.weight(i));
    }
    const SolverConfig config{.precision = 1e-9};
    const SolveResult a = solve_lp(problem, NormSpec::lp(2.4), config);
    const SolveResult b = solve_lp(AnchorSet(anchors, weights), NormSpec::lp(2.4), config);
    CHECK(max_abs_diff(a.point, b.point) <= 1e-12);
  }
}

TEST_CASE("solve_lp fixed-point residual at convergence") {
  Rng rng(53);
  for (double p : {1.5, 2.4, 4.0}) {
    for (int trial = 0; trial < 10; ++trial) {
      const AnchorSet problem = rng.problem(5, 2);
      const double precision = 1e-6;
      const SolveResult r = solve_lp(problem, NormSpec::lp(p), {.precision = precision});
      if (r.status != SolveStatus::Converged) continue;
      CHECK(max_abs_diff(lp_map(r.point, problem, p), r.point) < precision);
    }
  }
}
