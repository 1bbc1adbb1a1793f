#include "fixed_point.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace fermat::detail {

namespace {

constexpr int kMaxBacktracks = 60;
constexpr int kMaxRisingSteps = 50;

std::optional<std::size_t> anchor_at(const Point& x, const AnchorSet& problem,
                                     const NormSpec& norm, double tol) {
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (distance(problem.anchor(i), x, norm) < tol) return i;
  }
  return std::nullopt;
}

std::size_t nearest_anchor(const Point& x, const AnchorSet& problem, const NormSpec& norm) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const double d = distance(problem.anchor(i), x, norm);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

// Move off a non-optimal anchor along the steepest-descent direction of the
// remaining terms. At p = 2 this is the modified Weiszfeld step
// (|R| - k_t) / sum_{i != t} k_i / |M_i - M_t| along R / |R|.
Point step_off_anchor(std::size_t t, const AnchorSet& problem, double p, const AnchorTest& test) {
  const NormSpec norm = p == 2.0 ? NormSpec::two() : NormSpec::lp(p);
  const Point& origin = problem.anchor(t);
  const double tol = coincidence_tolerance(problem);
  double inverse_sum = 0.0;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const double d = distance(problem.anchor(i), origin, norm);
    if (d >= tol) inverse_sum += problem.weight(i) / d;
  }
  const double length = (test.residual_norm - test.anchor_weight) / inverse_sum;
  const double q = p / (p - 1.0);
  std::vector<double> next(origin.values());
  for (std::size_t j = 0; j < next.size(); ++j) {
    const double r = test.residual[j];
    const double dir = std::copysign(std::pow(std::abs(r) / test.residual_norm, q - 1.0), r);
    next[j] += length * dir;
  }
  return Point(std::move(next));
}

double step_norm(const Point& a, const Point& b) {
  return distance(a, b, NormSpec::infinity());
}

}  // namespace

SolveResult run_fixed_point(const AnchorSet& problem, double p, const SolverConfig& config,
                            const FixedPointMap& map) {
  config.validate();
  const NormSpec norm = p == 2.0 ? NormSpec::two() : NormSpec::lp(p);
  const AnchorSet work = canonicalize(problem);
  const double tol = coincidence_tolerance(work);

  Point x = config.start ? *config.start : weighted_centroid(problem);
  if (x.dim() != problem.dim()) {
    throw FermatError(ErrorCode::DimensionMismatch,
                      "start point has " + std::to_string(x.dim()) + " coordinates, expected " +
                          std::to_string(problem.dim()));
  }

  SolveResult result;
  result.status = SolveStatus::MaxIters;
  double fx = objective(x, work, norm);
  result.trace.records.push_back({0, x, fx, 0.0});

  bool finished = false;
  bool settling = false;  // last accepted step was below precision
  int rising = 0;
  double last_step = std::numeric_limits<double>::infinity();
  for (int iter = 1; !finished; ++iter) {
    Point candidate;
    try {
      if (const auto t = anchor_at(x, work, norm, tol)) {
        const AnchorTest test = anchor_optimality_test(*t, work, p);
        if (test.optimal) {
          x = work.anchor(*t);
          result.status = SolveStatus::AtAnchor;
          break;
        }
        candidate = step_off_anchor(*t, work, p, test);
      } else {
        candidate = map(x, work);
      }
    } catch (const FermatError& e) {
      if (e.code() != ErrorCode::NonFiniteValue) throw;
      result.status = SolveStatus::MaxIters;
      break;
    }

    // Convergence is judged on the full map displacement; a backtracked step
    // is short by construction and says nothing about the residual. A small
    // step is confirmed by a small residual at the point it landed on, since
    // the map can oscillate around the fixed point.
    const double map_step = step_norm(candidate, x);
    if (settling && map_step < config.precision) {
      result.status = SolveStatus::Converged;
      break;
    }
    if (iter > config.max_iters) break;
    double fc = objective(candidate, work, norm);
    if (!(fc < fx)) {
      // The map is a descent direction; shrink towards x until the objective
      // drops. Failing that, x is stationary to working precision.
      bool improved = false;
      std::vector<double> trial(x.dim());
      for (int h = 1; h <= kMaxBacktracks && !improved; ++h) {
        const double s = std::ldexp(1.0, -h);
        for (std::size_t j = 0; j < trial.size(); ++j) trial[j] = x[j] + s * (candidate[j] - x[j]);
        Point shrunk(trial);
        if (shrunk == x) break;
        const double fs = objective(shrunk, work, norm);
        if (fs < fx) {
          candidate = std::move(shrunk);
          fc = fs;
          improved = true;
        }
      }
      if (!improved) {
        result.status = SolveStatus::Converged;
        break;
      }
    }

    const double step = step_norm(candidate, x);
    result.trace.records.push_back({iter, candidate, fc, step});
    x = std::move(candidate);
    fx = fc;

    settling = map_step < config.precision;
    if (!settling) {
      rising = step > last_step ? rising + 1 : 0;
      last_step = step;
      if (rising >= kMaxRisingSteps) {
        result.status = SolveStatus::MaxIters;
        finished = true;
      }
    }
  }

  // An optimal anchor is the global minimizer; iterates approach it only
  // linearly, so finish on it exactly.
  if (result.status == SolveStatus::Converged) {
    const std::size_t t = nearest_anchor(x, work, norm);
    if (anchor_optimality_test(t, work, p).optimal) {
      const Point& m = work.anchor(t);
      const double fm = objective(m, work, norm);
      if (fm < fx) {
        const int iter = result.trace.back().iter + 1;
        result.trace.records.push_back({iter, m, fm, step_norm(m, x)});
      }
      x = m;
      result.status = SolveStatus::AtAnchor;
    }
  }

  result.point = std::move(x);
  return result;
}

}  // namespace fermat::detail
