#include "fermat/lp_iteration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fixed_point.hpp"

namespace fermat {

Point lp_map(const Point& x, const AnchorSet& problem, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw FermatError(ErrorCode::UnsupportedNorm,
                      "the reweighting map needs 1 < p < inf; use the L1 or 2-D Chebyshev solver");
  }
  if (x.dim() != problem.dim()) {
    throw FermatError(ErrorCode::DimensionMismatch, "point and problem dimensions differ");
  }
  const NormSpec norm = p == 2.0 ? NormSpec::two() : NormSpec::lp(p);
  const double tol = coincidence_tolerance(problem);

  std::vector<double> numerator(problem.dim(), 0.0);
  std::vector<double> denominator(problem.dim(), 0.0);
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const Point& m = problem.anchor(i);
    const double d = distance(m, x, norm);
    if (d < tol) {
      throw FermatError(ErrorCode::AnchorCoincidence,
                        "reweighting map undefined at anchor " + std::to_string(i), i);
    }
    const double base = problem.weight(i) / d;
    for (std::size_t j = 0; j < numerator.size(); ++j) {
      double gap = std::abs(m[j] - x[j]);
      if (p < 2.0) gap = std::max(gap, tol);
      // k |gap|^(p-2) D^(1-p), scaled by D to keep pow() near 1
      const double u = base * std::pow(gap / d, p - 2.0);
      numerator[j] += u * m[j];
      denominator[j] += u;
    }
  }
  std::vector<double> next(problem.dim());
  for (std::size_t j = 0; j < next.size(); ++j) {
    // Zero total weight means every anchor shares x_j (only possible for p > 2).
    next[j] = denominator[j] > 0.0 ? numerator[j] / denominator[j] : x[j];
  }
  return Point(std::move(next));
}

SolveResult solve_lp(const AnchorSet& problem, const NormSpec& norm, const SolverConfig& config) {
  switch (norm.kind()) {
    case NormKind::Two:
      return solve_l2(problem, config);
    case NormKind::P: {
      const double p = norm.p();
      return detail::run_fixed_point(problem, p, config,
                                     [p](const Point& x, const AnchorSet& work) {
                                       return lp_map(x, work, p);
                                     });
    }
    case NormKind::One:
      throw FermatError(ErrorCode::UnsupportedNorm,
                        "norm 1 has an exact solver; use solve_l1");
    case NormKind::Infinity:
      throw FermatError(ErrorCode::UnsupportedNorm,
                        "infinity norm has an exact 2-D solver; use solve_linf_2d");
  }
  throw FermatError(ErrorCode::UnsupportedNorm, "unknown norm");
}

}  // namespace fermat
