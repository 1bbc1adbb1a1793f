#include "fermat/weiszfeld.hpp"

#include <cmath>
#include <string>

#include "fixed_point.hpp"

namespace fermat {

void SolverConfig::validate() const {
  if (!(precision > 0.0) || !std::isfinite(precision)) {
    throw FermatError(ErrorCode::InvalidArgument, "precision must be positive");
  }
  if (max_iters < 1) throw FermatError(ErrorCode::InvalidArgument, "max_iters must be at least 1");
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Converged: return "Converged";
    case SolveStatus::MaxIters: return "MaxIters";
    case SolveStatus::AtAnchor: return "AtAnchor";
  }
  return "Unknown";
}

Point weiszfeld_map(const Point& x, const AnchorSet& problem) {
  if (x.dim() != problem.dim()) {
    throw FermatError(ErrorCode::DimensionMismatch, "point and problem dimensions differ");
  }
  const double tol = coincidence_tolerance(problem);
  std::vector<double> numerator(problem.dim(), 0.0);
  double denominator = 0.0;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const Point& m = problem.anchor(i);
    const double d = distance(m, x, NormSpec::two());
    if (d < tol) {
      throw FermatError(ErrorCode::AnchorCoincidence,
                        "Weiszfeld map undefined at anchor " + std::to_string(i), i);
    }
    const double u = problem.weight(i) / d;
    denominator += u;
    for (std::size_t j = 0; j < numerator.size(); ++j) numerator[j] += u * m[j];
  }
  for (double& v : numerator) v /= denominator;
  return Point(std::move(numerator));
}

AnchorTest anchor_optimality_test(std::size_t t, const AnchorSet& problem, double p) {
  if (t >= problem.size()) {
    throw FermatError(ErrorCode::IndexOutOfRange,
                      "anchor index " + std::to_string(t) + " out of range");
  }
  const NormSpec norm = p == 2.0 ? NormSpec::two() : NormSpec::lp(p);
  const double tol = coincidence_tolerance(problem);
  const Point& origin = problem.anchor(t);

  AnchorTest test;
  test.anchor_weight = problem.weight(t);
  std::vector<double> residual(problem.dim(), 0.0);
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (i == t) continue;
    const Point& m = problem.anchor(i);
    const double d = distance(m, origin, norm);
    if (d < tol) {
      test.anchor_weight += problem.weight(i);
      continue;
    }
    for (std::size_t j = 0; j < residual.size(); ++j) {
      const double diff = m[j] - origin[j];
      if (diff == 0.0) continue;
      residual[j] += problem.weight(i) * std::copysign(std::pow(std::abs(diff) / d, p - 1.0), diff);
    }
  }
  test.residual = Point(residual);
  const NormSpec dual = p == 2.0 ? NormSpec::two() : NormSpec::lp(p / (p - 1.0));
  test.residual_norm = distance(test.residual, Point(std::vector<double>(residual.size(), 0.0)), dual);
  test.optimal = test.residual_norm <= test.anchor_weight;
  return test;
}

SolveResult solve_l2(const AnchorSet& problem, const SolverConfig& config) {
  return detail::run_fixed_point(problem, 2.0, config,
                                 [](const Point& x, const AnchorSet& work) {
                                   return weiszfeld_map(x, work);
                                 });
}

}  // namespace fermat
