#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "fermat/chebyshev2d.hpp"
#include "fermat/core.hpp"
#include "fermat/lp_iteration.hpp"
#include "fermat/median_l1.hpp"
#include "fermat/oracle.hpp"
#include "fermat/weiszfeld.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace fermat;

namespace {

using Coords = std::vector<double>;

std::vector<Coords> to_lists(const std::vector<Point>& points) {
  std::vector<Coords> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.values());
  return out;
}

AnchorSet make_anchor_set(const std::vector<Coords>& anchors, const Coords& weights) {
  std::vector<Point> pts;
  pts.reserve(anchors.size());
  for (const auto& a : anchors) pts.emplace_back(a);
  return AnchorSet(std::move(pts), weights);
}

SolverConfig make_config(double precision, int max_iters, const std::optional<Coords>& start) {
  SolverConfig config;
  config.precision = precision;
  config.max_iters = max_iters;
  if (start) config.start = Point(*start);
  return config;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weighted Fermat point solvers (C++ core)";

  py::register_exception<FermatError>(m, "FermatError", PyExc_ValueError);

  py::class_<AnchorSet>(m, "AnchorSet")
      .def(py::init(&make_anchor_set), py::arg("anchors"), py::arg("weights"))
      .def_property_readonly("dim", &AnchorSet::dim)
      .def_property_readonly("size", &AnchorSet::size)
      .def_property_readonly("total_weight", &AnchorSet::total_weight)
      .def_property_readonly("anchors", [](const AnchorSet& a) { return to_lists(a.anchors()); })
      .def_property_readonly("weights", &AnchorSet::weights)
      .def("__len__", &AnchorSet::size);

  py::class_<NormSpec>(m, "NormSpec")
      .def_static("one", &NormSpec::one)
      .def_static("two", &NormSpec::two)
      .def_static("lp", &NormSpec::lp, py::arg("p"))
      .def_static("infinity", &NormSpec::infinity)
      .def_property_readonly("p", &NormSpec::p)
      .def("__repr__", [](const NormSpec& n) { return "NormSpec(p=" + std::to_string(n.p()) + ")"; });

  py::enum_<SolveStatus>(m, "SolveStatus")
      .value("Converged", SolveStatus::Converged)
      .value("MaxIters", SolveStatus::MaxIters)
      .value("AtAnchor", SolveStatus::AtAnchor);

  py::class_<TraceRecord>(m, "TraceRecord")
      .def_readonly("iter", &TraceRecord::iter)
      .def_property_readonly("point", [](const TraceRecord& r) { return r.point.values(); })
      .def_readonly("objective", &TraceRecord::objective)
      .def_readonly("step", &TraceRecord::step);

  py::class_<SolveResult>(m, "SolveResult")
      .def_property_readonly("point", [](const SolveResult& r) { return r.point.values(); })
      .def_property_readonly("trace", [](const SolveResult& r) { return r.trace.records; })
      .def_readonly("status", &SolveResult::status);

  py::class_<SolutionBox>(m, "SolutionBox")
      .def_property_readonly("intervals",
                             [](const SolutionBox& b) {
                               std::vector<std::pair<double, double>> out;
                               for (const auto& iv : b.intervals) out.emplace_back(iv.lo, iv.hi);
                               return out;
                             })
      .def("center", [](const SolutionBox& b) { return b.center().values(); })
      .def("corners", [](const SolutionBox& b) { return to_lists(b.corners()); })
      .def("is_point", &SolutionBox::is_point)
      .def(
          "contains",
          [](const SolutionBox& b, const Coords& x, double slack) { return b.contains(Point(x), slack); },
          py::arg("x"), py::arg("slack") = 0.0);

  py::class_<AnchorTest>(m, "AnchorTest")
      .def_readonly("optimal", &AnchorTest::optimal)
      .def_property_readonly("residual", [](const AnchorTest& t) { return t.residual.values(); })
      .def_readonly("residual_norm", &AnchorTest::residual_norm)
      .def_readonly("anchor_weight", &AnchorTest::anchor_weight);

  py::class_<LinfSolution>(m, "LinfSolution")
      .def_readonly("manhattan_box", &LinfSolution::manhattan_box)
      .def_property_readonly("corners",
                             [](const LinfSolution& s) {
                               return to_lists({s.corners.begin(), s.corners.end()});
                             })
      .def_property_readonly("center", [](const LinfSolution& s) { return s.center.values(); });

  m.def("distance",
        [](const Coords& a, const Coords& b, const NormSpec& n) { return distance(Point(a), Point(b), n); },
        py::arg("a"), py::arg("b"), py::arg("norm"));
  m.def("objective",
        [](const Coords& x, const AnchorSet& p, const NormSpec& n) { return objective(Point(x), p, n); },
        py::arg("x"), py::arg("problem"), py::arg("norm"));
  m.def("gradient_lp",
        [](const Coords& x, const AnchorSet& p, double e) { return gradient_lp(Point(x), p, e).values(); },
        py::arg("x"), py::arg("problem"), py::arg("p"));
  m.def("weighted_centroid", [](const AnchorSet& p) { return weighted_centroid(p).values(); },
        py::arg("problem"));

  m.def("weighted_median",
        [](const Coords& values, const Coords& weights) {
          const Interval iv = weighted_median(values, weights);
          return std::make_pair(iv.lo, iv.hi);
        },
        py::arg("values"), py::arg("weights"));
  m.def("solve_l1", &solve_l1, py::arg("problem"));

  m.def("weiszfeld_map",
        [](const Coords& x, const AnchorSet& p) { return weiszfeld_map(Point(x), p).values(); },
        py::arg("x"), py::arg("problem"));
  m.def("anchor_optimality_test", &anchor_optimality_test, py::arg("t"), py::arg("problem"),
        py::arg("p") = 2.0);
  m.def("solve_l2",
        [](const AnchorSet& p, double precision, int max_iters, const std::optional<Coords>& start) {
          return solve_l2(p, make_config(precision, max_iters, start));
        },
        py::arg("problem"), py::arg("precision") = 1e-6, py::arg("max_iters") = 10000,
        py::arg("start") = py::none());

  m.def("lp_map",
        [](const Coords& x, const AnchorSet& p, double e) { return lp_map(Point(x), p, e).values(); },
        py::arg("x"), py::arg("problem"), py::arg("p"));
  m.def("solve_lp",
        [](const AnchorSet& p, const NormSpec& n, double precision, int max_iters,
           const std::optional<Coords>& start) {
          return solve_lp(p, n, make_config(precision, max_iters, start));
        },
        py::arg("problem"), py::arg("norm"), py::arg("precision") = 1e-6,
        py::arg("max_iters") = 10000, py::arg("start") = py::none());

  m.def("to_manhattan", [](const Coords& x) { return to_manhattan(Point(x)).values(); }, py::arg("pt"));
  m.def("from_manhattan", [](const Coords& x) { return from_manhattan(Point(x)).values(); },
        py::arg("pt"));
  m.def("solve_linf_2d", &solve_linf_2d, py::arg("problem"));

  m.def("grid_minimize",
        [](const AnchorSet& p, const NormSpec& n, double tol) { return grid_minimize(p, n, tol).values(); },
        py::arg("problem"), py::arg("norm"), py::arg("tol"));
  m.def("finite_diff_gradient",
        [](const Coords& x, const AnchorSet& p, double e, double h) {
          return finite_diff_gradient(Point(x), p, e, h).values();
        },
        py::arg("x"), py::arg("problem"), py::arg("p"), py::arg("h") = 1e-6);
  m.def("varignon_energy",
        [](const Coords& x, const AnchorSet& p, double height, const Coords& lengths) {
          return varignon_energy(Point(x), p, height, lengths);
        },
        py::arg("x"), py::arg("problem"), py::arg("height"), py::arg("lengths"));

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
