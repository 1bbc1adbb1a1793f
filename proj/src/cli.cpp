#include "fermat/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fermat/chebyshev2d.hpp"
#include "fermat/lp_iteration.hpp"
#include "fermat/oracle.hpp"
#include "fermat/weiszfeld.hpp"

namespace fermat::cli {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<double> to_number(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) return std::nullopt;
  double value = 0.0;
  const char* begin = t.data();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    parts.push_back(std::string(text.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

double json_number(const json& value, const std::string& field) {
  if (!value.is_number()) throw InputError(field, "expected a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw InputError(field, "expected a finite number");
  return v;
}

std::vector<double> json_numbers(const json& value, const std::string& field) {
  if (!value.is_array()) throw InputError(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(json_number(value[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string render_point(const Point& p, int decimals) {
  std::string s = "(";
  for (std::size_t j = 0; j < p.dim(); ++j) {
    if (j) s += ",";
    s += format_fixed(p[j], decimals);
  }
  return s + ")";
}

std::string render_shortest(const Point& p) {
  std::string s = "(";
  for (std::size_t j = 0; j < p.dim(); ++j) {
    if (j) s += ", ";
    s += format_shortest(p[j]);
  }
  return s + ")";
}

std::string render_general(double v) {
  std::ostringstream os;
  os << std::setprecision(9) << v;
  return os.str();
}

void validate(const ProblemFile& problem) {
  if (problem.anchors.empty()) throw InputError("anchors", "at least one anchor required");
  const std::size_t dim =
      problem.dimension ? static_cast<std::size_t>(*problem.dimension) : problem.anchors[0].size();
  if (problem.dimension && *problem.dimension < 1) {
    throw InputError("dimension", "must be a positive integer");
  }
  for (std::size_t i = 0; i < problem.anchors.size(); ++i) {
    if (problem.anchors[i].size() != dim) {
      throw InputError("anchors[" + std::to_string(i) + "]",
                       "expected " + std::to_string(dim) + " coordinates, got " +
                           std::to_string(problem.anchors[i].size()));
    }
  }
  if (problem.weights.size() != problem.anchors.size()) {
    throw InputError("weights", "expected " + std::to_string(problem.anchors.size()) +
                                    " entries (one per anchor), got " +
                                    std::to_string(problem.weights.size()));
  }
  for (std::size_t i = 0; i < problem.weights.size(); ++i) {
    if (!(problem.weights[i] > 0.0)) {
      throw InputError("weights[" + std::to_string(i) + "]", "weights must be positive");
    }
  }
  if (problem.start && problem.start->size() != dim) {
    throw InputError("start", "expected " + std::to_string(dim) + " coordinates, got " +
                                  std::to_string(problem.start->size()));
  }
  if (problem.precision && !(*problem.precision > 0.0)) {
    throw InputError("precision", "must be positive");
  }
}

struct VerifyReport {
  bool ran = false;
  std::string skipped;
  double tol = 0.0;
  double grid_objective = 0.0;
  double solver_objective = 0.0;
  double gap = 0.0;
  double bound = 0.0;
  bool agree = false;
  Point grid_point;
};

VerifyReport verify(const AnchorSet& problem, const NormSpec& norm, const Point& solution,
                    double tol) {
  VerifyReport report;
  report.tol = tol;
  if (problem.dim() > kGridMaxDim || problem.size() > kGridMaxAnchors) {
    report.skipped = "grid oracle limited to n <= 6 and m <= 64";
    return report;
  }
  report.ran = true;
  report.grid_point = grid_minimize(problem, norm, tol);
  report.grid_objective = objective(report.grid_point, problem, norm);
  report.solver_objective = objective(solution, problem, norm);
  report.gap = std::abs(report.solver_objective - report.grid_objective);
  report.bound = problem.total_weight() * tol + 1e-9;
  report.agree = report.gap <= report.bound;
  return report;
}

void print_verify(std::ostream& out, const VerifyReport& v) {
  if (!v.ran) {
    out << "Verify : skipped (" << v.skipped << ")\n";
    return;
  }
  out << "Verify : grid objective " << render_general(v.grid_objective) << ", solver objective "
      << render_general(v.solver_objective) << ", gap " << render_general(v.gap) << " <= "
      << render_general(v.bound) << (v.agree ? " : agree" : " : DISAGREE") << "\n";
}

json verify_json(const VerifyReport& v) {
  if (!v.ran) return json{{"skipped", v.skipped}};
  return json{{"tol", v.tol},
              {"grid_point", v.grid_point.values()},
              {"grid_objective", v.grid_objective},
              {"solver_objective", v.solver_objective},
              {"gap", v.gap},
              {"bound", v.bound},
              {"agree", v.agree}};
}

std::string header_line(const NormSpec& norm, const AnchorSet& problem,
                        std::optional<double> precision, int decimals) {
  std::string line = "Norm : " + norm_label(norm) + "   Points : " + std::to_string(problem.size()) +
                     "   Dimension : " + std::to_string(problem.dim());
  if (precision) line += "   Precision : " + format_fixed(*precision, decimals);
  return line;
}

}  // namespace

ProblemFile parse_problem_json(const json& doc) {
  if (!doc.is_object()) throw InputError("<root>", "expected a JSON object");
  ProblemFile problem;
  if (doc.contains("dimension")) {
    const json& d = doc["dimension"];
    if (!d.is_number_integer()) throw InputError("dimension", "expected an integer");
    problem.dimension = d.get<int>();
  }
  if (!doc.contains("norm")) throw InputError("norm", "missing");
  const json& norm = doc["norm"];
  if (norm.is_string()) {
    problem.norm = norm.get<std::string>();
  } else if (norm.is_number()) {
    problem.norm = format_shortest(norm.get<double>());
  } else {
    throw InputError("norm", "expected \"1\", \"2\", \"inf\" or a number");
  }
  if (doc.contains("precision") && !doc["precision"].is_null()) {
    problem.precision = json_number(doc["precision"], "precision");
  }
  if (!doc.contains("anchors")) throw InputError("anchors", "missing");
  const json& anchors = doc["anchors"];
  if (!anchors.is_array()) throw InputError("anchors", "expected an array of coordinate lists");
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    problem.anchors.push_back(json_numbers(anchors[i], "anchors[" + std::to_string(i) + "]"));
  }
  if (!doc.contains("weights")) throw InputError("weights", "missing");
  problem.weights = json_numbers(doc["weights"], "weights");
  if (doc.contains("start") && !doc["start"].is_null()) {
    problem.start = json_numbers(doc["start"], "start");
  }
  return problem;
}

ProblemFile read_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("input", "cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("input", std::string("malformed JSON: ") + e.what());
  }
  return parse_problem_json(doc);
}

CsvPoints read_points_csv(std::istream& in, std::string_view weight_column) {
  CsvPoints out;
  std::optional<std::size_t> weight_index;
  std::string line;
  std::size_t row = 0;
  bool first = true;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto cells = split(t, ',');
    if (first) {
      first = false;
      const bool header = std::any_of(cells.begin(), cells.end(),
                                      [](const std::string& c) { return !to_number(c); });
      if (header) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (trim(cells[c]) == weight_column) weight_index = c;
        }
        continue;
      }
    }
    std::vector<double> coords;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto v = to_number(cells[c]);
      const std::string field =
          "points-csv row " + std::to_string(row + 1) + " column " + std::to_string(c + 1);
      if (!v) throw InputError(field, "expected a number, got '" + trim(cells[c]) + "'");
      if (weight_index && c == *weight_index) {
        out.weights.push_back(*v);
      } else {
        coords.push_back(*v);
      }
    }
    out.anchors.push_back(std::move(coords));
    ++row;
  }
  return out;
}

NormSpec parse_norm(std::string_view text) {
  const std::string t = trim(text);
  if (t == "inf" || t == "infinity" || t == "Inf") return NormSpec::infinity();
  const auto p = to_number(t);
  if (!p) throw InputError("norm", "expected \"1\", \"2\", \"inf\" or a number, got '" + t + "'");
  if (*p == 1.0) return NormSpec::one();
  if (*p == 2.0) return NormSpec::two();
  if (*p < 1.0) {
    throw FermatError(ErrorCode::UnsupportedNorm,
                      "norm p = " + t + " is not supported: p must be 1, inf, or greater than 1");
  }
  return NormSpec::lp(*p);
}

std::string norm_label(const NormSpec& norm) {
  switch (norm.kind()) {
    case NormKind::One: return "1";
    case NormKind::Two: return "2";
    case NormKind::P: return format_shortest(norm.p());
    case NormKind::Infinity: return "inf";
  }
  return "?";
}

std::vector<double> parse_number_list(std::string_view text, const std::string& field) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (const auto& cell : split(text, ',')) {
    const auto v = to_number(cell);
    if (!v) throw InputError(field, "expected a number, got '" + trim(cell) + "'");
    out.push_back(*v);
  }
  return out;
}

std::vector<std::vector<double>> parse_point_list(std::string_view text, const std::string& field) {
  std::vector<std::vector<double>> out;
  if (trim(text).empty()) return out;
  for (const auto& row : split(text, ';')) {
    if (trim(row).empty()) continue;
    out.push_back(parse_number_list(row, field));
  }
  return out;
}

std::string format_fixed(double value, int decimals) {
  decimals = std::clamp(decimals, 0, 15);
  const double scale = std::pow(10.0, decimals);
  const double scaled = value * scale;
  if (!std::isfinite(scaled) || std::abs(scaled) >= 9.0e15) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(decimals) << value;
    return os.str();
  }
  const auto units = static_cast<long long>(std::round(scaled));  // halves away from zero
  const unsigned long long mag = units < 0 ? static_cast<unsigned long long>(-units)
                                           : static_cast<unsigned long long>(units);
  std::string digits = std::to_string(mag);
  if (decimals > 0) {
    if (digits.size() <= static_cast<std::size_t>(decimals)) {
      digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  }
  return units < 0 ? "-" + digits : digits;
}

int decimals_for_precision(double precision) {
  if (!(precision > 0.0) || precision >= 1.0) return 0;
  return std::clamp(static_cast<int>(std::ceil(-std::log10(precision) - 1e-9)), 0, 15);
}

std::string format_shortest(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string format_box(const SolutionBox& box, std::string_view separator) {
  std::string s = "(";
  for (std::size_t j = 0; j < box.intervals.size(); ++j) {
    if (j) s += ", ";
    const Interval& iv = box.intervals[j];
    s += format_shortest(iv.lo);
    if (!iv.degenerate()) {
      s += separator;
      s += format_shortest(iv.hi);
    }
  }
  return s + ")";
}

AnchorSet to_anchor_set(const ProblemFile& problem) {
  validate(problem);
  std::vector<Point> anchors;
  anchors.reserve(problem.anchors.size());
  for (const auto& a : problem.anchors) anchors.emplace_back(a);
  return AnchorSet(std::move(anchors), problem.weights);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted Fermat point (1-median) solver", "fermat"};
  app.require_subcommand(1);
  CLI::App* solve = app.add_subcommand("solve", "Solve one problem and print the trace or box");

  std::string input;
  std::string norm_text;
  std::string weights_text;
  std::string points_text;
  std::string points_csv;
  std::string weight_column = "weight";
  std::string start_text;
  std::string format = "table";
  double precision = 0.0;
  int max_iters = 10000;
  bool run_verify = false;
  double verify_tol = 1e-2;

  solve->add_option("-i,--input", input, "JSON problem file");
  solve->add_option("--norm", norm_text, "1, 2, inf, or p > 1");
  solve->add_option("--precision", precision, "stop when the step's max-coordinate change is below this");
  solve->add_option("--weights", weights_text, "comma-separated weights, one per anchor");
  solve->add_option("--points", points_text, "anchors as \"x1,y1;x2,y2;...\"");
  solve->add_option("--points-csv", points_csv, "CSV file with one anchor per row");
  solve->add_option("--weight-column", weight_column, "CSV header naming the weight column")
      ->capture_default_str();
  solve->add_option("--start", start_text, "comma-separated start point (default: weighted centroid)");
  solve->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  solve->add_option("--max-iters", max_iters, "iteration limit")->capture_default_str();
  solve->add_flag("--verify", run_verify, "cross-check the result against the grid oracle");
  solve->add_option("--verify-tol", verify_tol, "grid oracle resolution")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    ProblemFile problem;
    if (!input.empty()) {
      if (!points_text.empty() || !points_csv.empty()) {
        throw InputError("points", "give anchors either in the --input file or inline, not both");
      }
      problem = read_problem_file(input);
    } else {
      if (points_text.empty() && points_csv.empty()) {
        throw InputError("points", "at least one anchor required (use --input, --points or --points-csv)");
      }
      if (!points_text.empty() && !points_csv.empty()) {
        throw InputError("points", "use either --points or --points-csv");
      }
      if (!points_csv.empty()) {
        std::ifstream csv(points_csv);
        if (!csv) throw InputError("points-csv", "cannot open '" + points_csv + "'");
        CsvPoints parsed = read_points_csv(csv, weight_column);
        problem.anchors = std::move(parsed.anchors);
        problem.weights = std::move(parsed.weights);
      } else {
        problem.anchors = parse_point_list(points_text, "points");
      }
      if (problem.anchors.empty()) throw InputError("points", "at least one anchor required");
    }
    if (solve->count("--norm")) problem.norm = norm_text;
    if (solve->count("--weights")) problem.weights = parse_number_list(weights_text, "weights");
    if (solve->count("--precision")) problem.precision = precision;
    if (solve->count("--start")) problem.start = parse_number_list(start_text, "start");
    if (problem.norm.empty()) throw InputError("norm", "missing (use --norm)");
    if (max_iters < 1) throw InputError("max-iters", "must be at least 1");
    if (!(verify_tol > 0.0)) throw InputError("verify-tol", "must be positive");

    const AnchorSet anchors = to_anchor_set(problem);
    const NormSpec norm = parse_norm(problem.norm);
    const bool as_json = format == "json";

    if (norm.kind() == NormKind::One || norm.kind() == NormKind::Infinity) {
      json doc{{"norm", norm_label(norm)},
               {"dimension", anchors.dim()},
               {"points", anchors.size()},
               {"status", "Exact"}};
      SolutionBox box;
      Point representative;
      std::optional<LinfSolution> linf;
      if (norm.kind() == NormKind::One) {
        box = solve_l1(anchors);
        representative = box.center();
      } else {
        linf = solve_linf_2d(anchors);
        box = linf->manhattan_box;
        representative = linf->center;
      }
      const double value = objective(representative, anchors, norm);
      std::optional<VerifyReport> report;
      if (run_verify) report = verify(anchors, norm, representative, verify_tol);

      if (as_json) {
        json intervals = json::array();
        for (const auto& iv : box.intervals) intervals.push_back({iv.lo, iv.hi});
        doc["box"] = intervals;
        doc["display"] = format_box(box, "~");
        doc["center"] = representative.values();
        if (linf) {
          doc["box_coordinates"] = "rotated";
          json corners = json::array();
          for (const auto& c : linf->corners) corners.push_back(c.values());
          doc["corners"] = corners;
        }
        doc["objective"] = value;
        if (report) doc["verify"] = verify_json(*report);
        out << doc.dump(2) << "\n";
      } else {
        out << header_line(norm, anchors, std::nullopt, 0) << "\n";
        if (linf) {
          out << "Rotated box : " << format_box(box, "∼") << "\n";
          out << "Center : " << render_shortest(linf->center) << "\n";
          out << "Corners :";
          for (std::size_t c = 0; c < linf->corners.size(); ++c) {
            out << (c ? ", " : " ") << render_shortest(linf->corners[c]);
          }
          out << "\n";
        } else {
          out << "Output : " << format_box(box, "∼") << "\n";
        }
        out << "Objective : " << format_shortest(value) << "\n";
        if (report) print_verify(out, *report);
      }
      return 0;
    }

    if (!problem.precision) {
      throw InputError("precision", "required for norm " + norm_label(norm));
    }
    SolverConfig config;
    config.precision = *problem.precision;
    config.max_iters = max_iters;
    if (problem.start) config.start = Point(*problem.start);
    const SolveResult result = solve_lp(anchors, norm, config);
    const int decimals = decimals_for_precision(config.precision);
    const int iterations = result.trace.back().iter;
    std::optional<VerifyReport> report;
    if (run_verify) report = verify(anchors, norm, result.point, verify_tol);
    const double value = objective(result.point, anchors, norm);

    if (as_json) {
      json trace = json::array();
      for (const auto& r : result.trace.records) {
        trace.push_back(json{{"iter", r.iter},
                             {"point", r.point.values()},
                             {"objective", r.objective},
                             {"step", r.step}});
      }
      json doc{{"norm", norm_label(norm)},
               {"dimension", anchors.dim()},
               {"points", anchors.size()},
               {"precision", config.precision},
               {"decimals", decimals},
               {"status", std::string(to_string(result.status))},
               {"iterations", iterations},
               {"trace", trace},
               {"point", result.point.values()},
               {"objective", value}};
      if (report) doc["verify"] = verify_json(*report);
      out << doc.dump(2) << "\n";
    } else {
      out << header_line(norm, anchors, config.precision, decimals) << "\n";
      for (const auto& r : result.trace.records) {
        out << (r.iter == 0 ? std::string("Start") : std::to_string(r.iter)) << " : "
            << render_point(r.point, decimals) << "\n";
      }
      out << "Status : " << to_string(result.status) << " after " << iterations << " iterations\n";
      out << "Point : " << render_point(result.point, decimals) << "\n";
      out << "Objective : " << format_fixed(value, decimals) << "\n";
      if (report) print_verify(out, *report);
    }
    return result.status == SolveStatus::MaxIters ? 2 : 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const FermatError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fermat::cli
