#pragma once

// Command-line front end: problem files, inline flags, and the table/JSON
// reports. `run` is the whole program minus process plumbing so it can be
// driven in-process by tests.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fermat/core.hpp"
#include "fermat/median_l1.hpp"

namespace fermat::cli {

// Bad user input; field() names the offending field or flag.
class InputError : public std::runtime_error {
 public:
  InputError(std::string field, const std::string& message)
      : std::runtime_error("field '" + field + "': " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct ProblemFile {
  std::optional<int> dimension;
  std::string norm;  // "1" | "2" | "inf" | decimal p
  std::optional<double> precision;
  std::vector<double> weights;
  std::vector<std::vector<double>> anchors;
  std::optional<std::vector<double>> start;
};

ProblemFile parse_problem_json(const nlohmann::json& doc);
ProblemFile read_problem_file(const std::string& path);

// One point per row. A non-numeric first row is a header; if it names
// `weight_column`, that column supplies the weights.
struct CsvPoints {
  std::vector<std::vector<double>> anchors;
  std::vector<double> weights;  // empty when the CSV has no weight column
};
CsvPoints read_points_csv(std::istream& in, std::string_view weight_column = "weight");

NormSpec parse_norm(std::string_view text);
std::string norm_label(const NormSpec& norm);

// Inline list syntax: "1,2,3" and "1,2;3,4".
std::vector<double> parse_number_list(std::string_view text, const std::string& field);
std::vector<std::vector<double>> parse_point_list(std::string_view text, const std::string& field);

// Fixed-point rendering with halves rounded away from zero.
std::string format_fixed(double value, int decimals);
// Decimal count implied by a precision: 1e-3 -> 3, 1e-5 -> 5.
int decimals_for_precision(double precision);
// Shortest round-trip representation ("8", "2.5").
std::string format_shortest(double value);
// "(8∼13, 11, 3)"; `separator` is "∼" for tables and "~" for machine output.
std::string format_box(const SolutionBox& box, std::string_view separator);

AnchorSet to_anchor_set(const ProblemFile& problem);

// Exit codes: 0 solved, 1 input error, 2 iteration limit reached.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fermat::cli
