#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "citenet/influence.hpp"
#include "citenet/sensitivity.hpp"

namespace citenet {

enum class Format { table, csv, json };

std::optional<Format> parse_format(std::string_view name);

/// A per-journal table of results ready to render.
struct Report {
  std::string title;
  std::string label_column = "journal";
  std::vector<std::string> columns;
  std::vector<std::string> row_labels;
  std::vector<std::vector<std::optional<double>>> cells;  // empty cell = undefined
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, double>> summary;
  /// Fixed decimals per column for the table format; empty means significant digits.
  std::vector<int> table_decimals;
};

inline constexpr int kDefaultSignificantDigits = 12;

/// `table` is aligned text, `csv` a header row plus one row per journal, and
/// `json` a single object keyed by journal with `meta` and `summary` blocks.
/// The summary is not part of the csv rendering.
std::string render_report(const Report& report, Format format,
                          int significant_digits = kDefaultSignificantDigits);

/// The JSON object `render_report` prints for Format::json.
nlohmann::ordered_json report_to_json(const Report& report,
                                      int significant_digits = kDefaultSignificantDigits);

/// `value` rounded to `digits` significant decimal digits, as text.
std::string format_number(double value, int digits);

Report weights_report(const WeightVector& weights, std::string indicator);
Report matrix_report(const JournalSet& journals, const Eigen::MatrixXd& values,
                     std::string title, bool with_row_sums);
Report power_weakness_report(const PowerWeakness& result);
Report diagnostics_report(const SelfCitationDiagnostics& diagnostics);
Report sensitivity_report(const SensitivityReport& sensitivity);
Report fit_report(const WeightVector& x, const WeightVector& y, const LinearFit& fit);
Report convergence_report(const ConvergenceProfile& profile);

}  // namespace citenet
