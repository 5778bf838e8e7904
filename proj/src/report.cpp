#include "citenet/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "citenet/version.hpp"

namespace citenet {
namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string fixed_number(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
  return buffer;
}

double rounded(double value, int digits) { return std::strtod(format_number(value, digits).c_str(), nullptr); }

nlohmann::ordered_json json_number(const std::optional<double>& value, int digits) {
  if (!value) return nullptr;
  return rounded(*value, digits);
}

std::string render_table(const Report& report, int digits) {
  const std::size_t columns = report.columns.size() + 1;
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{report.label_column};
  header.insert(header.end(), report.columns.begin(), report.columns.end());
  grid.push_back(std::move(header));
  for (std::size_t r = 0; r < report.row_labels.size(); ++r) {
    std::vector<std::string> line{report.row_labels[r]};
    for (std::size_t c = 0; c < report.cells[r].size(); ++c) {
      const auto& cell = report.cells[r][c];
      if (!cell) {
        line.emplace_back("n/a");
      } else if (c < report.table_decimals.size()) {
        line.push_back(fixed_number(*cell, report.table_decimals[c]));
      } else {
        line.push_back(format_number(*cell, digits));
      }
    }
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> widths(columns, 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], line[c].size());
  }

  std::ostringstream out;
  if (!report.title.empty()) out << report.title << '\n';
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c == 0) {
        text += line[c] + std::string(widths[c] - line[c].size(), ' ');
      } else {
        text += "  " + std::string(widths[c] - line[c].size(), ' ') + line[c];
      }
    }
    out << text << '\n';
  }
  if (!report.summary.empty()) {
    std::size_t width = 0;
    for (const auto& [name, value] : report.summary) width = std::max(width, name.size());
    out << '\n';
    for (const auto& [name, value] : report.summary) {
      out << name << std::string(width - name.size(), ' ') << "  " << format_number(value, digits)
          << '\n';
    }
  }
  return out.str();
}

std::string render_csv(const Report& report, int digits) {
  std::ostringstream out;
  out << csv_field(report.label_column);
  for (const auto& column : report.columns) out << ',' << csv_field(column);
  out << '\n';
  for (std::size_t r = 0; r < report.row_labels.size(); ++r) {
    out << csv_field(report.row_labels[r]);
    for (const auto& cell : report.cells[r]) {
      out << ',';
      if (cell) out << format_number(*cell, digits);
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::optional<double>> row_of(std::initializer_list<std::optional<double>> values) {
  return std::vector<std::optional<double>>(values);
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

std::string format_number(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", std::clamp(digits, 1, 17), value);
  return buffer;
}

nlohmann::ordered_json report_to_json(const Report& report, int significant_digits) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  nlohmann::ordered_json meta = report.meta;
  if (!meta.is_object()) meta = nlohmann::ordered_json::object();
  meta["version"] = CITENET_VERSION;
  out["meta"] = std::move(meta);
  for (std::size_t r = 0; r < report.row_labels.size(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
      row[report.columns[c]] = json_number(report.cells[r][c], significant_digits);
    }
    out[report.row_labels[r]] = std::move(row);
  }
  if (!report.summary.empty()) {
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const auto& [name, value] : report.summary) {
      summary[name] = rounded(value, significant_digits);
    }
    out["summary"] = std::move(summary);
  }
  return out;
}

std::string render_report(const Report& report, Format format, int significant_digits) {
  switch (format) {
    case Format::table:
      return render_table(report, significant_digits);
    case Format::csv:
      return render_csv(report, significant_digits);
    case Format::json:
      return report_to_json(report, significant_digits).dump(2) + '\n';
  }
  return {};
}

Report weights_report(const WeightVector& weights, std::string indicator) {
  Report report;
  report.columns = {"value"};
  report.row_labels = weights.journals().labels();
  for (Eigen::Index i = 0; i < weights.size(); ++i) report.cells.push_back(row_of({weights[i]}));
  report.meta["indicator"] = std::move(indicator);
  report.meta["normalization"] =
      weights.normalization() == Normalization::stochastic ? "stochastic" : "raw";
  return report;
}

Report matrix_report(const JournalSet& journals, const Eigen::MatrixXd& values, std::string title,
                     bool with_row_sums) {
  Report report;
  report.title = std::move(title);
  report.columns = journals.labels();
  if (with_row_sums) report.columns.emplace_back("row_sum");
  report.row_labels = journals.labels();
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    std::vector<std::optional<double>> row;
    double sum = 0;
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
      row.emplace_back(values(i, j));
      sum += values(i, j);
    }
    if (with_row_sums) row.emplace_back(sum);
    report.cells.push_back(std::move(row));
  }
  if (with_row_sums) {
    double grand = 0;
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
      for (Eigen::Index j = 0; j < values.cols(); ++j) grand += values(i, j);
    }
    report.summary.emplace_back("grand_total", grand);
  }
  return report;
}

Report power_weakness_report(const PowerWeakness& result) {
  Report report;
  report.columns = {"power", "weakness", "ratio"};
  report.row_labels = result.ratio.journals().labels();
  for (Eigen::Index i = 0; i < result.ratio.size(); ++i) {
    report.cells.push_back(row_of({result.power[i], result.weakness[i], result.ratio[i]}));
  }
  report.meta["indicator"] = "pwr";
  return report;
}

Report diagnostics_report(const SelfCitationDiagnostics& diagnostics) {
  Report report;
  report.columns = {"self",
                    "cited_by_others",
                    "citing_others",
                    "self_cited_rate",
                    "self_citing_rate",
                    "cited_citing_ratio_with",
                    "cited_citing_ratio_without"};
  report.row_labels = diagnostics.journals.labels();
  for (const auto& row : diagnostics.rows) {
    report.cells.push_back(row_of({row.self, row.cited_by_others, row.citing_others,
                                   row.self_cited_rate, row.self_citing_rate,
                                   row.cited_citing_ratio_with, row.cited_citing_ratio_without}));
  }
  report.meta["indicator"] = "self_citation_diagnostics";
  report.summary = {{"grand_total", diagnostics.grand_total},
                    {"self_total", diagnostics.self_total}};
  return report;
}

Report sensitivity_report(const SensitivityReport& sensitivity) {
  Report report;
  report.columns = {"with", "without", "pct_change"};
  report.row_labels = sensitivity.journals.labels();
  for (const auto& row : sensitivity.rows) {
    report.cells.push_back(row_of({row.with, row.without, row.pct_change}));
  }
  report.meta["indicator"] = sensitivity.indicator;
  report.summary = {{"max_abs_pct_change", sensitivity.max_abs_pct_change},
                    {"mean_abs_pct_change", sensitivity.mean_abs_pct_change}};
  return report;
}

Report fit_report(const WeightVector& x, const WeightVector& y, const LinearFit& fit) {
  Report report;
  report.columns = {"x", "y"};
  report.row_labels = x.journals().labels();
  for (Eigen::Index i = 0; i < x.size(); ++i) report.cells.push_back(row_of({x[i], y[i]}));
  report.summary = {{"slope", fit.slope},
                    {"intercept", fit.intercept},
                    {"n_points", static_cast<double>(fit.n_points)}};
  if (fit.pearson_r) report.summary.insert(report.summary.begin() + 2, {"pearson_r", *fit.pearson_r});
  return report;
}

Report convergence_report(const ConvergenceProfile& profile) {
  Report report;
  report.label_column = "cycle";
  report.columns = {"delta", "decay_ratio"};
  for (std::size_t k = 0; k < profile.deltas.size(); ++k) {
    const int cycle = static_cast<int>(k) + 1;
    std::optional<double> ratio;
    for (const auto& decay : profile.decay_ratios) {
      if (decay.cycle == cycle) ratio = decay.ratio;
    }
    report.row_labels.push_back(std::to_string(cycle));
    report.cells.push_back(row_of({profile.deltas[k], ratio}));
  }
  report.meta["geometric"] = profile.geometric;
  if (const auto ratio = profile.asymptotic_ratio()) {
    report.summary.emplace_back("asymptotic_ratio", *ratio);
  }
  return report;
}

}  // namespace citenet
