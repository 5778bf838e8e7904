#include <array>
#include <charconv>
#include <string>
#include <vector>

#include "citenet/citation_matrix.hpp"

namespace citenet {
namespace {

std::string location(std::size_t line, std::size_t field) {
  return "line " + std::to_string(line) + " field " + std::to_string(field);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos) {
    lines.pop_back();
  }
  return lines;
}

// Comma-separated fields; a field wrapped in double quotes may contain commas
// and doubled quotes.
std::vector<std::string> split_fields(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(c);
      }
    } else if (c == '"' && !was_quoted && current.find_first_not_of(" \t") == std::string::npos) {
      current.clear();
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
      was_quoted = false;
    } else {
      current.push_back(c);
    }
  }
  if (quoted) throw DataError("unterminated quoted field", "line " + std::to_string(line_no));
  fields.push_back(std::move(current));
  return fields;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

double parse_count(std::string_view field, std::size_t line_no, std::size_t field_no) {
  std::string_view s = trim(field);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DataError("non-numeric cell '" + std::string(field) + "'", location(line_no, field_no));
  }
  if (!std::isfinite(value) || value < 0.0) {
    throw DataError("cell must be finite and non-negative, got '" + std::string(field) + "'",
                    location(line_no, field_no));
  }
  return value;
}

void check_size(std::size_t n, const ParseOptions& options) {
  if (n > options.max_journals) {
    throw DataError("matrix has " + std::to_string(n) + " journals, above the limit of " +
                    std::to_string(options.max_journals));
  }
  if (n < 2) {
    throw DataError("citation matrix needs at least 2 journals, got " + std::to_string(n));
  }
}

std::string format_count(double value) {
  std::array<char, 32> buffer{};
  const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), ptr);
}

std::string quote_label(const std::string& label) {
  const bool needs_quotes = label.find_first_of(",\"\r\n") != std::string::npos ||
                            label.front() == ' ' || label.front() == '\t';
  if (!needs_quotes) return label;
  std::string out = "\"";
  for (char c : label) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

CitationMatrix parse_headerless(const std::vector<std::string_view>& lines,
                                const ParseOptions& options) {
  const std::size_t n = lines.size();
  check_size(n, options);
  Eigen::MatrixXd counts(n, n);
  std::size_t width = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto fields = split_fields(lines[i], i + 1);
    if (i == 0) width = fields.size();
    if (fields.size() != width) {
      throw DataError("ragged row: " + std::to_string(fields.size()) + " fields, expected " +
                          std::to_string(width),
                      "line " + std::to_string(i + 1));
    }
    if (fields.size() != n) {
      throw DataError("matrix is not square: " + std::to_string(n) + " rows of " +
                      std::to_string(fields.size()) + " fields");
    }
    for (std::size_t j = 0; j < n; ++j) counts(i, j) = parse_count(fields[j], i + 1, j + 1);
  }
  return CitationMatrix(JournalSet::generated(n), std::move(counts));
}

CitationMatrix parse_labeled(const std::vector<std::string_view>& lines,
                             const ParseOptions& options) {
  if (lines.empty()) throw DataError("empty input");
  auto header = split_fields(lines[0], 1);
  const std::size_t n = header.size() - 1;
  if (lines.size() - 1 != n) {
    throw DataError("matrix is not square: " + std::to_string(lines.size() - 1) + " rows for " +
                    std::to_string(n) + " column labels");
  }
  check_size(n, options);
  std::vector<std::string> labels(header.begin() + 1, header.end());
  JournalSet journals(labels);
  Eigen::MatrixXd counts(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t line_no = i + 2;
    const auto fields = split_fields(lines[i + 1], line_no);
    if (fields.size() != n + 1) {
      throw DataError("ragged row: " + std::to_string(fields.size()) + " fields, expected " +
                          std::to_string(n + 1),
                      "line " + std::to_string(line_no));
    }
    if (fields[0] != labels[i]) {
      throw DataError("row label '" + fields[0] + "' does not match column label '" + labels[i] +
                          "'",
                      "line " + std::to_string(line_no));
    }
    for (std::size_t j = 0; j < n; ++j) {
      counts(i, j) = parse_count(fields[j + 1], line_no, j + 2);
    }
  }
  return CitationMatrix(std::move(journals), std::move(counts));
}

}  // namespace

CitationMatrix parse_matrix_csv(std::string_view text, const ParseOptions& options) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw DataError("empty input");
  return options.labels_mode == LabelsMode::labeled ? parse_labeled(lines, options)
                                                    : parse_headerless(lines, options);
}

std::string serialize_matrix_csv(const CitationMatrix& m, LabelsMode labels_mode) {
  std::string out;
  const Eigen::Index n = m.size();
  if (labels_mode == LabelsMode::labeled) {
    for (const auto& label : m.journals().labels()) {
      out.push_back(',');
      out += quote_label(label);
    }
    out.push_back('\n');
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (labels_mode == LabelsMode::labeled) {
      out += quote_label(m.journals()[i]);
      out.push_back(',');
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j > 0) out.push_back(',');
      out += format_count(m(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace citenet
