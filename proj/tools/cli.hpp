#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "citenet/citation_matrix.hpp"
#include "citenet/influence.hpp"
#include "citenet/report.hpp"
#include "citenet/version.hpp"

namespace citenet::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDataError = 2,
  kNumericalError = 3,
};

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> input_path;  // "-" reads standard input
  std::optional<std::string> fixture;
  LabelsMode labels_mode = LabelsMode::headerless;
  std::size_t max_journals = kDefaultMaxJournals;
  bool transpose = false;
  bool self_citations = true;
  IterationMode mode = Tolerance{};
  int power = 1;  // k for `power` and `pwr`
  std::string indicator = "iw";
  Format format = Format::table;
  int digits = kDefaultSignificantDigits;
  std::optional<std::string> output_path;
};

/// Executes an already-parsed configuration and returns the rendered report.
/// Throws citenet::Error on failure.
std::string execute(const RunConfig& config);

/// Text printed by `reproduce-paper`.
std::string reproduce_paper(Format format, int digits = kDefaultSignificantDigits);

/// Entry point behind `main`. `args` excludes the program name. Failures are
/// reported as one tab-separated line on `err`: error, kind, subject, message.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace citenet::cli
