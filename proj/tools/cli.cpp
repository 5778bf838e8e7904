#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "citenet/fixtures.hpp"
#include "citenet/sensitivity.hpp"
#include "citenet/version.hpp"

namespace citenet::cli {
namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot read input file", path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

CitationMatrix load_matrix(const RunConfig& config) {
  if (config.input_path.has_value() == config.fixture.has_value()) {
    throw UsageError("give exactly one input: a file path or --fixture");
  }
  CitationMatrix m = config.fixture
                         ? fixtures::by_name(*config.fixture)
                         : parse_matrix_csv(read_input(*config.input_path),
                                            ParseOptions{config.labels_mode, config.max_journals});
  return config.transpose ? transpose(m) : m;
}

Indicator make_indicator(const RunConfig& config) {
  if (config.indicator == "iw") return InfluenceWeightIndicator{config.mode};
  if (config.indicator == "raw-cited") return RawCitedIndicator{};
  if (config.indicator == "ratio") return CitedCitingRatioIndicator{};
  throw UsageError("unknown indicator '" + config.indicator + "'");
}

void describe_run(Report& report, const RunConfig& config) {
  report.meta["mode"] = describe(config.mode);
  report.meta["self_citations"] = config.self_citations;
  report.meta["transposed"] = config.transpose;
}

Report run_iw(const CitationMatrix& m, const RunConfig& config) {
  const IterationTrace trace = influence_trace(m, config.self_citations, config.mode);
  const WeightVector weights = influence_weights(m, config.self_citations, config.mode);
  Report report = weights_report(weights, "iw");
  report.meta["iterations"] = trace.iterations_used();
  report.meta["converged"] = trace.converged;
  describe_run(report, config);
  return report;
}

Report run_fit(const CitationMatrix& m, const RunConfig& config) {
  const Indicator indicator = make_indicator(config);
  const WeightVector with = evaluate_indicator(m, indicator);
  const WeightVector without = evaluate_indicator(strip_self_citations(m), indicator);
  Report report = fit_report(with, without, linear_fit(with, without));
  report.title = indicator_name(indicator) + " without self-citations against with self-citations";
  report.meta["indicator"] = indicator_name(indicator);
  if (config.indicator == "iw") report.meta["mode"] = describe(config.mode);
  return report;
}

Report run_subcommand(const RunConfig& config) {
  const CitationMatrix m = load_matrix(config);
  const std::string& name = config.subcommand;
  if (name == "iw") return run_iw(m, config);
  if (name == "pwr") {
    Report report = power_weakness_report(power_weakness_ratio(m, config.power));
    report.meta["iterations"] = config.power;
    report.meta["transposed"] = config.transpose;
    return report;
  }
  if (name == "normalize") {
    const NormalizedMatrix normalized = pinski_narin_normalize(m);
    Report report = matrix_report(normalized.journals(), normalized.values(),
                                  "Normalized citation matrix (rows cited, columns citing)", true);
    report.meta["indicator"] = "normalized_matrix";
    return report;
  }
  if (name == "power") {
    Report report = matrix_report(m.journals(), matrix_power(m, config.power),
                                  "Matrix power k=" + std::to_string(config.power), false);
    report.meta["indicator"] = "matrix_power";
    report.meta["k"] = config.power;
    return report;
  }
  if (name == "diagnose") return diagnostics_report(self_citation_diagnostics(m));
  if (name == "sensitivity") {
    const Indicator indicator = make_indicator(config);
    Report report = sensitivity_report(self_citation_sensitivity(m, indicator));
    if (config.indicator == "iw") report.meta["mode"] = describe(config.mode);
    return report;
  }
  if (name == "fit") return run_fit(m, config);
  if (name == "convergence") {
    Report report =
        convergence_report(convergence_profile(influence_trace(m, config.self_citations, config.mode)));
    report.meta["indicator"] = "iw_convergence";
    describe_run(report, config);
    return report;
  }
  throw UsageError("unknown subcommand '" + name + "'");
}

std::string one_line(std::string text) {
  for (char& c : text) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage:
      return kUsageError;
    case ErrorKind::data:
      return kDataError;
    case ErrorKind::numerical:
      return kNumericalError;
  }
  return kDataError;
}

void report_error(std::ostream& err, const char* kind, const std::string& subject,
                  const std::string& message) {
  err << "error\t" << kind << '\t' << (subject.empty() ? "-" : one_line(subject)) << '\t'
      << one_line(message) << '\n';
}

struct ParsedOptions {
  RunConfig config;
  std::optional<int> iterations;
  double tolerance = kDefaultTolerance;
  int max_iterations = kDefaultMaxIterations;
  std::string format = "table";
  std::string labels = "headerless";
};

void add_input_options(CLI::App* sub, ParsedOptions& parsed) {
  RunConfig& config = parsed.config;
  sub->add_option("input", config.input_path, "Matrix CSV file (rows cited, columns citing); - for stdin");
  sub->add_option("--fixture", config.fixture, "Use an embedded dataset instead of a file")
      ->check(CLI::IsMember(fixtures::names()));
  sub->add_option("--labels", parsed.labels, "Input CSV layout")
      ->check(CLI::IsMember({"headerless", "labeled"}));
  sub->add_flag_callback(
      "--labeled", [&parsed] { parsed.labels = "labeled"; }, "Same as --labels labeled");
  sub->add_option("--max-journals", config.max_journals, "Largest accepted matrix size")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--transpose", config.transpose, "Analyse the citing side (transpose the matrix)");
}

void add_output_options(CLI::App* sub, ParsedOptions& parsed) {
  sub->add_option("--format", parsed.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  sub->add_option("-o,--output", parsed.config.output_path, "Write the report to this file");
  sub->add_option("--digits", parsed.config.digits, "Significant digits in numeric output")
      ->check(CLI::Range(1, 17));
}

void add_iteration_options(CLI::App* sub, ParsedOptions& parsed, bool self_citation_flag) {
  auto* iterations = sub->add_option("--iterations", parsed.iterations,
                                     "Run exactly this many cycles")
                         ->check(CLI::PositiveNumber);
  auto* tolerance = sub->add_option("--tolerance", parsed.tolerance,
                                    "Stop when the L1 change falls to this value")
                        ->check(CLI::PositiveNumber);
  sub->add_option("--max-iter", parsed.max_iterations, "Cycle limit in tolerance mode")
      ->check(CLI::PositiveNumber);
  iterations->excludes(tolerance);
  if (self_citation_flag) {
    sub->add_flag("--self-citations,!--no-self-citations", parsed.config.self_citations,
                  "Keep or remove within-journal citations (default: keep)");
  }
}

}  // namespace

std::string execute(const RunConfig& config) {
  if (config.subcommand == "reproduce-paper") return reproduce_paper(config.format, config.digits);
  return render_report(run_subcommand(config), config.format, config.digits);
}

std::string reproduce_paper(Format format, int digits) {
  const CitationMatrix price = fixtures::price_biochemistry();
  const FixedCycles seven{7};

  const NormalizedMatrix normalized = pinski_narin_normalize(price);
  Report table3 = matrix_report(normalized.journals(), normalized.values(),
                                "Normalized citation matrix (rows cited, columns citing)", true);
  table3.table_decimals.assign(table3.columns.size(), 3);

  Report table4 = sensitivity_report(
      self_citation_sensitivity(price, InfluenceWeightIndicator{seven}));
  table4.title = "Influence weights after 7 cycles, with and without self-citations";
  table4.table_decimals = {4, 4, 2};
  table4.meta["iterations"] = 7;

  Report raw = sensitivity_report(self_citation_sensitivity(price, RawCitedIndicator{}));
  raw.title = "Citations received, with and without self-citations";
  raw.table_decimals = {0, 0, 2};

  const WeightVector with = influence_weights(price, true, seven);
  const WeightVector without = influence_weights(price, false, seven);
  Report fit = fit_report(with, without, linear_fit(with, without));
  fit.title = "Trendline of influence weights without self-citations (y) against with (x)";
  fit.table_decimals = {4, 4};
  fit.meta["indicator"] = "iw";
  fit.meta["iterations"] = 7;

  const std::vector<std::pair<std::string, const Report*>> sections = {
      {"normalized_matrix", &table3},
      {"influence_weights", &table4},
      {"raw_citations", &raw},
      {"trendline", &fit},
  };

  if (format == Format::json) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    out["meta"] = {{"fixture", "price"}, {"version", CITENET_VERSION}};
    for (const auto& [key, report] : sections) out[key] = report_to_json(*report, digits);
    return out.dump(2) + '\n';
  }
  std::string text;
  for (std::size_t i = 0; i < sections.size(); ++i) {
    const Report& report = *sections[i].second;
    if (i > 0) text += '\n';
    if (format == Format::csv) text += "# " + report.title + '\n';
    text += render_report(report, format, digits);
  }
  return text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Journal citation indicators: influence weights, power-weakness ratios and "
               "self-citation sensitivity",
               "citenet"};
  app.set_version_flag("--version", CITENET_VERSION);
  app.require_subcommand(1);

  ParsedOptions parsed;
  struct Spec {
    const char* name;
    const char* help;
    bool input;
    bool iteration;
    bool self_flag;
    bool power;
    bool indicator;
  };
  const Spec specs[] = {
      {"iw", "Influence weights by power iteration", true, true, true, false, false},
      {"pwr", "Power-weakness ratios after k cycles", true, false, false, true, false},
      {"normalize", "Pinski-Narin normalized matrix", true, false, false, false, false},
      {"power", "Matrix power Z^k", true, false, false, true, false},
      {"diagnose", "Self-citation diagnostics per journal", true, false, false, false, false},
      {"sensitivity", "Indicator change when self-citations are removed", true, true, false,
       false, true},
      {"fit", "Trendline of an indicator without against with self-citations", true, true,
       false, false, true},
      {"convergence", "Per-cycle deltas and decay ratios of the influence-weight iteration",
       true, true, true, false, false},
      {"reproduce-paper", "Tables and trendline for the embedded biochemistry example", false,
       false, false, false, false},
  };
  for (const Spec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    if (spec.input) add_input_options(sub, parsed);
    add_output_options(sub, parsed);
    if (spec.iteration) add_iteration_options(sub, parsed, spec.self_flag);
    if (spec.power) {
      sub->add_option("-k,--iterations", parsed.config.power, "Power / cycle count")
          ->required()
          ->check(CLI::PositiveNumber);
    }
    if (spec.indicator) {
      sub->add_option("--indicator", parsed.config.indicator, "Indicator to compare")
          ->check(CLI::IsMember({"iw", "raw-cited", "ratio"}));
    }
    sub->callback([&parsed, sub] { parsed.config.subcommand = sub->get_name(); });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    // --help and --version
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", {}, e.what());
    return kUsageError;
  }

  RunConfig& config = parsed.config;
  config.format = *parse_format(parsed.format);
  config.labels_mode = parsed.labels == "labeled" ? LabelsMode::labeled : LabelsMode::headerless;
  if (parsed.iterations) {
    config.mode = FixedCycles{*parsed.iterations};
  } else {
    config.mode = Tolerance{parsed.tolerance, parsed.max_iterations};
  }

  try {
    const std::string text = execute(config);
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file) throw DataError("cannot open output file", *config.output_path);
      file << text;
    } else {
      out << text;
    }
  } catch (const Error& e) {
    report_error(err, to_string(e.kind()), e.subject(), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    report_error(err, "data", {}, e.what());
    return kDataError;
  }
  return kSuccess;
}

}  // namespace citenet::cli
