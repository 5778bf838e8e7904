// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "citenet/fixtures.hpp"
#include "citenet/influence.hpp"
#include "citenet/sensitivity.hpp"
#include "cli.hpp"
#include "oracles.hpp"
#include "property_checks.hpp"

using namespace citenet;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

const double kTable3[8][8] = {
    {0.426, 0.280, 0.096, 0.170, 0.028, 0.106, 0.033, 0.114},
    {0.099, 0.309, 0.035, 0.072, 0.015, 0.061, 0.017, 0.046},
    {0.237, 0.187, 0.341, 0.166, 0.126, 0.042, 0.106, 0.114},
    {0.169, 0.171, 0.070, 0.253, 0.020, 0.043, 0.040, 0.059},
    {0.151, 0.184, 0.211, 0.125, 0.444, 0.057, 0.090, 0.094},
    {0.138, 0.211, 0.038, 0.074, 0.023, 0.287, 0.017, 0.062},
    {0.170, 0.175, 0.192, 0.207, 0.077, 0.033, 0.391, 0.056},
    {0.187, 0.198, 0.080, 0.120, 0.030, 0.065, 0.028, 0.151},
};
const double kTable3RowSums[8] = {1.252, 0.654, 1.318, 0.824, 1.357, 0.851, 1.303, 0.859};
const double kIwWith[8] = {0.1363, 0.0592, 0.1739, 0.0870, 0.1942, 0.0809, 0.1770, 0.0914};
const double kIwWithout[8] = {0.1361, 0.0591, 0.1740, 0.0869, 0.1947, 0.0807, 0.1772, 0.0913};
const double kPctChange[8] = {-0.14, -0.17, 0.04, -0.12, 0.21, -0.20, 0.11, -0.12};

Outcome normalized_matrix_table() {
  Outcome o;
  const CitationMatrix price = fixtures::price_biochemistry();
  const auto start = Clock::now();
  const NormalizedMatrix m = pinski_narin_normalize(price);
  const double ms = elapsed_ms(start);
  double worst_cell = 0;
  double worst_sum = 0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) worst_cell = std::max(worst_cell, std::abs(m(i, j) - kTable3[i][j]));
    worst_sum = std::max(worst_sum, std::abs(m.values().row(i).sum() - kTable3RowSums[i]));
  }
  o.require(worst_cell <= 0.0005, "cell error " + std::to_string(worst_cell));
  o.require(worst_sum <= 0.001, "row-sum error " + std::to_string(worst_sum));
  o.require(ms < 10.0, "runtime " + std::to_string(ms) + " ms");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("max cell error ") +
              std::to_string(worst_cell) + ", max row-sum error " + std::to_string(worst_sum);
  return o;
}

Outcome influence_weight_table() {
  Outcome o;
  const CitationMatrix price = fixtures::price_biochemistry();
  const auto start = Clock::now();
  const SensitivityReport report =
      self_citation_sensitivity(price, InfluenceWeightIndicator{FixedCycles{7}});
  const double ms = elapsed_ms(start);
  double worst_value = 0;
  double worst_pct = 0;
  for (int i = 0; i < 8; ++i) {
    worst_value = std::max({worst_value, std::abs(report.rows[i].with - kIwWith[i]),
                            std::abs(report.rows[i].without - kIwWithout[i])});
    worst_pct = std::max(worst_pct, std::abs(*report.rows[i].pct_change - kPctChange[i]));
  }
  o.require(worst_value <= 0.0005, "weight error " + std::to_string(worst_value));
  o.require(worst_pct <= 0.10, "pct_change error " + std::to_string(worst_pct) + " pp");
  o.require(ms < 10.0, "runtime " + std::to_string(ms) + " ms");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("max weight error ") +
              std::to_string(worst_value) + ", max pct error " + std::to_string(worst_pct) + " pp";
  return o;
}

Outcome headline_claims() {
  Outcome o;
  const CitationMatrix price = fixtures::price_biochemistry();
  const double raw = *self_citation_sensitivity(price, RawCitedIndicator{}).rows[0].pct_change;
  const double iw = *self_citation_sensitivity(price, InfluenceWeightIndicator{FixedCycles{7}})
                         .rows[0]
                         .pct_change;
  o.require(std::abs(raw - (-34.0)) <= 0.1, "raw change " + std::to_string(raw));
  o.require(std::abs(iw - (-0.14)) <= 0.03, "iw change " + std::to_string(iw));
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("raw ") + std::to_string(raw) +
              "%, iw " + std::to_string(iw) + "%";
  return o;
}

Outcome trendline() {
  Outcome o;
  const CitationMatrix price = fixtures::price_biochemistry();
  const LinearFit fit = linear_fit(influence_weights(price, true, FixedCycles{7}),
                                   influence_weights(price, false, FixedCycles{7}));
  o.require(fit.n_points == 8, "point count");
  o.require(std::abs(fit.slope - 1.0) <= 0.01, "slope");
  o.require(std::abs(fit.intercept) <= 0.005, "intercept");
  o.require(fit.pearson_r && *fit.pearson_r >= 0.999, "correlation");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("slope ") + std::to_string(fit.slope) +
              ", intercept " + std::to_string(fit.intercept) + ", r " +
              std::to_string(fit.pearson_r.value_or(0.0));
  return o;
}

Outcome first_cycle_identity() {
  Outcome o;
  const CitationMatrix price = fixtures::price_biochemistry();
  const IterationTrace iw = influence_trace(price, true, FixedCycles{1});
  const PowerWeakness pwr = power_weakness_ratio(price, 1);
  double worst = 0;
  for (Eigen::Index i = 0; i < 8; ++i) {
    worst = std::max(worst, std::abs(iw.steps[0].raw(i) - pwr.ratio[i]) / pwr.ratio[i]);
  }
  o.require(worst <= 1e-12, "relative error " + std::to_string(worst));
  std::ostringstream detail;
  detail << "max relative error " << worst;
  o.detail += (o.detail.empty() ? "" : "; ") + detail.str();
  return o;
}

Outcome eigenvector_oracle() {
  Outcome o;
  std::mt19937_64 rng(1976);
  double worst = 0;
  for (int t = 0; t < 50; ++t) {
    const Eigen::Index n = 3 + t % 3;
    const CitationMatrix m(JournalSet::generated(static_cast<std::size_t>(n)),
                           oracle::random_counts(rng, n, 1, 100));
    const WeightVector iw = influence_weights(m, true, Tolerance{});
    const Eigen::VectorXd expected = oracle::dominant_eigenvector(pinski_narin_normalize(m).values());
    worst = std::max(worst, (iw.values() - expected).lpNorm<Eigen::Infinity>());
  }
  o.require(worst <= 1e-8, "L-infinity error above 1e-8");
  std::ostringstream detail;
  detail << "50 matrices, max L-infinity error " << worst;
  o.detail += (o.detail.empty() ? "" : "; ") + detail.str();
  return o;
}

Outcome exponential_decay() {
  Outcome o;
  const CitationMatrix price = fixtures::price_biochemistry();
  const ConvergenceProfile profile = convergence_profile(influence_trace(price, true, FixedCycles{10}));
  for (std::size_t k = 3; k < 10; ++k) {
    // deltas[k] belongs to cycle k + 1.
    o.require(profile.deltas[k] < profile.deltas[k - 1],
              "delta did not decrease at cycle " + std::to_string(k + 1));
  }
  const double expected = oracle::subdominant_ratio(pinski_narin_normalize(price).values());
  const double observed = profile.asymptotic_ratio().value_or(0.0);
  o.require(std::abs(observed - expected) <= 0.05 * expected, "decay ratio off");
  std::ostringstream detail;
  detail << "decay ratio " << observed << " vs |l2/l1| " << expected;
  o.detail += (o.detail.empty() ? "" : "; ") + detail.str();
  return o;
}

Outcome property_suites() {
  Outcome o;
  constexpr int kInstances = 120;
  std::mt19937_64 rng(2019);
  const std::pair<const char*, std::function<int(std::mt19937_64&, int)>> suites[] = {
      {"scale invariance", properties::scale_invariance},
      {"stochasticity", properties::stochasticity},
      {"strip idempotence", properties::strip_idempotence},
      {"transpose involution", properties::transpose_involution},
      {"permutation equivariance", properties::permutation_equivariance},
      {"csv round trip", properties::csv_round_trip},
  };
  for (const auto& [name, suite] : suites) {
    const int failures = suite(rng, kInstances);
    o.require(failures == 0, std::string(name) + ": " + std::to_string(failures) + " failures");
  }
  if (o.pass) o.detail = "6 suites x " + std::to_string(kInstances) + " instances";
  return o;
}

Outcome reproduction_command() {
  Outcome o;
  const auto start = Clock::now();
  const std::string first = cli::reproduce_paper(Format::table);
  const std::string second = cli::reproduce_paper(Format::table);
  const double ms = elapsed_ms(start);
  o.require(first == second, "output differs between runs");
  o.require(first.find("Normalized citation matrix") != std::string::npos, "normalized table missing");
  o.require(first.find("Influence weights after 7 cycles") != std::string::npos, "weights table missing");
  o.require(first.find("slope") != std::string::npos && first.find("pearson_r") != std::string::npos,
            "fit statistics missing");
  o.require(ms < 1000.0, "runtime " + std::to_string(ms) + " ms");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("two runs in ") + std::to_string(ms) + " ms";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"normalized matrix matches the published table", normalized_matrix_table},
      {"seven-cycle influence weights with and without self-citations", influence_weight_table},
      {"headline sensitivity: raw -34.0%, influence weight -0.14%", headline_claims},
      {"trendline slope 1, intercept 0, correlation >= 0.999", trendline},
      {"first-cycle influence weight equals power-weakness ratio", first_cycle_identity},
      {"influence weights match a dense eigensolver", eigenvector_oracle},
      {"deltas decay geometrically at the subdominant eigenvalue ratio", exponential_decay},
      {"randomized property suites", property_suites},
      {"reproduce-paper is deterministic and fast", reproduction_command},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, criterion] : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = criterion();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.pass) ++failed;
    std::printf("%s [%d] %s (%s)\n", outcome.pass ? "PASS" : "FAIL", index, name,
                outcome.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
