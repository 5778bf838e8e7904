#include "citenet/sensitivity.hpp"

#include <cmath>

namespace citenet {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

WeightVector evaluate_branch(const CitationMatrix& m, const Indicator& indicator,
                             const char* branch) {
  try {
    return evaluate_indicator(m, indicator);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(branch) + ": " + e.what(), e.subject());
  }
}

}  // namespace

std::string indicator_name(const Indicator& indicator) {
  return std::visit(overloaded{
                        [](const InfluenceWeightIndicator&) { return std::string("iw"); },
                        [](const RawCitedIndicator&) { return std::string("raw_cited"); },
                        [](const CitedCitingRatioIndicator&) {
                          return std::string("cited_citing_ratio");
                        },
                    },
                    indicator);
}

WeightVector evaluate_indicator(const CitationMatrix& m, const Indicator& indicator) {
  return std::visit(
      overloaded{
          [&m](const InfluenceWeightIndicator& iw) {
            return influence_weights(m, /*self_citations=*/true, iw.mode);
          },
          [&m](const RawCitedIndicator&) { return raw_citation_counts(m).cited; },
          [&m](const CitedCitingRatioIndicator&) {
            const MarginTotals totals = margins(m);
            Eigen::VectorXd ratio(m.size());
            for (Eigen::Index i = 0; i < m.size(); ++i) {
              if (!(totals.citing(i) > 0.0)) {
                throw NumericalError("journal has no references; cited-citing ratio undefined",
                                     m.journals()[i]);
              }
              ratio(i) = totals.cited(i) / totals.citing(i);
            }
            return WeightVector(m.journals(), std::move(ratio), Normalization::raw);
          },
      },
      indicator);
}

SensitivityReport self_citation_sensitivity(const CitationMatrix& m, const Indicator& indicator) {
  const WeightVector with = evaluate_branch(m, indicator, "with self-citations");
  const WeightVector without =
      evaluate_branch(strip_self_citations(m), indicator, "without self-citations");

  SensitivityReport report;
  report.indicator = indicator_name(indicator);
  report.journals = m.journals();
  report.rows.reserve(static_cast<std::size_t>(m.size()));
  double abs_sum = 0;
  std::size_t defined = 0;
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    SensitivityRow row{with[i], without[i], std::nullopt};
    if (row.with > 0.0) {
      row.pct_change = 100.0 * (row.without - row.with) / row.with;
      const double magnitude = std::abs(*row.pct_change);
      report.max_abs_pct_change = std::max(report.max_abs_pct_change, magnitude);
      abs_sum += magnitude;
      ++defined;
    }
    report.rows.push_back(row);
  }
  if (defined > 0) report.mean_abs_pct_change = abs_sum / static_cast<double>(defined);
  return report;
}

std::optional<double> ConvergenceProfile::asymptotic_ratio() const {
  if (decay_ratios.empty()) return std::nullopt;
  return decay_ratios.back().ratio;
}

ConvergenceProfile convergence_profile(const IterationTrace& trace) {
  if (trace.steps.size() < 3) {
    throw UsageError("a convergence profile needs at least 3 cycles, got " +
                     std::to_string(trace.steps.size()));
  }
  ConvergenceProfile profile;
  profile.deltas.reserve(trace.steps.size());
  for (const auto& step : trace.steps) profile.deltas.push_back(step.delta);
  profile.geometric = true;
  for (std::size_t k = 1; k < profile.deltas.size(); ++k) {
    if (!(profile.deltas[k - 1] > 0.0)) continue;
    const int cycle = static_cast<int>(k) + 1;
    const double ratio = profile.deltas[k] / profile.deltas[k - 1];
    profile.decay_ratios.push_back({cycle, ratio});
    // The first two cycles depend on the arbitrary start vector.
    if (cycle >= 3 && !(ratio < 1.0)) profile.geometric = false;
  }
  return profile;
}

LinearFit linear_fit(const WeightVector& x, const WeightVector& y) {
  if (x.journals() != y.journals()) throw UsageError("x and y must cover the same journals");
  return linear_fit(x.values(), y.values());
}

}  // namespace citenet
