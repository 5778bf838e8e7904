#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "citenet/citation_matrix.hpp"
#include "citenet/influence.hpp"

namespace citenet {

struct InfluenceWeightIndicator {
  IterationMode mode = Tolerance{};
};
struct RawCitedIndicator {};
/// C_i / R_i per journal.
struct CitedCitingRatioIndicator {};

using Indicator = std::variant<InfluenceWeightIndicator, RawCitedIndicator, CitedCitingRatioIndicator>;

/// Short machine name: "iw", "raw_cited" or "cited_citing_ratio".
std::string indicator_name(const Indicator& indicator);

WeightVector evaluate_indicator(const CitationMatrix& m, const Indicator& indicator);

struct SensitivityRow {
  double with = 0;
  double without = 0;
  /// 100 * (without - with) / with; empty when `with` is not positive.
  std::optional<double> pct_change;
};

struct SensitivityReport {
  std::string indicator;
  JournalSet journals;
  std::vector<SensitivityRow> rows;
  double max_abs_pct_change = 0;
  double mean_abs_pct_change = 0;
};

/// Evaluates `indicator` on `m` and on `m` with its diagonal removed. Errors
/// from either branch are rethrown with the branch named in the message.
SensitivityReport self_citation_sensitivity(const CitationMatrix& m, const Indicator& indicator);

struct DecayRatio {
  int cycle = 0;  // ratio is delta(cycle) / delta(cycle - 1)
  double ratio = 0;
};

struct ConvergenceProfile {
  std::vector<double> deltas;  // deltas[k - 1] belongs to cycle k
  std::vector<DecayRatio> decay_ratios;
  /// Every decay ratio from cycle 3 on is below one.
  bool geometric = false;

  /// Last decay ratio, if any.
  std::optional<double> asymptotic_ratio() const;
};

/// Throws UsageError for traces shorter than three cycles.
ConvergenceProfile convergence_profile(const IterationTrace& trace);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  /// Empty when y is constant.
  std::optional<double> pearson_r;
  std::size_t n_points = 0;
};

/// Unweighted least-squares line y = slope * x + intercept.
template <typename DerivedX, typename DerivedY>
LinearFit linear_fit(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
  if (x.size() != y.size()) throw UsageError("x and y must have the same length");
  if (x.size() < 2) throw UsageError("a linear fit needs at least 2 points");
  const double n = static_cast<double>(x.size());
  const double mean_x = x.sum() / n;
  const double mean_y = y.sum() / n;
  double sxx = 0;
  double syy = 0;
  double sxy = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double dx = x(i) - mean_x;
    const double dy = y(i) - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (!(sxx > 0)) throw NumericalError("x is constant; slope is undefined");
  LinearFit fit;
  fit.n_points = static_cast<std::size_t>(x.size());
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  if (syy > 0) fit.pearson_r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  return fit;
}

/// Both vectors must share the same journals.
LinearFit linear_fit(const WeightVector& x, const WeightVector& y);

}  // namespace citenet
