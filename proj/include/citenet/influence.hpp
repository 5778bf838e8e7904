#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "citenet/citation_matrix.hpp"
#include "citenet/error.hpp"
#include "citenet/journal_set.hpp"

namespace citenet {

/// Pinski-Narin normalized matrix: cell (i, j) is Z(i, j) divided by the
/// reference (citing) total of journal i. Row i sums to C_i / R_i.
class NormalizedMatrix {
 public:
  NormalizedMatrix(JournalSet journals, Eigen::MatrixXd values);

  const JournalSet& journals() const noexcept { return journals_; }
  const Eigen::MatrixXd& values() const noexcept { return values_; }
  Eigen::Index size() const noexcept { return values_.rows(); }
  double operator()(Eigen::Index row, Eigen::Index col) const { return values_(row, col); }

 private:
  JournalSet journals_;
  Eigen::MatrixXd values_;
};

enum class Normalization { raw, stochastic };

inline constexpr double kStochasticSumTolerance = 1e-12;

/// Per-journal indicator values. Stochastic vectors sum to one.
class WeightVector {
 public:
  WeightVector(JournalSet journals, Eigen::VectorXd values, Normalization normalization);

  const JournalSet& journals() const noexcept { return journals_; }
  const Eigen::VectorXd& values() const noexcept { return values_; }
  Normalization normalization() const noexcept { return normalization_; }
  Eigen::Index size() const noexcept { return values_.size(); }
  double operator[](Eigen::Index i) const { return values_(i); }
  /// Throws UsageError for an unknown journal.
  double at(const std::string& journal) const;

 private:
  JournalSet journals_;
  Eigen::VectorXd values_;
  Normalization normalization_;
};

// ---------------------------------------------------------------------------
// Power iteration

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr int kDefaultMaxIterations = 100;

/// Run exactly `cycles` matrix-vector products.
struct FixedCycles {
  int cycles = 7;
};

/// Iterate until the L1 change between successive stochastic vectors is at
/// most `epsilon`, giving up after `max_iterations` cycles.
struct Tolerance {
  double epsilon = kDefaultTolerance;
  int max_iterations = kDefaultMaxIterations;
};

using IterationMode = std::variant<FixedCycles, Tolerance>;

std::string describe(const IterationMode& mode);

enum class StopReason {
  fixed_cycles,      // ran the requested number of cycles
  converged,         // delta fell to the tolerance
  max_iterations,    // tolerance not reached
  isolated_journal,  // a journal neither cites nor is cited; nothing was run
};

const char* to_string(StopReason reason) noexcept;

template <typename Scalar>
struct BasicIterationStep {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  int cycle = 0;
  Vector raw;         // matrix times the previous vector, before rescaling
  Vector stochastic;  // raw / raw.sum()
  Scalar delta = 0;   // L1 distance to the previous stochastic vector
};

template <typename Scalar>
struct BasicIterationTrace {
  using Step = BasicIterationStep<Scalar>;

  std::vector<Step> steps;
  bool converged = false;
  StopReason stop_reason = StopReason::fixed_cycles;
  /// Threshold the `converged` flag was judged against.
  Scalar tolerance = Scalar(kDefaultTolerance);
  std::optional<Eigen::Index> isolated_journal;

  int iterations_used() const noexcept { return static_cast<int>(steps.size()); }
  /// Throws NumericalError when no cycle was run.
  const typename Step::Vector& result() const {
    if (steps.empty()) throw NumericalError("power iteration produced no cycles");
    return steps.back().stochastic;
  }
};

using IterationStep = BasicIterationStep<double>;
using IterationTrace = BasicIterationTrace<double>;

/// Power iteration from the all-ones start vector.
///
/// Cycle 1 multiplies the matrix by the all-ones vector, so its raw vector is
/// the row sums. Every cycle rescales the product to sum to one. The delta of
/// cycle 1 is measured against the start vector rescaled the same way. In
/// fixed mode `converged` reports whether the last delta is within
/// kDefaultTolerance.
template <typename Derived>
BasicIterationTrace<typename Derived::Scalar> power_iterate(const Eigen::MatrixBase<Derived>& matrix,
                                                            const IterationMode& mode) {
  using Scalar = typename Derived::Scalar;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Eigen::Index n = matrix.rows();
  if (n != matrix.cols() || n < 1) throw UsageError("power iteration needs a square matrix");
  if (!matrix.allFinite() || (matrix.array() < Scalar(0)).any()) {
    throw DataError("power iteration needs finite non-negative entries");
  }

  const auto* fixed = std::get_if<FixedCycles>(&mode);
  const auto* tolerance = std::get_if<Tolerance>(&mode);
  BasicIterationTrace<Scalar> trace;
  int max_cycles = 0;
  if (fixed != nullptr) {
    if (fixed->cycles < 1) throw UsageError("cycle count must be >= 1");
    max_cycles = fixed->cycles;
    trace.stop_reason = StopReason::fixed_cycles;
  } else {
    if (!(tolerance->epsilon > 0)) throw UsageError("tolerance must be > 0");
    if (tolerance->max_iterations < 1) throw UsageError("max iterations must be >= 1");
    max_cycles = tolerance->max_iterations;
    trace.tolerance = Scalar(tolerance->epsilon);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (matrix.row(i).isZero(0) && matrix.col(i).isZero(0)) {
        trace.stop_reason = StopReason::isolated_journal;
        trace.isolated_journal = i;
        return trace;
      }
    }
    trace.stop_reason = StopReason::max_iterations;
  }

  Vector current = Vector::Ones(n);
  Vector previous = current / Scalar(n);
  for (int cycle = 1; cycle <= max_cycles; ++cycle) {
    BasicIterationStep<Scalar> step;
    step.cycle = cycle;
    step.raw.noalias() = matrix * current;
    if (!step.raw.allFinite()) {
      throw NumericalError("power iteration overflowed at cycle " + std::to_string(cycle));
    }
    const Scalar total = step.raw.sum();
    if (!(total > Scalar(0))) {
      throw NumericalError("power iteration vanished at cycle " + std::to_string(cycle));
    }
    step.stochastic = step.raw / total;
    step.delta = (step.stochastic - previous).template lpNorm<1>();
    previous = step.stochastic;
    current = step.stochastic;
    const Scalar delta = step.delta;
    trace.steps.push_back(std::move(step));
    if (tolerance != nullptr && delta <= trace.tolerance) {
      trace.stop_reason = StopReason::converged;
      break;
    }
  }
  trace.converged = trace.steps.back().delta <= trace.tolerance;
  return trace;
}

IterationTrace power_iterate(const NormalizedMatrix& m, const IterationMode& mode);
IterationTrace power_iterate(const CitationMatrix& m, const IterationMode& mode);

// ---------------------------------------------------------------------------
// Indicators

/// Throws NumericalError naming any journal whose reference total is zero.
NormalizedMatrix pinski_narin_normalize(const CitationMatrix& m);

/// Full power-iteration trace behind `influence_weights`.
IterationTrace influence_trace(const CitationMatrix& m, bool self_citations,
                               const IterationMode& mode);

/// Pinski-Narin Influence Weights: the final stochastic vector of power
/// iteration on the normalized matrix. Without self-citations the diagonal is
/// removed before normalizing. In tolerance mode a run that does not converge
/// raises NumericalError.
WeightVector influence_weights(const CitationMatrix& m, bool self_citations,
                               const IterationMode& mode);

struct PowerWeakness {
  WeightVector power;     // p(k): stochastic iterate of Z
  WeightVector weakness;  // q(k): stochastic iterate of Z transposed
  WeightVector ratio;     // p(k) / q(k), raw
};

/// Ramanujacharyulu's Power-Weakness Ratio after `cycles` cycles on the raw
/// matrix. Throws NumericalError naming a journal whose weakness is zero.
PowerWeakness power_weakness_ratio(const CitationMatrix& m, int cycles);

struct RawCounts {
  WeightVector cited;   // citations received
  WeightVector citing;  // references given
};

RawCounts raw_citation_counts(const CitationMatrix& m);

/// Impact i = C / P per journal. Throws DataError when a publication count is
/// not positive and UsageError on a length mismatch.
template <typename DerivedC, typename DerivedP>
Eigen::Matrix<typename DerivedC::Scalar, Eigen::Dynamic, 1> impact_ratio(
    const Eigen::MatrixBase<DerivedC>& citations, const Eigen::MatrixBase<DerivedP>& publications) {
  if (citations.size() != publications.size()) {
    throw UsageError("citations and publications must have the same length");
  }
  for (Eigen::Index i = 0; i < publications.size(); ++i) {
    if (!(publications(i) > 0)) {
      throw DataError("publication count must be positive", "journal " + std::to_string(i + 1));
    }
  }
  return citations.cwiseQuotient(publications);
}

/// Labelled variant; both vectors must share the same journals.
WeightVector impact_ratio(const WeightVector& citations, const WeightVector& publications);

/// Within-journal self-citation quantities for one journal. Ratios whose
/// denominator is zero are left empty.
struct JournalSelfCitations {
  double self = 0;             // S, the diagonal count
  double cited_by_others = 0;  // d
  double citing_others = 0;    // g
  std::optional<double> self_cited_rate;   // S / (S + d)
  std::optional<double> self_citing_rate;  // S / (S + g)
  std::optional<double> cited_citing_ratio_with;     // (S + d) / (S + g)
  std::optional<double> cited_citing_ratio_without;  // d / g
};

struct SelfCitationDiagnostics {
  JournalSet journals;
  std::vector<JournalSelfCitations> rows;
  double grand_total = 0;
  double self_total = 0;  // trace of Z
};

SelfCitationDiagnostics self_citation_diagnostics(const CitationMatrix& m);

}  // namespace citenet
