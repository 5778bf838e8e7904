#include "citenet/influence.hpp"

#include <cmath>
#include <sstream>

namespace citenet {

NormalizedMatrix::NormalizedMatrix(JournalSet journals, Eigen::MatrixXd values)
    : journals_(std::move(journals)), values_(std::move(values)) {
  if (values_.rows() != values_.cols() ||
      static_cast<std::size_t>(values_.rows()) != journals_.size()) {
    throw DataError("normalized matrix must be square and match its journals");
  }
  if (!values_.allFinite() || (values_.array() < 0.0).any()) {
    throw DataError("normalized matrix entries must be finite and non-negative");
  }
}

WeightVector::WeightVector(JournalSet journals, Eigen::VectorXd values,
                           Normalization normalization)
    : journals_(std::move(journals)), values_(std::move(values)), normalization_(normalization) {
  if (static_cast<std::size_t>(values_.size()) != journals_.size()) {
    throw DataError("weight vector length does not match its journals");
  }
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_(i)) || values_(i) < 0.0) {
      throw NumericalError("weights must be finite and non-negative", journals_[i]);
    }
  }
  if (normalization_ == Normalization::stochastic &&
      std::abs(values_.sum() - 1.0) > kStochasticSumTolerance) {
    throw NumericalError("stochastic weights must sum to 1");
  }
}

double WeightVector::at(const std::string& journal) const {
  const auto index = journals_.index_of(journal);
  if (!index) throw UsageError("unknown journal", journal);
  return values_(static_cast<Eigen::Index>(*index));
}

std::string describe(const IterationMode& mode) {
  std::ostringstream out;
  if (const auto* fixed = std::get_if<FixedCycles>(&mode)) {
    out << "fixed " << fixed->cycles << " cycles";
  } else {
    const auto& tolerance = std::get<Tolerance>(mode);
    out << "tolerance " << tolerance.epsilon << " (max " << tolerance.max_iterations << ")";
  }
  return out.str();
}

const char* to_string(StopReason reason) noexcept {
  switch (reason) {
    case StopReason::fixed_cycles:
      return "fixed_cycles";
    case StopReason::converged:
      return "converged";
    case StopReason::max_iterations:
      return "max_iterations";
    case StopReason::isolated_journal:
      return "isolated_journal";
  }
  return "unknown";
}

IterationTrace power_iterate(const NormalizedMatrix& m, const IterationMode& mode) {
  return power_iterate(m.values(), mode);
}

IterationTrace power_iterate(const CitationMatrix& m, const IterationMode& mode) {
  return power_iterate(m.counts(), mode);
}

NormalizedMatrix pinski_narin_normalize(const CitationMatrix& m) {
  const Eigen::VectorXd references = margins(m).citing;
  Eigen::MatrixXd values(m.size(), m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (!(references(i) > 0.0)) {
      throw NumericalError("journal has no references; cannot normalize its citations",
                           m.journals()[i]);
    }
    values.row(i) = m.counts().row(i) / references(i);
  }
  return NormalizedMatrix(m.journals(), std::move(values));
}

IterationTrace influence_trace(const CitationMatrix& m, bool self_citations,
                               const IterationMode& mode) {
  const NormalizedMatrix normalized =
      pinski_narin_normalize(self_citations ? m : strip_self_citations(m));
  return power_iterate(normalized, mode);
}

WeightVector influence_weights(const CitationMatrix& m, bool self_citations,
                               const IterationMode& mode) {
  const IterationTrace trace = influence_trace(m, self_citations, mode);
  if (std::holds_alternative<Tolerance>(mode) && !trace.converged) {
    std::string subject;
    if (trace.isolated_journal) subject = m.journals()[*trace.isolated_journal];
    throw NumericalError("influence weights did not converge (" +
                             std::string(to_string(trace.stop_reason)) + ")",
                         subject);
  }
  return WeightVector(m.journals(), trace.result(), Normalization::stochastic);
}

PowerWeakness power_weakness_ratio(const CitationMatrix& m, int cycles) {
  if (cycles < 1) throw UsageError("cycle count must be >= 1");
  const FixedCycles mode{cycles};
  const IterationTrace power = power_iterate(m.counts(), mode);
  const IterationTrace weakness = power_iterate(Eigen::MatrixXd(m.counts().transpose()), mode);
  const Eigen::VectorXd& p = power.result();
  const Eigen::VectorXd& q = weakness.result();
  Eigen::VectorXd ratio(m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (!(q(i) > 0.0)) {
      throw NumericalError("weakness is zero; power-weakness ratio undefined", m.journals()[i]);
    }
    ratio(i) = p(i) / q(i);
  }
  return PowerWeakness{WeightVector(m.journals(), p, Normalization::stochastic),
                       WeightVector(m.journals(), q, Normalization::stochastic),
                       WeightVector(m.journals(), std::move(ratio), Normalization::raw)};
}

RawCounts raw_citation_counts(const CitationMatrix& m) {
  MarginTotals totals = margins(m);
  return RawCounts{WeightVector(m.journals(), std::move(totals.cited), Normalization::raw),
                   WeightVector(m.journals(), std::move(totals.citing), Normalization::raw)};
}

WeightVector impact_ratio(const WeightVector& citations, const WeightVector& publications) {
  if (citations.journals() != publications.journals()) {
    throw UsageError("citations and publications must cover the same journals");
  }
  for (Eigen::Index i = 0; i < publications.size(); ++i) {
    if (!(publications[i] > 0.0)) {
      throw DataError("publication count must be positive", publications.journals()[i]);
    }
  }
  return WeightVector(citations.journals(), impact_ratio(citations.values(), publications.values()),
                      Normalization::raw);
}

namespace {

std::optional<double> ratio_or_empty(double numerator, double denominator) {
  if (!(denominator > 0.0)) return std::nullopt;
  return numerator / denominator;
}

}  // namespace

SelfCitationDiagnostics self_citation_diagnostics(const CitationMatrix& m) {
  const MarginTotals totals = margins(m);
  SelfCitationDiagnostics result;
  result.journals = m.journals();
  result.grand_total = totals.grand_total;
  result.rows.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    JournalSelfCitations row;
    row.self = m(i, i);
    row.cited_by_others = totals.cited(i) - row.self;
    row.citing_others = totals.citing(i) - row.self;
    const double cited = row.self + row.cited_by_others;
    const double citing = row.self + row.citing_others;
    row.self_cited_rate = ratio_or_empty(row.self, cited);
    row.self_citing_rate = ratio_or_empty(row.self, citing);
    row.cited_citing_ratio_with = ratio_or_empty(cited, citing);
    row.cited_citing_ratio_without = ratio_or_empty(row.cited_by_others, row.citing_others);
    result.self_total += row.self;
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace citenet
