#include "citenet/citation_matrix.hpp"

namespace citenet {

CitationMatrix::CitationMatrix(JournalSet journals, Eigen::MatrixXd counts,
                               Orientation orientation)
    : journals_(std::move(journals)), counts_(std::move(counts)), orientation_(orientation) {
  if (counts_.rows() != counts_.cols()) {
    throw DataError("citation matrix must be square, got " + std::to_string(counts_.rows()) +
                    "x" + std::to_string(counts_.cols()));
  }
  if (counts_.rows() < 2) {
    throw DataError("citation matrix needs at least 2 journals, got " +
                    std::to_string(counts_.rows()));
  }
  if (journals_.size() != static_cast<std::size_t>(counts_.rows())) {
    throw DataError("journal count " + std::to_string(journals_.size()) +
                    " does not match matrix size " + std::to_string(counts_.rows()));
  }
  for (Eigen::Index i = 0; i < counts_.rows(); ++i) {
    for (Eigen::Index j = 0; j < counts_.cols(); ++j) {
      const double v = counts_(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        throw DataError("citation counts must be finite and non-negative, got " +
                            std::to_string(v),
                        journals_[i] + " <- " + journals_[j]);
      }
    }
  }
}

MarginTotals margins(const CitationMatrix& m) {
  const Eigen::Index n = m.size();
  MarginTotals totals{Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n), 0.0};
  // Fixed summation order keeps the totals reproducible.
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      totals.cited(i) += m(i, j);
      totals.citing(j) += m(i, j);
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) totals.grand_total += totals.cited(i);
  return totals;
}

CitationMatrix transpose(const CitationMatrix& m) {
  const Orientation flipped = m.orientation() == Orientation::cited_rows
                                  ? Orientation::citing_rows
                                  : Orientation::cited_rows;
  return CitationMatrix(m.journals(), m.counts().transpose(), flipped);
}

CitationMatrix strip_self_citations(const CitationMatrix& m) {
  Eigen::MatrixXd counts = m.counts();
  counts.diagonal().setZero();
  return CitationMatrix(m.journals(), std::move(counts), m.orientation());
}

Eigen::MatrixXd matrix_power(const CitationMatrix& m, int k) {
  const JournalSet& journals = m.journals();
  return matrix_power(m.counts(), k, [&journals](Eigen::Index i, Eigen::Index j) {
    return detail::cell_name(i, j) + " " + journals[i] + " <- " + journals[j];
  });
}

}  // namespace citenet
