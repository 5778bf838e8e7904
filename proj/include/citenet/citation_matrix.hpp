#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "citenet/error.hpp"
#include "citenet/journal_set.hpp"

namespace citenet {

/// Which axis the rows of a matrix describe. Cell (i, j) of a cited-rows
/// matrix counts citations received by journal i from journal j.
enum class Orientation { cited_rows, citing_rows };

/// Square, non-negative journal-to-journal citation counts.
///
/// Counts are binary64 so the same type can hold raw integer counts and
/// matrices that were normalized elsewhere and fed back in. Instances are
/// immutable; every transformation returns a new matrix.
class CitationMatrix {
 public:
  CitationMatrix(JournalSet journals, Eigen::MatrixXd counts,
                 Orientation orientation = Orientation::cited_rows);

  const JournalSet& journals() const noexcept { return journals_; }
  const Eigen::MatrixXd& counts() const noexcept { return counts_; }
  Orientation orientation() const noexcept { return orientation_; }
  Eigen::Index size() const noexcept { return counts_.rows(); }

  double operator()(Eigen::Index row, Eigen::Index col) const { return counts_(row, col); }

  friend bool operator==(const CitationMatrix& a, const CitationMatrix& b) {
    return a.orientation_ == b.orientation_ && a.journals_ == b.journals_ &&
           a.counts_ == b.counts_;
  }

 private:
  JournalSet journals_;
  Eigen::MatrixXd counts_;
  Orientation orientation_;
};

struct MarginTotals {
  Eigen::VectorXd cited;   // row sums C_i
  Eigen::VectorXd citing;  // column sums R_j
  double grand_total = 0.0;
};

MarginTotals margins(const CitationMatrix& m);

/// Rows become columns; the orientation tag flips and labels are kept.
CitationMatrix transpose(const CitationMatrix& m);

/// Copy of `m` with every diagonal (within-journal) count set to zero.
CitationMatrix strip_self_citations(const CitationMatrix& m);

// ---------------------------------------------------------------------------
// Matrix powers

namespace detail {
inline std::string cell_name(Eigen::Index row, Eigen::Index col) {
  return "(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}
}  // namespace detail

/// Z^k by k-1 successive left multiplications in the scalar type of `z`.
/// Throws UsageError for k < 1 and NumericalError naming the first cell that
/// stops being finite; `name_cell(row, col)` produces that name.
template <typename Derived, typename CellNamer = decltype(&detail::cell_name)>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> matrix_power(
    const Eigen::MatrixBase<Derived>& z, int k, CellNamer name_cell = &detail::cell_name) {
  using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (k < 1) {
    throw UsageError("matrix power requires k >= 1, got " + std::to_string(k));
  }
  Matrix result = z;
  for (int step = 2; step <= k; ++step) {
    Matrix next = z * result;
    for (Eigen::Index j = 0; j < next.cols(); ++j) {
      for (Eigen::Index i = 0; i < next.rows(); ++i) {
        if (!std::isfinite(next(i, j))) {
          throw NumericalError("matrix power overflowed at k=" + std::to_string(step),
                               name_cell(i, j));
        }
      }
    }
    result = std::move(next);
  }
  return result;
}

/// Overflow errors name the cell by journal labels.
Eigen::MatrixXd matrix_power(const CitationMatrix& m, int k);

// ---------------------------------------------------------------------------
// CSV input and output

enum class LabelsMode {
  headerless,  // n lines of n numbers; journals are named J1..Jn
  labeled,     // first row and first column carry journal names
};

inline constexpr std::size_t kDefaultMaxJournals = 1024;

struct ParseOptions {
  LabelsMode labels_mode = LabelsMode::headerless;
  std::size_t max_journals = kDefaultMaxJournals;
};

/// Accepts LF and CRLF line endings and trailing blank lines. Labeled input
/// may quote fields with double quotes; the corner cell is ignored.
CitationMatrix parse_matrix_csv(std::string_view text, const ParseOptions& options = {});

/// Always emits LF line endings. Numbers use the shortest representation that
/// parses back to the same double.
std::string serialize_matrix_csv(const CitationMatrix& m,
                                 LabelsMode labels_mode = LabelsMode::headerless);

}  // namespace citenet
