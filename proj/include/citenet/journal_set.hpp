#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace citenet {

/// Ordered, unique journal names shared by the rows and columns of a matrix.
class JournalSet {
 public:
  JournalSet() = default;
  /// Throws DataError on an empty or duplicate label.
  explicit JournalSet(std::vector<std::string> labels);

  /// Synthetic labels J1..Jn.
  static JournalSet generated(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Labels reordered so that entry i of the result is entry order[i] of this set.
  JournalSet permuted(std::span<const std::size_t> order) const;

  friend bool operator==(const JournalSet&, const JournalSet&) = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace citenet
