#include "citenet/journal_set.hpp"

#include <algorithm>
#include <unordered_set>

#include "citenet/error.hpp"

namespace citenet {

JournalSet::JournalSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw DataError("empty journal label at position " + std::to_string(i + 1));
    }
    if (!seen.insert(labels_[i]).second) {
      throw DataError("duplicate journal label", labels_[i]);
    }
  }
}

JournalSet JournalSet::generated(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("J" + std::to_string(i));
  return JournalSet(std::move(labels));
}

std::optional<std::size_t> JournalSet::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

JournalSet JournalSet::permuted(std::span<const std::size_t> order) const {
  std::vector<std::string> labels;
  labels.reserve(order.size());
  for (std::size_t i : order) labels.push_back(labels_.at(i));
  return JournalSet(std::move(labels));
}

}  // namespace citenet
