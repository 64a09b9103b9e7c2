#include "argrev/feature_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace argrev {

namespace {
constexpr std::array<std::string_view, 8> kFamilyNames = {
    "STR", "UGR", "GALC", "INQUIRER", "AF-component", "AF-token", "AF-letter",
    "AF-position"};
}

std::string_view family_name(FeatureFamily family) {
  return kFamilyNames[static_cast<std::size_t>(family)];
}

std::optional<FeatureFamily> family_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i)
    if (kFamilyNames[i] == name) return static_cast<FeatureFamily>(i);
  return std::nullopt;
}

void SparseVector::push_back(std::uint32_t index, double value) {
  if (!entries_.empty() && index <= entries_.back().first)
    throw std::invalid_argument("SparseVector: indices must strictly ascend");
  if (value != 0.0) entries_.emplace_back(index, value);
}

double SparseVector::at(std::uint32_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& entry, std::uint32_t key) { return entry.first < key; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0.0;
}

double SparseVector::dot(const SparseVector& other) const {
  double sum = 0.0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else {
      sum += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return sum;
}

double SparseVector::squared_norm() const {
  double sum = 0.0;
  for (const auto& [index, value] : entries_) sum += value * value;
  return sum;
}

}  // namespace argrev
