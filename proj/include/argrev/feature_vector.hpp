#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace argrev {

enum class FeatureFamily : std::uint8_t {
  Str = 0,
  Ugr = 1,
  Galc = 2,
  Inquirer = 3,
  AfComponent = 4,
  AfToken = 5,
  AfLetter = 6,
  AfPosition = 7,
};

inline constexpr std::array<FeatureFamily, 8> kAllFamilies = {
    FeatureFamily::Str,        FeatureFamily::Ugr,
    FeatureFamily::Galc,       FeatureFamily::Inquirer,
    FeatureFamily::AfComponent, FeatureFamily::AfToken,
    FeatureFamily::AfLetter,   FeatureFamily::AfPosition,
};

inline constexpr std::array<FeatureFamily, 4> kArgumentFamilies = {
    FeatureFamily::AfComponent, FeatureFamily::AfToken,
    FeatureFamily::AfLetter, FeatureFamily::AfPosition};

std::string_view family_name(FeatureFamily family);
std::optional<FeatureFamily> family_from_name(std::string_view name);

constexpr bool is_argument_family(FeatureFamily family) {
  return family == FeatureFamily::AfComponent ||
         family == FeatureFamily::AfToken ||
         family == FeatureFamily::AfLetter ||
         family == FeatureFamily::AfPosition;
}

// Sparse real vector with strictly ascending indices and no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::uint32_t, double>;

  SparseVector() = default;

  // Indices must arrive in strictly ascending order; zeros are skipped.
  void push_back(std::uint32_t index, double value);

  double at(std::uint32_t index) const;  // 0 when absent
  std::span<const Entry> entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  double dot(const SparseVector& other) const;
  double squared_norm() const;

  bool operator==(const SparseVector& other) const = default;

 private:
  std::vector<Entry> entries_;
};

struct FeatureVector {
  FeatureFamily family = FeatureFamily::Str;
  std::uint32_t dimension = 0;  // declared dimensionality of the family
  SparseVector values;
};

}  // namespace argrev
