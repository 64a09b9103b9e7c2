#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace argrev {

// The seven clause-level argument component types. The enumerator order is
// canonical: subset masks, majority-vote tie-breaking and every report row
// follow it.
enum class ComponentType : std::uint8_t {
  MajorClaim = 0,
  Claim = 1,
  Premise = 2,
  Psic = 3,
  Background = 4,
  Recommendation = 5,
  NonArgumentative = 6,
};

inline constexpr std::size_t kComponentTypeCount = 7;

constexpr std::array<ComponentType, kComponentTypeCount> all_component_types() {
  return {ComponentType::MajorClaim,     ComponentType::Claim,
          ComponentType::Premise,        ComponentType::Psic,
          ComponentType::Background,     ComponentType::Recommendation,
          ComponentType::NonArgumentative};
}

// Names used in corpus files and reports.
std::string_view to_string(ComponentType type);
std::optional<ComponentType> component_type_from_string(std::string_view name);

}  // namespace argrev
