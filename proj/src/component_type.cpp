#include "argrev/component_type.hpp"

namespace argrev {

namespace {
constexpr std::array<std::string_view, kComponentTypeCount> kNames = {
    "MajorClaim",     "Claim",          "Premise",
    "PSIC",           "Background",     "Recommendation",
    "NonArgumentative"};
}

std::string_view to_string(ComponentType type) {
  return kNames[static_cast<std::size_t>(type)];
}

std::optional<ComponentType> component_type_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<ComponentType>(i);
  return std::nullopt;
}

}  // namespace argrev
