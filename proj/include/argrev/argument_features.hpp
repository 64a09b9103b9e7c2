#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "argrev/corpus.hpp"
#include "argrev/feature_vector.hpp"

namespace argrev::af {

// Nonempty subset of the seven component types, encoded as a 7-bit mask in
// canonical type order (bit b set <=> type b in the subset). The subset index
// equals the mask value, so the canonical enumeration is mask 1..127.
struct ComponentSubset {
  std::uint8_t mask = 0;
  std::uint32_t index() const { return mask; }
  bool contains(ComponentType type) const {
    return (mask >> static_cast<std::uint8_t>(type)) & 1u;
  }
};

inline constexpr std::uint32_t kSubsetCount = 127;           // 2^7 - 1
inline constexpr std::uint32_t kSubsetPairCount = 16002;     // 127 * 126
inline constexpr std::uint32_t kTypeStatDims = 35;           // 7 * 5
inline constexpr std::uint32_t kComponentDims = kSubsetPairCount;
inline constexpr std::uint32_t kTokenDims = kTypeStatDims + 2 * kSubsetPairCount;
inline constexpr std::uint32_t kLetterDims = kTokenDims;
inline constexpr std::uint32_t kPositionDims = kTokenDims;
inline constexpr std::uint32_t kTotalDims =
    kComponentDims + kTokenDims + kLetterDims + kPositionDims;  // 112119

std::vector<ComponentSubset> enumerate_subsets();

// Ordered distinct subset pairs (A, B), A-major, B ascending with A skipped.
std::uint32_t subset_pair_rank(std::uint8_t a_mask, std::uint8_t b_mask);
std::pair<std::uint8_t, std::uint8_t> subset_pair_from_rank(std::uint32_t rank);

std::string subset_name(std::uint8_t mask);  // e.g. "MajorClaim+Claim"

// numerator / denominator, or 0 when the denominator is 0.
inline double safe_ratio(double numerator, double denominator) {
  return denominator == 0.0 ? 0.0 : numerator / denominator;
}

// Per-component-type statistics over one review's components. All statistics
// are 0 for a type with no components. Variance is population variance,
// computed in two passes over the components in input order.
struct DistributionStats {
  double total = 0.0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double variance = 0.0;
};

struct PositionStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  double sum = 0.0;
};

struct TypeSummary {
  std::uint32_t count = 0;
  DistributionStats tokens;
  DistributionStats letters;
  PositionStats positions;
};

// Additive aggregates per subset. Subset sums fold the per-type sums in
// canonical type order, so every extraction path produces bit-identical
// values.
struct SubsetAggregate {
  double count = 0.0;
  double token_total = 0.0;
  double letter_total = 0.0;
  double position_sum = 0.0;
};

struct ReviewSummary {
  std::array<TypeSummary, kComponentTypeCount> per_type{};
  std::array<SubsetAggregate, kSubsetCount + 1> per_subset{};  // index = mask
};

ReviewSummary summarize(std::span<const ArgumentComponent> components);

// Component level: for every ordered distinct subset pair (A, B), the ratio
// of component counts. 16002 dimensions.
FeatureVector component_level(const ReviewSummary& summary);

// Token level: per type the 5 statistics (total, min, max, mean, variance of
// per-component token counts), then per subset pair the ratio of token
// totals, then per subset pair the ratio of token means. 32039 dimensions.
FeatureVector token_level(const ReviewSummary& summary);

// Same construction over letter counts. 32039 dimensions.
FeatureVector letter_level(const ReviewSummary& summary);

// Position level: per type the 5 statistics (min, max, mean, variance, sum of
// positions), then per subset pair the ratio of position sums, then the ratio
// of position means. 32039 dimensions.
FeatureVector position_level(const ReviewSummary& summary);

struct AllFeatures {
  FeatureVector component;
  FeatureVector token;
  FeatureVector letter;
  FeatureVector position;
};

// All four granularities; the concatenation order is component | token |
// letter | position.
AllFeatures extract_all(const ReviewSummary& summary);
AllFeatures extract_all(const AnnotatedReview& review, bool merge_adjacent = true);
SparseVector concatenate(const AllFeatures& features);  // kTotalDims space

// Random access to a single dimension; agrees with the extractors above.
double feature_value(const ReviewSummary& summary, FeatureFamily family,
                     std::uint32_t dim);

std::uint32_t family_dimension(FeatureFamily family);

// What a dimension measures, for selection analysis.
enum class DimKind : std::uint8_t {
  TypeStat = 0,    // one of the per-type 5-statistic block
  RatioOfSums= 1,  // ratio of totals (positions: ratio of sums)
  RatioOfMeans = 2,
};
DimKind dimension_kind(FeatureFamily family, std::uint32_t dim);

std::string dimension_name(FeatureFamily family, std::uint32_t dim);

}  // namespace argrev::af
