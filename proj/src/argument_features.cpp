#include "argrev/argument_features.hpp"

#include <stdexcept>

namespace argrev::af {

namespace {

DistributionStats distribution(const std::vector<double>& values) {
  DistributionStats stats;
  if (values.empty()) return stats;
  stats.min = values[0];
  stats.max = values[0];
  for (double v : values) {
    if (v < stats.min) stats.min = v;
    if (v > stats.max) stats.max = v;
    stats.total += v;
  }
  stats.mean = stats.total / static_cast<double>(values.size());
  double acc = 0.0;
  for (double v : values) acc += (v - stats.mean) * (v - stats.mean);
  stats.variance = acc / static_cast<double>(values.size());
  return stats;
}

PositionStats position_stats(const std::vector<double>& values) {
  const DistributionStats d = distribution(values);
  return {d.min, d.max, d.mean, d.variance, d.total};
}

double type_stat(const TypeSummary& type, FeatureFamily family, std::uint32_t stat) {
  if (family == FeatureFamily::AfPosition) {
    switch (stat) {
      case 0: return type.positions.min;
      case 1: return type.positions.max;
      case 2: return type.positions.mean;
      case 3: return type.positions.variance;
      default: return type.positions.sum;
    }
  }
  const DistributionStats& d =
      family == FeatureFamily::AfToken ? type.tokens : type.letters;
  switch (stat) {
    case 0: return d.total;
    case 1: return d.min;
    case 2: return d.max;
    case 3: return d.mean;
    default: return d.variance;
  }
}

double subset_total(const SubsetAggregate& subset, FeatureFamily family) {
  switch (family) {
    case FeatureFamily::AfToken: return subset.token_total;
    case FeatureFamily::AfLetter: return subset.letter_total;
    default: return subset.position_sum;
  }
}

constexpr std::string_view kStatNames[2][5] = {
    {"total", "min", "max", "mean", "variance"},  // tokens, letters
    {"min", "max", "mean", "variance", "sum"},    // positions
};

std::string_view series_name(FeatureFamily family) {
  switch (family) {
    case FeatureFamily::AfToken: return "tokens";
    case FeatureFamily::AfLetter: return "letters";
    default: return "position";
  }
}

}  // namespace

std::vector<ComponentSubset> enumerate_subsets() {
  std::vector<ComponentSubset> subsets;
  subsets.reserve(kSubsetCount);
  for (std::uint32_t mask = 1; mask <= kSubsetCount; ++mask)
    subsets.push_back({static_cast<std::uint8_t>(mask)});
  return subsets;
}

std::uint32_t subset_pair_rank(std::uint8_t a_mask, std::uint8_t b_mask) {
  if (a_mask == 0 || b_mask == 0 || a_mask == b_mask)
    throw std::invalid_argument("subset_pair_rank: need two distinct nonempty masks");
  const std::uint32_t a = a_mask, b = b_mask;
  return (a - 1) * (kSubsetCount - 1) + (b < a ? b - 1 : b - 2);
}

std::pair<std::uint8_t, std::uint8_t> subset_pair_from_rank(std::uint32_t rank) {
  if (rank >= kSubsetPairCount)
    throw std::out_of_range("subset_pair_from_rank: rank out of range");
  const std::uint32_t a = rank / (kSubsetCount - 1) + 1;
  const std::uint32_t r = rank % (kSubsetCount - 1);
  const std::uint32_t b = r + 1 < a ? r + 1 : r + 2;
  return {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
}

std::string subset_name(std::uint8_t mask) {
  std::string name;
  for (std::size_t t = 0; t < kComponentTypeCount; ++t) {
    if (!((mask >> t) & 1u)) continue;
    if (!name.empty()) name += '+';
    name += to_string(static_cast<ComponentType>(t));
  }
  return name;
}

ReviewSummary summarize(std::span<const ArgumentComponent> components) {
  std::array<std::vector<double>, kComponentTypeCount> tokens, letters, positions;
  for (const auto& component : components) {
    const auto t = static_cast<std::size_t>(component.component_type);
    tokens[t].push_back(static_cast<double>(component.token_count));
    letters[t].push_back(static_cast<double>(component.letter_count));
    positions[t].push_back(component.position);
  }

  ReviewSummary summary;
  for (std::size_t t = 0; t < kComponentTypeCount; ++t) {
    TypeSummary& type = summary.per_type[t];
    type.count = static_cast<std::uint32_t>(tokens[t].size());
    type.tokens = distribution(tokens[t]);
    type.letters = distribution(letters[t]);
    type.positions = position_stats(positions[t]);
  }
  // Subset sums fold the per-type sums in canonical type order; this order is
  // part of the feature definition, not an implementation detail.
  for (std::uint32_t mask = 1; mask <= kSubsetCount; ++mask) {
    SubsetAggregate& agg = summary.per_subset[mask];
    for (std::size_t t = 0; t < kComponentTypeCount; ++t) {
      if (!((mask >> t) & 1u)) continue;
      const TypeSummary& type = summary.per_type[t];
      agg.count += static_cast<double>(type.count);
      agg.token_total += type.tokens.total;
      agg.letter_total += type.letters.total;
      agg.position_sum += type.positions.sum;
    }
  }
  return summary;
}

double feature_value(const ReviewSummary& summary, FeatureFamily family,
                     std::uint32_t dim) {
  if (family == FeatureFamily::AfComponent) {
    const auto [a, b] = subset_pair_from_rank(dim);
    return safe_ratio(summary.per_subset[a].count, summary.per_subset[b].count);
  }
  if (!is_argument_family(family))
    throw std::invalid_argument("feature_value: not an argument family");
  if (dim >= kTokenDims)
    throw std::out_of_range("feature_value: dimension out of range");

  if (dim < kTypeStatDims)
    return type_stat(summary.per_type[dim / 5], family, dim % 5);

  if (dim < kTypeStatDims + kSubsetPairCount) {
    const auto [a, b] = subset_pair_from_rank(dim - kTypeStatDims);
    return safe_ratio(subset_total(summary.per_subset[a], family),
                      subset_total(summary.per_subset[b], family));
  }
  const auto [a, b] = subset_pair_from_rank(dim - kTypeStatDims - kSubsetPairCount);
  const SubsetAggregate& sa = summary.per_subset[a];
  const SubsetAggregate& sb = summary.per_subset[b];
  return safe_ratio(safe_ratio(subset_total(sa, family), sa.count),
                    safe_ratio(subset_total(sb, family), sb.count));
}

std::uint32_t family_dimension(FeatureFamily family) {
  switch (family) {
    case FeatureFamily::AfComponent: return kComponentDims;
    case FeatureFamily::AfToken: return kTokenDims;
    case FeatureFamily::AfLetter: return kLetterDims;
    case FeatureFamily::AfPosition: return kPositionDims;
    default:
      throw std::invalid_argument("family_dimension: not an argument family");
  }
}

namespace {

FeatureVector extract_family(const ReviewSummary& summary, FeatureFamily family) {
  FeatureVector fv;
  fv.family = family;
  fv.dimension = family_dimension(family);
  for (std::uint32_t dim = 0; dim < fv.dimension; ++dim)
    fv.values.push_back(dim, feature_value(summary, family, dim));
  return fv;
}

}  // namespace

FeatureVector component_level(const ReviewSummary& summary) {
  return extract_family(summary, FeatureFamily::AfComponent);
}
FeatureVector token_level(const ReviewSummary& summary) {
  return extract_family(summary, FeatureFamily::AfToken);
}
FeatureVector letter_level(const ReviewSummary& summary) {
  return extract_family(summary, FeatureFamily::AfLetter);
}
FeatureVector position_level(const ReviewSummary& summary) {
  return extract_family(summary, FeatureFamily::AfPosition);
}

AllFeatures extract_all(const ReviewSummary& summary) {
  return {component_level(summary), token_level(summary), letter_level(summary),
          position_level(summary)};
}

AllFeatures extract_all(const AnnotatedReview& review, bool merge_adjacent) {
  const auto components = assemble_components(review, merge_adjacent);
  return extract_all(summarize(components));
}

SparseVector concatenate(const AllFeatures& features) {
  SparseVector out;
  std::uint32_t offset = 0;
  for (const FeatureVector* part :
       {&features.component, &features.token, &features.letter, &features.position}) {
    for (const auto& [index, value] : part->values.entries())
      out.push_back(offset + index, value);
    offset += part->dimension;
  }
  return out;
}

DimKind dimension_kind(FeatureFamily family, std::uint32_t dim) {
  if (family == FeatureFamily::AfComponent) {
    if (dim >= kComponentDims)
      throw std::out_of_range("dimension_kind: dimension out of range");
    return DimKind::RatioOfSums;
  }
  if (!is_argument_family(family))
    throw std::invalid_argument("dimension_kind: not an argument family");
  if (dim >= kTokenDims)
    throw std::out_of_range("dimension_kind: dimension out of range");
  if (dim < kTypeStatDims) return DimKind::TypeStat;
  if (dim < kTypeStatDims + kSubsetPairCount) return DimKind::RatioOfSums;
  return DimKind::RatioOfMeans;
}

std::string dimension_name(FeatureFamily family, std::uint32_t dim) {
  if (family == FeatureFamily::AfComponent) {
    const auto [a, b] = subset_pair_from_rank(dim);
    return "count[" + subset_name(a) + "]/count[" + subset_name(b) + "]";
  }
  if (!is_argument_family(family))
    throw std::invalid_argument("dimension_name: not an argument family");
  if (dim >= kTokenDims)
    throw std::out_of_range("dimension_name: dimension out of range");

  const std::string series(series_name(family));
  const bool positional = family == FeatureFamily::AfPosition;
  if (dim < kTypeStatDims) {
    const auto type = static_cast<ComponentType>(dim / 5);
    const std::string_view stat = kStatNames[positional ? 1 : 0][dim % 5];
    return series + "-" + std::string(stat) + "[" + std::string(to_string(type)) + "]";
  }
  const bool of_means = dim >= kTypeStatDims + kSubsetPairCount;
  const std::uint32_t rank =
      dim - kTypeStatDims - (of_means ? kSubsetPairCount : 0);
  const auto [a, b] = subset_pair_from_rank(rank);
  const std::string stat = of_means ? "mean" : (positional ? "sum" : "total");
  return series + "-" + stat + "[" + subset_name(a) + "]/" + series + "-" + stat +
         "[" + subset_name(b) + "]";
}

}  // namespace argrev::af
