#include "argrev/feature_selection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "argrev/argument_features.hpp"

namespace argrev {

InfoGainScorer::InfoGainScorer(std::span<const std::uint8_t> labels)
    : labels_(labels.begin(), labels.end()) {
  if (labels_.empty())
    throw std::invalid_argument("InfoGainScorer: no labels");
  const std::size_t n = labels_.size();
  xlogx_.resize(n + 1);
  xlogx_[0] = 0.0;
  for (std::size_t i = 1; i <= n; ++i)
    xlogx_[i] = static_cast<double>(i) * std::log2(static_cast<double>(i));
  for (std::uint8_t label : labels_) positive_total_ += label;
  label_entropy_ = (xlogx_[n] - xlogx_[positive_total_] -
                    xlogx_[n - positive_total_]) /
                   static_cast<double>(n);
}

IgScore InfoGainScorer::score(std::span<const double> column) const {
  const std::size_t n = labels_.size();
  if (column.size() != n)
    throw std::invalid_argument("InfoGainScorer: column/label size mismatch");
  if (n < 2 || label_entropy_ == 0.0) return {};

  thread_local std::vector<std::pair<double, std::uint8_t>> pairs;
  pairs.resize(n);
  bool constant = true;
  for (std::size_t i = 0; i < n; ++i) {
    pairs[i] = {column[i], labels_[i]};
    constant = constant && column[i] == column[0];
  }
  if (constant) return {};
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // H of a binary split part via the n*log2(n) table.
  auto entropy = [&](std::uint64_t positives, std::uint64_t total) {
    return total == 0 ? 0.0
                      : (xlogx_[total] - xlogx_[positives] -
                         xlogx_[total - positives]) /
                            static_cast<double>(total);
  };

  double best_gain = 0.0, best_threshold = 0.0;
  double best_hl = 0.0, best_hr = 0.0;
  std::uint64_t best_nl = 0, best_pl = 0;
  bool found = false;

  std::uint64_t left_pos = 0;
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    left_pos += pairs[i].second;
    if (pairs[i].first == pairs[i + 1].first) continue;
    const std::uint64_t nl = i + 1, nr = n - nl;
    const double hl = entropy(left_pos, nl);
    const double hr = entropy(positive_total_ - left_pos, nr);
    const double gain = label_entropy_ -
                        static_cast<double>(nl) * inv_n * hl -
                        static_cast<double>(nr) * inv_n * hr;
    if (!found || gain > best_gain) {
      found = true;
      best_gain = gain;
      best_threshold = (pairs[i].first + pairs[i + 1].first) / 2.0;
      best_hl = hl;
      best_hr = hr;
      best_nl = nl;
      best_pl = left_pos;
    }
  }
  if (!found || best_gain <= 0.0) return {};

  auto classes = [](std::uint64_t positives, std::uint64_t total) {
    return (positives > 0 ? 1u : 0u) + (total - positives > 0 ? 1u : 0u);
  };
  const std::uint32_t k = classes(positive_total_, n);
  const std::uint32_t k1 = classes(best_pl, best_nl);
  const std::uint32_t k2 = classes(positive_total_ - best_pl, n - best_nl);
  const double delta = std::log2(std::pow(3.0, k) - 2.0) -
                       (k * label_entropy_ - k1 * best_hl - k2 * best_hr);
  const double bound =
      (std::log2(static_cast<double>(n) - 1.0) + delta) * inv_n;
  if (best_gain <= bound) return {};
  return {best_gain, best_threshold};
}

IgScore information_gain(std::span<const double> column,
                         std::span<const std::uint8_t> labels) {
  return InfoGainScorer(labels).score(column);
}

SelectionResult select_positive(const ColumnSource& source,
                                std::span<const std::uint32_t> training_rows,
                                std::span<const std::uint8_t> training_labels,
                                std::uint32_t filter_above_dims) {
  if (training_rows.size() != training_labels.size())
    throw std::invalid_argument("select_positive: rows/labels size mismatch");
  SelectionResult result;
  result.family = source.family();
  if (source.dimension_count() <= filter_above_dims) return result;

  result.filtered = true;
  const InfoGainScorer scorer(training_labels);
  std::vector<double> column(training_rows.size());
  for (std::uint32_t dim = 0; dim < source.dimension_count(); ++dim) {
    source.fill_column(dim, training_rows, column);
    const IgScore score = scorer.score(column);
    if (score.ig > 0.0 && score.threshold)
      result.selected.push_back({dim, score.ig, *score.threshold});
  }
  return result;
}

FamilyBreakdown family_breakdown(std::span<const ManifestEntry> entries) {
  FamilyBreakdown breakdown;
  for (std::size_t i = 0; i < kArgumentFamilies.size(); ++i)
    breakdown.families[i].family = kArgumentFamilies[i];

  for (const auto& entry : entries) {
    if (!is_argument_family(entry.family)) continue;
    auto slot = std::find_if(
        breakdown.families.begin(), breakdown.families.end(),
        [&](const auto& e) { return e.family == entry.family; });
    ++slot->selected;
    ++breakdown.total_selected;
    switch (af::dimension_kind(entry.family, entry.dim)) {
      case af::DimKind::TypeStat: ++slot->type_stats; break;
      case af::DimKind::RatioOfSums: ++slot->ratio_of_sums; break;
      case af::DimKind::RatioOfMeans: ++slot->ratio_of_means; break;
    }
  }
  if (breakdown.total_selected == 0)
    throw std::invalid_argument("family_breakdown: no argument dimensions");
  for (auto& entry : breakdown.families)
    entry.share = static_cast<double>(entry.selected) /
                  static_cast<double>(breakdown.total_selected);
  return breakdown;
}

}  // namespace argrev
