#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "argrev/feature_vector.hpp"

namespace argrev {

struct IgScore {
  double ig = 0.0;  // bits; 0 when no MDL-accepted split exists
  std::optional<double> threshold;
};

// Information gain of a real column against binary labels, via the best
// single-threshold split. Candidate thresholds are midpoints between
// consecutive distinct sorted values; the best split is kept only when it
// passes the Fayyad-Irani MDL acceptance test. Entropies in bits.
//
// The scorer precomputes label-side tables so scoring many columns against
// the same labels is cheap.
class InfoGainScorer {
 public:
  explicit InfoGainScorer(std::span<const std::uint8_t> labels);

  IgScore score(std::span<const double> column) const;

  std::size_t sample_count() const { return labels_.size(); }
  double label_entropy() const { return label_entropy_; }

 private:
  std::vector<std::uint8_t> labels_;
  std::vector<double> xlogx_;  // n -> n * log2(n), n in [0, N]
  double label_entropy_ = 0.0;
  std::uint64_t positive_total_ = 0;
};

IgScore information_gain(std::span<const double> column,
                         std::span<const std::uint8_t> labels);

// Column access for one feature family over a fixed review list.
class ColumnSource {
 public:
  virtual ~ColumnSource() = default;
  virtual FeatureFamily family() const = 0;
  virtual std::uint32_t dimension_count() const = 0;
  // Values of `dim` for the given review rows, in row order.
  virtual void fill_column(std::uint32_t dim, std::span<const std::uint32_t> rows,
                           std::span<double> out) const = 0;
  virtual std::string dimension_name(std::uint32_t dim) const = 0;
};

struct SelectedFeature {
  std::uint32_t dim = 0;
  double ig = 0.0;
  double threshold = 0.0;
};

struct SelectionResult {
  FeatureFamily family = FeatureFamily::Str;
  bool filtered = false;                  // false: family passed through whole
  std::vector<SelectedFeature> selected;  // ascending dim; empty when !filtered
};

// The positive-information-gain filter. Families whose dimensionality exceeds
// `filter_above_dims` keep only dimensions with IG > 0; smaller families pass
// through untouched. Must be called with training rows only.
SelectionResult select_positive(const ColumnSource& source,
                                std::span<const std::uint32_t> training_rows,
                                std::span<const std::uint8_t> training_labels,
                                std::uint32_t filter_above_dims = 10000);

// Share of selected argument dimensions per argument family, with a split by
// construction (per-type statistics vs ratio-of-sums vs ratio-of-means).
struct FamilyBreakdown {
  struct Entry {
    FeatureFamily family;
    std::uint64_t selected = 0;
    double share = 0.0;  // of all selected argument dimensions
    std::uint64_t type_stats = 0;
    std::uint64_t ratio_of_sums = 0;
    std::uint64_t ratio_of_means = 0;
  };
  std::array<Entry, 4> families{};  // component, token, letter, position
  std::uint64_t total_selected = 0;
};

struct ManifestEntry {
  std::uint32_t fold = 0;
  FeatureFamily family = FeatureFamily::Str;
  std::uint32_t dim = 0;
  std::string name;
  double ig = 0.0;
  double threshold = 0.0;
};

// Breakdown over argument-family manifest entries. Throws
// std::invalid_argument when no argument dimensions are present.
FamilyBreakdown family_breakdown(std::span<const ManifestEntry> entries);

}  // namespace argrev
