#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "argrev/argument_features.hpp"
#include "argrev/baseline_features.hpp"
#include "argrev/corpus.hpp"
#include "argrev/feature_selection.hpp"
#include "argrev/feature_vector.hpp"
#include "argrev/lexicon.hpp"
#include "argrev/random.hpp"
#include "argrev/svm.hpp"
#include "argrev/textproc.hpp"

namespace argrev {

// ---------------------------------------------------------------------------
// Cross-validation folds
// ---------------------------------------------------------------------------

struct FoldPlan {
  std::uint32_t fold_count = 0;
  std::vector<std::uint32_t> assignment;  // sample index -> fold id

  std::vector<std::uint32_t> test_indices(std::uint32_t fold) const;
  std::vector<std::uint32_t> train_indices(std::uint32_t fold) const;
};

// Stratified k-fold: each class is shuffled independently, then dealt
// round-robin onto folds with a cursor that persists across classes, so fold
// sizes never differ by more than one overall.
FoldPlan stratified_folds(std::span<const std::int8_t> labels, std::uint32_t k,
                          Rng& rng);

// ---------------------------------------------------------------------------
// Metrics
// ---------------------------------------------------------------------------

enum class Averaging : std::uint8_t { Weighted = 0, Macro = 1 };

const char* averaging_name(Averaging averaging);
std::optional<Averaging> averaging_from_name(std::string_view name);

struct ClassMetrics {
  std::uint32_t support = 0;          // actual members of this class
  std::uint32_t predicted_count = 0;  // predictions naming this class
  std::uint32_t true_positives = 0;
  double precision = 0.0;  // 0 when predicted_count == 0
  double recall = 0.0;     // 0 when support == 0
  double f1 = 0.0;         // 0 when precision + recall == 0
};

struct MetricsReport {
  std::uint32_t sample_count = 0;
  double accuracy = 0.0;
  ClassMetrics negative;  // label -1 (not helpful)
  ClassMetrics positive;  // label +1 (helpful)
  Averaging averaging = Averaging::Weighted;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double auc = 0.0;
};

// Rank-statistic AUC of the positive class; tied scores contribute 1/2.
// Returns 0.5 when either class is absent.
double auc_from_scores(std::span<const std::int8_t> truth,
                       std::span<const double> scores);

MetricsReport compute_metrics(std::span<const std::int8_t> truth,
                              std::span<const std::int8_t> predicted,
                              std::span<const double> scores,
                              Averaging averaging);

// Per-metric mean over evaluated (non-skipped) folds.
struct MeanMetrics {
  std::uint32_t folds_used = 0;
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double auc = 0.0;
};

// ---------------------------------------------------------------------------
// Feature configurations
// ---------------------------------------------------------------------------

struct FeatureConfig {
  std::string name;
  std::vector<FeatureFamily> families;
};

// The nine standard configurations, in reporting order:
// AF, STR, STR+AF, UGR, UGR+AF, GALC, GALC+AF, INQUIRER, INQUIRER+AF.
std::vector<FeatureConfig> default_configurations();
std::optional<FeatureConfig> configuration_from_name(std::string_view name);

// ---------------------------------------------------------------------------
// Prepared corpus: everything computable before folds are drawn
// ---------------------------------------------------------------------------

struct PrepareOptions {
  bool merge_adjacent_clauses = true;
  std::optional<StopwordSet> stopwords;   // default English list when absent
  std::optional<Lexicon> emotion_lexicon;   // GALC; builtin when absent
  std::optional<Lexicon> semantic_lexicon;  // INQUIRER; builtin when absent
};

struct PreparedCorpus {
  std::vector<AnnotatedReview> reviews;
  std::vector<std::int8_t> labels;  // +1 helpful, -1 not helpful
  std::vector<std::vector<Token>> tokens;
  std::vector<af::ReviewSummary> summaries;
  std::vector<SparseVector> str_vectors;
  std::vector<SparseVector> galc_vectors;
  std::vector<SparseVector> inquirer_vectors;
  StopwordSet stopwords;
  Lexicon emotion_lexicon;
  Lexicon semantic_lexicon;
  bool merge_adjacent_clauses = true;

  std::uint32_t size() const { return static_cast<std::uint32_t>(reviews.size()); }
};

PreparedCorpus prepare_corpus(std::span<const AnnotatedReview> reviews,
                              const PrepareOptions& options = {});

// ---------------------------------------------------------------------------
// Experiment runner
// ---------------------------------------------------------------------------

struct ExperimentOptions {
  std::uint32_t folds = 10;
  std::uint64_t seed = 1;
  SvmParams svm;  // gamma <= 0 means 1 / active_dimension, set per fold
  Averaging averaging = Averaging::Weighted;
  std::uint32_t min_term_frequency = 3;      // UGR vocabulary cut
  std::uint32_t filter_above_dims = 10000;   // IG filter only past this size
  std::vector<FeatureConfig> configurations;  // empty -> default nine
  // Test-only regression guard: fit vocabulary, selection and scaling on the
  // whole corpus instead of the training fold. Leaks test data by design;
  // never expose on the command line.
  bool fit_on_all_data = false;
};

struct FoldOutcome {
  std::uint32_t fold = 0;
  bool skipped = false;
  std::string skip_reason;
  MetricsReport metrics;
  std::uint32_t active_dimension = 0;  // columns the classifier saw
};

struct ConfigResult {
  FeatureConfig config;
  std::vector<FoldOutcome> folds;
  MeanMetrics mean;
  std::vector<ManifestEntry> manifest;  // per-fold selected filtered features
};

struct ExperimentResult {
  FoldPlan plan;
  std::vector<ConfigResult> configs;
  std::vector<std::string> warnings;
};

ExperimentResult run_experiment(const PreparedCorpus& corpus,
                                const ExperimentOptions& options);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

// Fixed-width text table of fold-mean metrics per configuration.
std::string format_report(const ExperimentResult& result);

// One row per configuration and fold, plus mean rows; stable column order.
void write_report_csv(std::ostream& out, const ExperimentResult& result);

// Per-family share of selected argument dimensions across all folds.
std::string format_selection_analysis(std::span<const ManifestEntry> manifest);

}  // namespace argrev
