#include "argrev/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace argrev {

// ---------------------------------------------------------------------------
// Folds
// ---------------------------------------------------------------------------

std::vector<std::uint32_t> FoldPlan::test_indices(std::uint32_t fold) const {
  std::vector<std::uint32_t> indices;
  for (std::uint32_t i = 0; i < assignment.size(); ++i)
    if (assignment[i] == fold) indices.push_back(i);
  return indices;
}

std::vector<std::uint32_t> FoldPlan::train_indices(std::uint32_t fold) const {
  std::vector<std::uint32_t> indices;
  for (std::uint32_t i = 0; i < assignment.size(); ++i)
    if (assignment[i] != fold) indices.push_back(i);
  return indices;
}

FoldPlan stratified_folds(std::span<const std::int8_t> labels, std::uint32_t k,
                          Rng& rng) {
  const auto n = static_cast<std::uint32_t>(labels.size());
  if (k < 2) throw std::invalid_argument("stratified_folds: need k >= 2");
  if (k > n) throw std::invalid_argument("stratified_folds: k exceeds samples");

  FoldPlan plan;
  plan.fold_count = k;
  plan.assignment.assign(n, 0);

  // Deal each class round-robin after an in-class shuffle. The fold cursor
  // persists across classes (negatives first), so overall fold sizes differ
  // by at most one.
  std::uint32_t cursor = 0;
  for (std::int8_t wanted : {std::int8_t{-1}, std::int8_t{1}}) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < n; ++i)
      if (labels[i] == wanted) members.push_back(i);
    rng.shuffle(members);
    for (std::uint32_t index : members)
      plan.assignment[index] = cursor++ % k;
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Metrics
// ---------------------------------------------------------------------------

const char* averaging_name(Averaging averaging) {
  return averaging == Averaging::Weighted ? "weighted" : "macro";
}

std::optional<Averaging> averaging_from_name(std::string_view name) {
  if (name == "weighted") return Averaging::Weighted;
  if (name == "macro") return Averaging::Macro;
  return std::nullopt;
}

double auc_from_scores(std::span<const std::int8_t> truth,
                       std::span<const double> scores) {
  const std::size_t n = truth.size();
  if (scores.size() != n)
    throw std::invalid_argument("auc_from_scores: size mismatch");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });

  // Rank statistic with average ranks over tied scores.
  double positive_rank_sum = 0.0;
  std::uint64_t positives = 0, negatives = 0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    const double mean_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t t = i; t < j; ++t)
      if (truth[order[t]] == 1) positive_rank_sum += mean_rank;
    i = j;
  }
  for (std::int8_t label : truth) (label == 1 ? positives : negatives)++;
  if (positives == 0 || negatives == 0) return 0.5;
  const double p = static_cast<double>(positives);
  return (positive_rank_sum - p * (p + 1.0) / 2.0) /
         (p * static_cast<double>(negatives));
}

MetricsReport compute_metrics(std::span<const std::int8_t> truth,
                              std::span<const std::int8_t> predicted,
                              std::span<const double> scores,
                              Averaging averaging) {
  const std::size_t n = truth.size();
  if (n == 0 || predicted.size() != n || scores.size() != n)
    throw std::invalid_argument("compute_metrics: empty input or size mismatch");

  MetricsReport report;
  report.sample_count = static_cast<std::uint32_t>(n);
  report.averaging = averaging;

  std::uint32_t correct = 0;
  auto tally = [&](std::int8_t wanted, ClassMetrics& metrics) {
    for (std::size_t i = 0; i < n; ++i) {
      if (truth[i] == wanted) ++metrics.support;
      if (predicted[i] == wanted) ++metrics.predicted_count;
      if (truth[i] == wanted && predicted[i] == wanted) ++metrics.true_positives;
    }
    metrics.precision = metrics.predicted_count == 0
                            ? 0.0
                            : static_cast<double>(metrics.true_positives) /
                                  metrics.predicted_count;
    metrics.recall = metrics.support == 0
                         ? 0.0
                         : static_cast<double>(metrics.true_positives) /
                               metrics.support;
    metrics.f1 = metrics.precision + metrics.recall == 0.0
                     ? 0.0
                     : 2.0 * metrics.precision * metrics.recall /
                           (metrics.precision + metrics.recall);
  };
  tally(-1, report.negative);
  tally(1, report.positive);
  for (std::size_t i = 0; i < n; ++i)
    if (truth[i] == predicted[i]) ++correct;
  report.accuracy = static_cast<double>(correct) / static_cast<double>(n);

  const double weight_negative =
      averaging == Averaging::Weighted
          ? static_cast<double>(report.negative.support) / static_cast<double>(n)
          : 0.5;
  const double weight_positive =
      averaging == Averaging::Weighted
          ? static_cast<double>(report.positive.support) / static_cast<double>(n)
          : 0.5;
  report.precision = weight_negative * report.negative.precision +
                     weight_positive * report.positive.precision;
  report.recall = weight_negative * report.negative.recall +
                  weight_positive * report.positive.recall;
  report.f1 = weight_negative * report.negative.f1 +
              weight_positive * report.positive.f1;
  report.auc = auc_from_scores(truth, scores);
  return report;
}

// ---------------------------------------------------------------------------
// Configurations
// ---------------------------------------------------------------------------

namespace {

const std::vector<FeatureFamily> kAfSet{
    FeatureFamily::AfComponent, FeatureFamily::AfToken, FeatureFamily::AfLetter,
    FeatureFamily::AfPosition};

std::vector<FeatureFamily> with_af(FeatureFamily base) {
  std::vector<FeatureFamily> families;
  families.reserve(1 + kAfSet.size());
  families.push_back(base);
  for (FeatureFamily family : kAfSet) families.push_back(family);
  return families;
}

}  // namespace

std::vector<FeatureConfig> default_configurations() {
  return {
      {"AF", kAfSet},
      {"STR", {FeatureFamily::Str}},
      {"STR+AF", with_af(FeatureFamily::Str)},
      {"UGR", {FeatureFamily::Ugr}},
      {"UGR+AF", with_af(FeatureFamily::Ugr)},
      {"GALC", {FeatureFamily::Galc}},
      {"GALC+AF", with_af(FeatureFamily::Galc)},
      {"INQUIRER", {FeatureFamily::Inquirer}},
      {"INQUIRER+AF", with_af(FeatureFamily::Inquirer)},
  };
}

std::optional<FeatureConfig> configuration_from_name(std::string_view name) {
  for (auto& config : default_configurations())
    if (config.name == name) return config;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Prepared corpus
// ---------------------------------------------------------------------------

PreparedCorpus prepare_corpus(std::span<const AnnotatedReview> reviews,
                              const PrepareOptions& options) {
  PreparedCorpus corpus;
  corpus.reviews.assign(reviews.begin(), reviews.end());
  corpus.stopwords = options.stopwords.value_or(StopwordSet::default_english());
  corpus.emotion_lexicon =
      options.emotion_lexicon.value_or(Lexicon::builtin_emotion());
  corpus.semantic_lexicon =
      options.semantic_lexicon.value_or(Lexicon::builtin_semantic());
  corpus.merge_adjacent_clauses = options.merge_adjacent_clauses;

  for (const auto& review : corpus.reviews) {
    corpus.labels.push_back(review.label == Helpfulness::Helpful ? 1 : -1);
    corpus.tokens.push_back(tokenize(review.text, corpus.stopwords));
    corpus.summaries.push_back(af::summarize(
        assemble_components(review, corpus.merge_adjacent_clauses)));
    corpus.str_vectors.push_back(str_features(review).values);
    corpus.galc_vectors.push_back(
        galc_features(corpus.tokens.back(), corpus.emotion_lexicon).values);
    corpus.inquirer_vectors.push_back(
        inquirer_features(corpus.tokens.back(), corpus.semantic_lexicon).values);
  }
  return corpus;
}

// ---------------------------------------------------------------------------
// Experiment
// ---------------------------------------------------------------------------

namespace {

class AfColumnSource : public ColumnSource {
 public:
  AfColumnSource(std::span<const af::ReviewSummary> summaries,
                 FeatureFamily family)
      : summaries_(summaries), family_(family) {}

  FeatureFamily family() const override { return family_; }
  std::uint32_t dimension_count() const override {
    return af::family_dimension(family_);
  }
  void fill_column(std::uint32_t dim, std::span<const std::uint32_t> rows,
                   std::span<double> out) const override {
    for (std::size_t i = 0; i < rows.size(); ++i)
      out[i] = af::feature_value(summaries_[rows[i]], family_, dim);
  }
  std::string dimension_name(std::uint32_t dim) const override {
    return af::dimension_name(family_, dim);
  }

 private:
  std::span<const af::ReviewSummary> summaries_;
  FeatureFamily family_;
};

class SparseRowsColumnSource : public ColumnSource {
 public:
  SparseRowsColumnSource(std::span<const SparseVector> rows, FeatureFamily family,
                         std::uint32_t dimension, const Vocabulary* vocab)
      : rows_(rows), family_(family), dimension_(dimension), vocab_(vocab) {}

  FeatureFamily family() const override { return family_; }
  std::uint32_t dimension_count() const override { return dimension_; }
  void fill_column(std::uint32_t dim, std::span<const std::uint32_t> rows,
                   std::span<double> out) const override {
    for (std::size_t i = 0; i < rows.size(); ++i)
      out[i] = rows_[rows[i]].at(dim);
  }
  std::string dimension_name(std::uint32_t dim) const override {
    if (vocab_ && dim < vocab_->terms.size()) return "term:" + vocab_->terms[dim];
    return std::string(argrev::family_name(family_)) + ":" + std::to_string(dim);
  }

 private:
  std::span<const SparseVector> rows_;
  FeatureFamily family_;
  std::uint32_t dimension_;
  const Vocabulary* vocab_;
};

struct FamilyColumns {
  FeatureFamily family;
  std::uint32_t full_dimension = 0;
  bool filtered = false;
  std::vector<SelectedFeature> selected;  // when filtered
};

}  // namespace

ExperimentResult run_experiment(const PreparedCorpus& corpus,
                                const ExperimentOptions& options) {
  const std::uint32_t n = corpus.size();
  if (n == 0) throw std::invalid_argument("run_experiment: empty corpus");
  const auto configs = options.configurations.empty() ? default_configurations()
                                                      : options.configurations;
  if (configs.empty())
    throw std::invalid_argument("run_experiment: no configurations");
  for (const auto& config : configs)
    if (config.families.empty())
      throw std::invalid_argument("run_experiment: configuration '" +
                                  config.name + "' has no families");

  Rng rng(options.seed);
  ExperimentResult result;
  result.plan = stratified_folds(corpus.labels, options.folds, rng);
  result.configs.resize(configs.size());
  for (std::size_t c = 0; c < configs.size(); ++c)
    result.configs[c].config = configs[c];

  const bool wants_ugr = std::any_of(configs.begin(), configs.end(), [](auto& c) {
    return std::find(c.families.begin(), c.families.end(), FeatureFamily::Ugr) !=
           c.families.end();
  });
  std::vector<FeatureFamily> af_wanted;
  for (FeatureFamily family : kArgumentFamilies)
    for (const auto& config : configs)
      if (std::find(config.families.begin(), config.families.end(), family) !=
          config.families.end()) {
        af_wanted.push_back(family);
        break;
      }

  std::vector<std::uint32_t> all_rows(n);
  std::iota(all_rows.begin(), all_rows.end(), 0);

  for (std::uint32_t fold = 0; fold < options.folds; ++fold) {
    const auto test_rows = result.plan.test_indices(fold);
    const auto train_rows = result.plan.train_indices(fold);

    bool pos = false, neg = false;
    for (std::uint32_t r : train_rows) (corpus.labels[r] == 1 ? pos : neg) = true;
    if (!pos || !neg) {
      result.warnings.push_back("fold " + std::to_string(fold) +
                                ": training data has a single class; skipped");
      for (auto& config_result : result.configs) {
        FoldOutcome outcome;
        outcome.fold = fold;
        outcome.skipped = true;
        outcome.skip_reason = "single-class training data";
        config_result.folds.push_back(std::move(outcome));
      }
      continue;
    }

    // Everything below that is "fit" (vocabulary, selection, scaling) uses
    // fit_rows: the training rows, or the whole corpus under the test-only
    // leakage switch.
    const std::span<const std::uint32_t> fit_rows =
        options.fit_on_all_data ? std::span<const std::uint32_t>(all_rows)
                                : std::span<const std::uint32_t>(train_rows);
    std::vector<std::uint8_t> fit_labels01;
    for (std::uint32_t r : fit_rows)
      fit_labels01.push_back(corpus.labels[r] == 1 ? 1 : 0);

    // Shared per-fold artifacts, computed once and reused by every
    // configuration that needs them.
    Vocabulary vocab;
    std::vector<SparseVector> ugr_rows;
    if (wants_ugr) {
      std::vector<AnnotatedReview> fit_reviews;
      for (std::uint32_t r : fit_rows) fit_reviews.push_back(corpus.reviews[r]);
      vocab = build_vocabulary(fit_reviews, corpus.stopwords,
                               options.min_term_frequency);
      ugr_rows.reserve(n);
      for (std::uint32_t r = 0; r < n; ++r)
        ugr_rows.push_back(ugr_features(corpus.tokens[r], vocab).values);
    }

    std::vector<std::pair<FeatureFamily, SelectionResult>> af_selections;
    for (FeatureFamily family : af_wanted) {
      AfColumnSource source(corpus.summaries, family);
      af_selections.emplace_back(
          family, select_positive(source, fit_rows, fit_labels01,
                                  options.filter_above_dims));
    }

    // Rows over the selected dimensions of each filtered argument family,
    // with family-local indices. Built once per fold and shared by every
    // configuration that includes the family.
    std::vector<std::pair<FeatureFamily, std::vector<SparseVector>>> af_rows;
    for (const auto& [family, selection] : af_selections) {
      if (!selection.filtered) continue;
      std::vector<SparseVector> rows;
      rows.reserve(n);
      for (std::uint32_t r = 0; r < n; ++r) {
        SparseVector v;
        for (std::uint32_t s = 0; s < selection.selected.size(); ++s) {
          const double value = af::feature_value(corpus.summaries[r], family,
                                                 selection.selected[s].dim);
          if (value != 0.0) v.push_back(s, value);
        }
        rows.push_back(std::move(v));
      }
      af_rows.emplace_back(family, std::move(rows));
    }

    for (std::size_t c = 0; c < configs.size(); ++c) {
      const FeatureConfig& config = configs[c];
      FoldOutcome outcome;
      outcome.fold = fold;

      // Column layout of this configuration: families in configured order,
      // filtered families contributing their selected dimensions only.
      std::vector<FamilyColumns> layout;
      std::uint32_t dimension = 0;
      for (FeatureFamily family : config.families) {
        FamilyColumns columns;
        columns.family = family;
        switch (family) {
          case FeatureFamily::Str:
            columns.full_dimension = kStrDimension;
            break;
          case FeatureFamily::Ugr: {
            columns.full_dimension = static_cast<std::uint32_t>(vocab.size());
            if (columns.full_dimension > options.filter_above_dims) {
              SparseRowsColumnSource source(ugr_rows, family,
                                            columns.full_dimension, &vocab);
              auto selection = select_positive(source, fit_rows, fit_labels01,
                                               options.filter_above_dims);
              columns.filtered = true;
              columns.selected = std::move(selection.selected);
            }
            break;
          }
          case FeatureFamily::Galc:
            columns.full_dimension =
                static_cast<std::uint32_t>(corpus.emotion_lexicon.category_count()) +
                1;
            break;
          case FeatureFamily::Inquirer:
            columns.full_dimension = static_cast<std::uint32_t>(
                corpus.semantic_lexicon.category_count());
            break;
          default: {
            columns.full_dimension = af::family_dimension(family);
            auto it = std::find_if(
                af_selections.begin(), af_selections.end(),
                [&](const auto& entry) { return entry.first == family; });
            if (it->second.filtered) {
              columns.filtered = true;
              columns.selected = it->second.selected;
            }
            break;
          }
        }
        dimension += columns.filtered
                         ? static_cast<std::uint32_t>(columns.selected.size())
                         : columns.full_dimension;
        layout.push_back(std::move(columns));
      }
      outcome.active_dimension = dimension;

      // Manifest: filtered families of this configuration, this fold.
      for (const auto& columns : layout) {
        if (!columns.filtered) continue;
        for (const auto& feature : columns.selected) {
          ManifestEntry entry;
          entry.fold = fold;
          entry.family = columns.family;
          entry.dim = feature.dim;
          entry.ig = feature.ig;
          entry.threshold = feature.threshold;
          if (is_argument_family(columns.family))
            entry.name = af::dimension_name(columns.family, feature.dim);
          else if (columns.family == FeatureFamily::Ugr)
            entry.name = "term:" + vocab.terms[feature.dim];
          else
            entry.name = std::string(family_name(columns.family)) + ":" +
                         std::to_string(feature.dim);
          result.configs[c].manifest.push_back(std::move(entry));
        }
      }

      auto assemble_row = [&](std::uint32_t row) {
        SparseVector out;
        std::uint32_t offset = 0;
        for (const auto& columns : layout) {
          if (columns.filtered) {
            if (is_argument_family(columns.family)) {
              const auto it = std::find_if(
                  af_rows.begin(), af_rows.end(),
                  [&](const auto& entry) { return entry.first == columns.family; });
              for (const auto& [local, value] : it->second[row].entries())
                out.push_back(offset + local, value);
            } else {
              for (std::uint32_t s = 0; s < columns.selected.size(); ++s) {
                const double value = ugr_rows[row].at(columns.selected[s].dim);
                if (value != 0.0) out.push_back(offset + s, value);
              }
            }
            offset += static_cast<std::uint32_t>(columns.selected.size());
            continue;
          }
          const SparseVector* source = nullptr;
          switch (columns.family) {
            case FeatureFamily::Str: source = &corpus.str_vectors[row]; break;
            case FeatureFamily::Ugr: source = &ugr_rows[row]; break;
            case FeatureFamily::Galc: source = &corpus.galc_vectors[row]; break;
            case FeatureFamily::Inquirer:
              source = &corpus.inquirer_vectors[row];
              break;
            default: break;
          }
          if (source) {
            for (const auto& [index, value] : source->entries())
              out.push_back(offset + index, value);
          } else {
            // Unfiltered argument family: materialize every dimension.
            for (std::uint32_t dim = 0; dim < columns.full_dimension; ++dim) {
              const double value =
                  af::feature_value(corpus.summaries[row], columns.family, dim);
              if (value != 0.0) out.push_back(offset + dim, value);
            }
          }
          offset += columns.full_dimension;
        }
        return out;
      };

      std::vector<SparseVector> train_x, test_x, fit_x;
      for (std::uint32_t r : train_rows) train_x.push_back(assemble_row(r));
      for (std::uint32_t r : test_rows) test_x.push_back(assemble_row(r));
      std::vector<std::int8_t> train_y, test_y;
      for (std::uint32_t r : train_rows) train_y.push_back(corpus.labels[r]);
      for (std::uint32_t r : test_rows) test_y.push_back(corpus.labels[r]);

      ScalingStats scaling;
      if (options.fit_on_all_data) {
        for (std::uint32_t r : all_rows) fit_x.push_back(assemble_row(r));
        scaling = scale_fit(fit_x, dimension);
      } else {
        scaling = scale_fit(train_x, dimension);
      }
      const auto scaled_train = scale_transform(scaling, train_x);
      const auto scaled_test = scale_transform(scaling, test_x);

      SvmParams params = options.svm;
      if (params.kernel.kind == KernelKind::Rbf && params.kernel.gamma <= 0.0)
        params.kernel.gamma = dimension > 0 ? 1.0 / dimension : 1.0;

      try {
        const SvmModel model = train_svm(scaled_train, train_y, params, scaling);
        const std::vector<double> scores = decision_values(model, scaled_test);
        std::vector<std::int8_t> predicted;
        predicted.reserve(scores.size());
        for (double score : scores) predicted.push_back(score >= 0.0 ? 1 : -1);
        outcome.metrics =
            compute_metrics(test_y, predicted, scores, options.averaging);
      } catch (const TrainingError& error) {
        outcome.skipped = true;
        outcome.skip_reason = error.what();
        result.warnings.push_back("fold " + std::to_string(fold) + ", " +
                                  config.name + ": " + error.what());
      }
      result.configs[c].folds.push_back(std::move(outcome));
    }
  }

  for (auto& config_result : result.configs) {
    MeanMetrics& mean = config_result.mean;
    for (const auto& outcome : config_result.folds) {
      if (outcome.skipped) continue;
      ++mean.folds_used;
      mean.accuracy += outcome.metrics.accuracy;
      mean.precision += outcome.metrics.precision;
      mean.recall += outcome.metrics.recall;
      mean.f1 += outcome.metrics.f1;
      mean.auc += outcome.metrics.auc;
    }
    if (mean.folds_used > 0) {
      const double folds = mean.folds_used;
      mean.accuracy /= folds;
      mean.precision /= folds;
      mean.recall /= folds;
      mean.f1 /= folds;
      mean.auc /= folds;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

namespace {

std::string fixed3(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3f", value);
  return buffer;
}

std::string fixed6(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

}  // namespace

std::string format_report(const ExperimentResult& result) {
  std::size_t width = 15;
  for (const auto& config : result.configs)
    width = std::max(width, config.config.name.size() + 2);

  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "configuration"
      << std::setw(7) << "folds" << std::setw(10) << "accuracy" << std::setw(11)
      << "precision" << std::setw(8) << "recall" << std::setw(8) << "f1"
      << std::setw(8) << "auc" << '\n';
  for (const auto& config : result.configs) {
    out << std::setw(static_cast<int>(width)) << config.config.name
        << std::setw(7) << config.mean.folds_used << std::setw(10)
        << fixed3(config.mean.accuracy) << std::setw(11)
        << fixed3(config.mean.precision) << std::setw(8)
        << fixed3(config.mean.recall) << std::setw(8) << fixed3(config.mean.f1)
        << std::setw(8) << fixed3(config.mean.auc) << '\n';
  }
  for (const auto& warning : result.warnings) out << "warning: " << warning << '\n';
  return out.str();
}

void write_report_csv(std::ostream& out, const ExperimentResult& result) {
  out << "configuration,fold,skipped,samples,active_dims,accuracy,precision,"
         "recall,f1,auc\n";
  for (const auto& config : result.configs) {
    for (const auto& outcome : config.folds) {
      out << config.config.name << ',' << outcome.fold << ','
          << (outcome.skipped ? 1 : 0) << ',';
      if (outcome.skipped) {
        out << ",,,,,,\n";
        continue;
      }
      out << outcome.metrics.sample_count << ',' << outcome.active_dimension
          << ',' << fixed6(outcome.metrics.accuracy) << ','
          << fixed6(outcome.metrics.precision) << ','
          << fixed6(outcome.metrics.recall) << ',' << fixed6(outcome.metrics.f1)
          << ',' << fixed6(outcome.metrics.auc) << '\n';
    }
    out << config.config.name << ",mean,," << config.mean.folds_used << ",,"
        << fixed6(config.mean.accuracy) << ',' << fixed6(config.mean.precision)
        << ',' << fixed6(config.mean.recall) << ',' << fixed6(config.mean.f1)
        << ',' << fixed6(config.mean.auc) << '\n';
  }
}

std::string format_selection_analysis(std::span<const ManifestEntry> manifest) {
  const FamilyBreakdown breakdown = family_breakdown(manifest);
  std::ostringstream out;
  out << "selected argument dimensions: " << breakdown.total_selected << '\n';
  out << std::left << std::setw(14) << "family" << std::setw(10) << "selected"
      << std::setw(8) << "share" << std::setw(12) << "type-stats"
      << std::setw(15) << "ratio-of-sums" << std::setw(15) << "ratio-of-means"
      << '\n';
  const FamilyBreakdown::Entry* argmax = &breakdown.families[0];
  for (const auto& entry : breakdown.families) {
    char share[16];
    std::snprintf(share, sizeof share, "%.1f%%", 100.0 * entry.share);
    out << std::setw(14) << family_name(entry.family) << std::setw(10)
        << entry.selected << std::setw(8) << share << std::setw(12)
        << entry.type_stats << std::setw(15) << entry.ratio_of_sums
        << std::setw(15) << entry.ratio_of_means << '\n';
    if (entry.selected > argmax->selected) argmax = &entry;
  }
  out << "argmax family: " << family_name(argmax->family) << '\n';
  return out.str();
}

}  // namespace argrev
