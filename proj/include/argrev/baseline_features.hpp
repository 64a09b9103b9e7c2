#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argrev/corpus.hpp"
#include "argrev/feature_vector.hpp"
#include "argrev/lexicon.hpp"
#include "argrev/textproc.hpp"

namespace argrev {

// Unigram vocabulary built from training data only: stopwords and terms with
// corpus-wide term frequency < min_term_frequency are removed. Terms are kept
// sorted so vocabulary construction is independent of review order.
struct Vocabulary {
  std::vector<std::string> terms;                       // lexicographic
  std::vector<std::uint32_t> document_frequencies;      // per term
  std::uint32_t corpus_size = 0;                        // training review count

  std::optional<std::uint32_t> index_of(std::string_view term) const;
  std::size_t size() const { return terms.size(); }

  // Persisted as "term<TAB>df" lines with a header carrying corpus_size.
  void save(std::ostream& out) const;
  static Vocabulary load(std::istream& in);
};

Vocabulary build_vocabulary(std::span<const AnnotatedReview> training_reviews,
                            const StopwordSet& stopwords,
                            std::uint32_t min_term_frequency = 3);

// Smoothed idf: ln(N / (1 + df)) + 1.
double inverse_document_frequency(const Vocabulary& vocab, std::uint32_t term_index);

// STR: token count, sentence count, average sentence length in tokens,
// exclamation marks, fraction of question-terminated sentences. Always 5
// dimensions, in that order.
inline constexpr std::uint32_t kStrDimension = 5;
FeatureVector str_features(std::string_view text);
FeatureVector str_features(const AnnotatedReview& review);
std::string str_dimension_name(std::uint32_t index);

// UGR: one dimension per vocabulary term, tf * idf for terms that appear.
FeatureVector ugr_features(std::span<const Token> tokens, const Vocabulary& vocab);
FeatureVector ugr_features(const AnnotatedReview& review, const Vocabulary& vocab);

// GALC-style emotion counts: one dimension per category plus a final
// dimension counting tokens mapped to no category.
FeatureVector galc_features(std::span<const Token> tokens, const Lexicon& lexicon);
FeatureVector galc_features(const AnnotatedReview& review, const Lexicon& lexicon);

// INQUIRER-style semantic tag counts: one dimension per tag.
FeatureVector inquirer_features(std::span<const Token> tokens, const Lexicon& lexicon);
FeatureVector inquirer_features(const AnnotatedReview& review, const Lexicon& lexicon);

}  // namespace argrev
