#include "argrev/baseline_features.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace argrev {

std::optional<std::uint32_t> Vocabulary::index_of(std::string_view term) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), term);
  if (it != terms.end() && *it == term)
    return static_cast<std::uint32_t>(it - terms.begin());
  return std::nullopt;
}

void Vocabulary::save(std::ostream& out) const {
  out << "corpus-size\t" << corpus_size << '\n';
  for (std::size_t i = 0; i < terms.size(); ++i)
    out << terms[i] << '\t' << document_frequencies[i] << '\n';
}

Vocabulary Vocabulary::load(std::istream& in) {
  Vocabulary vocab;
  std::string line;
  if (!std::getline(in, line) || line.rfind("corpus-size\t", 0) != 0)
    throw std::runtime_error("vocabulary: missing corpus-size header");
  vocab.corpus_size =
      static_cast<std::uint32_t>(std::stoul(line.substr(line.find('\t') + 1)));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("vocabulary: expected term<TAB>df");
    vocab.terms.push_back(line.substr(0, tab));
    vocab.document_frequencies.push_back(
        static_cast<std::uint32_t>(std::stoul(line.substr(tab + 1))));
  }
  if (!std::is_sorted(vocab.terms.begin(), vocab.terms.end()))
    throw std::runtime_error("vocabulary: terms out of order");
  return vocab;
}

Vocabulary build_vocabulary(std::span<const AnnotatedReview> training_reviews,
                            const StopwordSet& stopwords,
                            std::uint32_t min_term_frequency) {
  // term -> (corpus-wide term frequency, document frequency); std::map keeps
  // the final term list lexicographic.
  std::map<std::string, std::pair<std::uint32_t, std::uint32_t>> counts;
  for (const auto& review : training_reviews) {
    std::map<std::string, std::uint32_t> local;
    for (auto& token : tokenize(review.text, stopwords)) {
      if (token.is_stopword) continue;
      ++local[std::move(token.surface)];
    }
    for (const auto& [term, tf] : local) {
      auto& entry = counts[term];
      entry.first += tf;
      entry.second += 1;
    }
  }
  Vocabulary vocab;
  vocab.corpus_size = static_cast<std::uint32_t>(training_reviews.size());
  for (const auto& [term, entry] : counts) {
    if (entry.first < min_term_frequency) continue;
    vocab.terms.push_back(term);
    vocab.document_frequencies.push_back(entry.second);
  }
  return vocab;
}

double inverse_document_frequency(const Vocabulary& vocab,
                                  std::uint32_t term_index) {
  return std::log(static_cast<double>(vocab.corpus_size) /
                  (1.0 + vocab.document_frequencies[term_index])) +
         1.0;
}

FeatureVector str_features(std::string_view text) {
  const auto sentences = segment_sentences(text);
  const auto tokens = static_cast<double>(token_count(text));
  const auto sentence_count = static_cast<double>(sentences.size());
  double questions = 0.0;
  for (const auto& sentence : sentences)
    if (!sentence.empty() && sentence.back() == '?') questions += 1.0;
  double exclamations = 0.0;
  for (char ch : text)
    if (ch == '!') exclamations += 1.0;

  FeatureVector fv;
  fv.family = FeatureFamily::Str;
  fv.dimension = kStrDimension;
  fv.values.push_back(0, tokens);
  fv.values.push_back(1, sentence_count);
  fv.values.push_back(2, sentence_count == 0.0 ? 0.0 : tokens / sentence_count);
  fv.values.push_back(3, exclamations);
  fv.values.push_back(4, sentence_count == 0.0 ? 0.0 : questions / sentence_count);
  return fv;
}

FeatureVector str_features(const AnnotatedReview& review) {
  return str_features(review.text);
}

std::string str_dimension_name(std::uint32_t index) {
  static constexpr std::string_view kNames[kStrDimension] = {
      "token-count", "sentence-count", "mean-sentence-length",
      "exclamation-count", "question-sentence-fraction"};
  if (index >= kStrDimension)
    throw std::out_of_range("str_dimension_name: index out of range");
  return std::string(kNames[index]);
}

FeatureVector ugr_features(std::span<const Token> tokens, const Vocabulary& vocab) {
  std::vector<std::uint32_t> tf(vocab.size(), 0);
  for (const auto& token : tokens) {
    if (token.is_stopword) continue;
    if (auto index = vocab.index_of(token.surface)) ++tf[*index];
  }
  FeatureVector fv;
  fv.family = FeatureFamily::Ugr;
  fv.dimension = static_cast<std::uint32_t>(vocab.size());
  for (std::uint32_t i = 0; i < tf.size(); ++i)
    if (tf[i] > 0)
      fv.values.push_back(i, tf[i] * inverse_document_frequency(vocab, i));
  return fv;
}

FeatureVector ugr_features(const AnnotatedReview& review, const Vocabulary& vocab) {
  return ugr_features(tokenize(review.text, StopwordSet::default_english()), vocab);
}

namespace {

FeatureVector category_counts(std::span<const Token> tokens, const Lexicon& lexicon,
                              FeatureFamily family, bool count_unmapped) {
  const std::size_t categories = lexicon.category_count();
  std::vector<std::uint32_t> counts(categories + (count_unmapped ? 1 : 0), 0);
  for (const auto& token : tokens) {
    const auto matched = lexicon.categories_of(token.surface);
    if (matched.empty()) {
      if (count_unmapped) ++counts[categories];
      continue;
    }
    for (std::uint32_t category : matched) ++counts[category];
  }
  FeatureVector fv;
  fv.family = family;
  fv.dimension = static_cast<std::uint32_t>(counts.size());
  for (std::uint32_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0) fv.values.push_back(i, counts[i]);
  return fv;
}

}  // namespace

FeatureVector galc_features(std::span<const Token> tokens, const Lexicon& lexicon) {
  return category_counts(tokens, lexicon, FeatureFamily::Galc, true);
}

FeatureVector galc_features(const AnnotatedReview& review, const Lexicon& lexicon) {
  return galc_features(tokenize(review.text), lexicon);
}

FeatureVector inquirer_features(std::span<const Token> tokens,
                                const Lexicon& lexicon) {
  return category_counts(tokens, lexicon, FeatureFamily::Inquirer, false);
}

FeatureVector inquirer_features(const AnnotatedReview& review,
                                const Lexicon& lexicon) {
  return inquirer_features(tokenize(review.text), lexicon);
}

}  // namespace argrev
