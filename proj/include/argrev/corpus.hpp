#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "argrev/component_type.hpp"

namespace argrev {

// Raised on malformed corpus/lexicon/stopword input. `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class Helpfulness : std::uint8_t { NotHelpful = 0, Helpful = 1 };

// Helpful iff helpful_votes / total_votes >= 3/4, compared in integers.
// total_votes must be positive.
Helpfulness derive_label(std::uint64_t helpful_votes, std::uint64_t total_votes);

// Label with the strictly highest count; ties resolved toward the earliest
// ComponentType in canonical order among the tied labels.
ComponentType majority_vote(std::span<const ComponentType> labels);

struct ClauseAnnotation {
  std::string text;
  std::vector<ComponentType> annotator_labels;  // one per annotator, >= 1
  ComponentType final_label = ComponentType::NonArgumentative;
};

struct AnnotatedReview {
  std::string id;
  std::string text;
  std::vector<ClauseAnnotation> clauses;
  std::uint64_t helpful_votes = 0;  // X
  std::uint64_t total_votes = 1;    // Y
  Helpfulness label = Helpfulness::NotHelpful;
};

// Corpus file grammar (tab-separated, one record per line, '#' comments and
// blank lines allowed):
//
//   record := id TAB X TAB Y TAB text TAB clause (TAB clause)*
//   clause := clause_text '|' label (',' label)*
//
// Labels use the exact names MajorClaim|Claim|Premise|PSIC|Background|
// Recommendation|NonArgumentative. Clause final labels are derived by
// majority_vote, the review label by derive_label.
std::vector<AnnotatedReview> parse_corpus(std::string_view document);
std::vector<AnnotatedReview> load_corpus(const std::string& path);
void write_corpus(std::ostream& out, std::span<const AnnotatedReview> reviews);

// Fleiss' kappa over an item x category count table. Every row must sum to
// the same rater count n >= 2. Returns NaN when expected agreement is 1
// (all raters always pick the same single category).
double fleiss_kappa(const std::vector<std::vector<std::uint32_t>>& table);

struct ArgumentComponent {
  ComponentType component_type = ComponentType::NonArgumentative;
  std::uint32_t first_clause = 0;  // 0-based, inclusive
  std::uint32_t last_clause = 0;   // 0-based, inclusive
  std::uint32_t token_count = 0;
  std::uint32_t letter_count = 0;
  double position = 0.0;  // (first_clause + 1) / total clause count, in (0, 1]
};

// Groups clauses into typed components. With merge_adjacent (the default),
// maximal runs of consecutive clauses sharing a final label become one
// component; otherwise each clause is its own component.
std::vector<ArgumentComponent> assemble_components(const AnnotatedReview& review,
                                                   bool merge_adjacent = true);

struct TypeStatistics {
  std::uint64_t clause_count = 0;
  std::uint64_t merged_component_count = 0;
  std::uint64_t unmerged_component_count = 0;  // equals clause_count
  double kappa = 0.0;  // one-vs-rest Fleiss' kappa; NaN when undefined
};

struct CorpusStatistics {
  std::array<TypeStatistics, kComponentTypeCount> per_type{};
  double overall_kappa = 0.0;  // all seven categories; NaN when undefined
  std::size_t review_count = 0;
  std::size_t clause_count = 0;
  std::size_t helpful_count = 0;
  // Present when every clause carries the same number of annotator labels
  // and that number is >= 2; kappas are NaN otherwise.
  std::optional<std::uint32_t> annotator_count;
};

CorpusStatistics corpus_statistics(std::span<const AnnotatedReview> reviews);

}  // namespace argrev
