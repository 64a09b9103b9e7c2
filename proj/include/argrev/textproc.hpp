#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace argrev {

struct Token {
  std::string surface;  // lowercased, non-empty, no whitespace
  bool is_stopword = false;
};

class StopwordSet {
 public:
  StopwordSet() = default;
  explicit StopwordSet(std::vector<std::string> words);

  // The list shipped with the library (~150 common English function words).
  static const StopwordSet& default_english();

  // File format: one lowercase word per line, UTF-8, '#' starts a comment.
  static StopwordSet parse(std::string_view content);
  static StopwordSet load(const std::string& path);

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Splits on terminal punctuation (. ! ?) followed by whitespace or end of
// text. The terminator stays attached to its sentence. Empty segments are
// dropped.
std::vector<std::string> segment_sentences(std::string_view text);

// Splits a sentence into clauses at commas, semicolons, colons and dashes.
// Pieces are trimmed; empty pieces are dropped.
std::vector<std::string> segment_clauses(std::string_view sentence);

// Lowercases and splits on any non-alphanumeric byte. Numeric-only tokens are
// kept. Stopword flags come from the given list.
std::vector<Token> tokenize(std::string_view text, const StopwordSet& stopwords);
std::vector<Token> tokenize(std::string_view text);

std::size_t token_count(std::string_view text);

// Number of alphabetic characters; digits, punctuation and whitespace are
// excluded.
std::size_t letter_count(std::string_view text);

struct SegmentedText {
  std::vector<std::string> sentences;
  std::vector<std::string> clauses;  // text order; each belongs to one sentence
  std::vector<Token> tokens;
};

SegmentedText segment_text(std::string_view text, const StopwordSet& stopwords);

}  // namespace argrev
