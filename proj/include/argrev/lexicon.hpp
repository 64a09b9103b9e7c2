#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace argrev {

// Word-to-category dictionary backing the emotion and semantic feature
// families. File format: one category per line,
//
//   CATEGORY<TAB>word1,word2,...
//
// UTF-8, lowercase words, '#' starts a comment. A word may appear under
// several categories and is then mapped to all of them.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon parse(std::string_view content);
  static Lexicon load(const std::string& path);

  // Small dictionaries shipped with the library so the pipeline runs out of
  // the box; real dictionaries are supplied via configuration in the same
  // file format.
  static const Lexicon& builtin_emotion();
  static const Lexicon& builtin_semantic();

  std::size_t category_count() const { return categories_.size(); }
  std::string_view category_name(std::size_t index) const {
    return categories_[index];
  }
  std::span<const std::string> categories() const { return categories_; }

  // Category indices for a (lowercase) word; empty when unmapped.
  std::span<const std::uint32_t> categories_of(std::string_view word) const;

  std::size_t word_count() const { return word_to_categories_.size(); }

 private:
  std::vector<std::string> categories_;
  std::unordered_map<std::string, std::vector<std::uint32_t>> word_to_categories_;
};

}  // namespace argrev
