#include "argrev/textproc.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace argrev {

namespace {

bool is_alnum(unsigned char ch) { return std::isalnum(ch) != 0; }
bool is_alpha(unsigned char ch) { return std::isalpha(ch) != 0; }
bool is_space(unsigned char ch) { return std::isspace(ch) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

StopwordSet::StopwordSet(std::vector<std::string> words) {
  for (auto& w : words) words_.insert(std::move(w));
}

StopwordSet StopwordSet::parse(std::string_view content) {
  std::vector<std::string> words;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(start, end - start);
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) words.emplace_back(line);
    if (end == content.size()) break;
  }
  return StopwordSet(std::move(words));
}

StopwordSet StopwordSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open stopword file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

bool StopwordSet::contains(std::string_view word) const {
  return words_.find(std::string(word)) != words_.end();
}

std::vector<std::string> segment_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch != '.' && ch != '!' && ch != '?') continue;
    const bool at_end = i + 1 == text.size();
    if (!at_end && !is_space(static_cast<unsigned char>(text[i + 1]))) continue;
    std::string_view piece = trim(text.substr(start, i - start + 1));
    if (!piece.empty()) sentences.emplace_back(piece);
    start = i + 1;
  }
  if (start < text.size()) {
    std::string_view piece = trim(text.substr(start));
    if (!piece.empty()) sentences.emplace_back(piece);
  }
  return sentences;
}

std::vector<std::string> segment_clauses(std::string_view sentence) {
  std::vector<std::string> clauses;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= sentence.size(); ++i) {
    const bool boundary =
        i == sentence.size() || sentence[i] == ',' || sentence[i] == ';' ||
        sentence[i] == ':' ||
        (sentence[i] == '-' && i + 1 < sentence.size() && sentence[i + 1] == '-');
    if (!boundary) continue;
    std::string_view piece = trim(sentence.substr(start, i - start));
    if (!piece.empty()) clauses.emplace_back(piece);
    if (i < sentence.size() && sentence[i] == '-') ++i;  // skip "--"
    start = i + 1;
  }
  return clauses;
}

std::vector<Token> tokenize(std::string_view text, const StopwordSet& stopwords) {
  std::vector<Token> tokens;
  std::string current;
  auto flush = [&] {
    if (current.empty()) return;
    tokens.push_back({current, stopwords.contains(current)});
    current.clear();
  };
  for (char ch : text) {
    const auto uch = static_cast<unsigned char>(ch);
    if (is_alnum(uch))
      current.push_back(static_cast<char>(std::tolower(uch)));
    else
      flush();
  }
  flush();
  return tokens;
}

std::vector<Token> tokenize(std::string_view text) {
  return tokenize(text, StopwordSet());
}

std::size_t token_count(std::string_view text) {
  std::size_t count = 0;
  bool in_token = false;
  for (char ch : text) {
    const bool alnum = is_alnum(static_cast<unsigned char>(ch));
    if (alnum && !in_token) ++count;
    in_token = alnum;
  }
  return count;
}

std::size_t letter_count(std::string_view text) {
  std::size_t count = 0;
  for (char ch : text)
    if (is_alpha(static_cast<unsigned char>(ch))) ++count;
  return count;
}

SegmentedText segment_text(std::string_view text, const StopwordSet& stopwords) {
  SegmentedText result;
  result.sentences = segment_sentences(text);
  for (const auto& sentence : result.sentences)
    for (auto& clause : segment_clauses(sentence))
      result.clauses.push_back(std::move(clause));
  result.tokens = tokenize(text, stopwords);
  return result;
}

}  // namespace argrev
