#include "argrev/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "argrev/textproc.hpp"

namespace argrev {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, end - start));
    start = end + 1;
  }
}

std::uint64_t parse_count(std::string_view field, std::size_t line,
                          const char* what) {
  std::uint64_t value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty())
    throw ParseError(line, std::string(what) + " is not a non-negative integer: '" +
                               std::string(field) + "'");
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

Helpfulness derive_label(std::uint64_t helpful_votes, std::uint64_t total_votes) {
  if (total_votes == 0)
    throw std::invalid_argument("derive_label: total_votes must be positive");
  if (helpful_votes > total_votes)
    throw std::invalid_argument("derive_label: helpful_votes exceeds total_votes");
  return 4 * helpful_votes >= 3 * total_votes ? Helpfulness::Helpful
                                              : Helpfulness::NotHelpful;
}

ComponentType majority_vote(std::span<const ComponentType> labels) {
  if (labels.empty())
    throw std::invalid_argument("majority_vote: no labels");
  std::array<std::uint32_t, kComponentTypeCount> counts{};
  for (ComponentType label : labels)
    ++counts[static_cast<std::size_t>(label)];
  std::size_t best = 0;
  for (std::size_t t = 1; t < kComponentTypeCount; ++t)
    if (counts[t] > counts[best]) best = t;
  return static_cast<ComponentType>(best);
}

std::vector<AnnotatedReview> parse_corpus(std::string_view document) {
  std::vector<AnnotatedReview> reviews;
  std::size_t line_no = 0;
  for (std::string_view line : split(document, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || trim(line).front() == '#') continue;

    auto fields = split(line, '\t');
    if (fields.size() < 5)
      throw ParseError(line_no, "expected id, votes, total, text and at least "
                                "one clause (tab-separated)");

    AnnotatedReview review;
    review.id = std::string(fields[0]);
    if (review.id.empty()) throw ParseError(line_no, "empty review id");
    review.helpful_votes = parse_count(fields[1], line_no, "helpful vote count");
    review.total_votes = parse_count(fields[2], line_no, "total vote count");
    if (review.total_votes == 0)
      throw ParseError(line_no,
                       "review '" + review.id + "': total vote count must be positive");
    if (review.helpful_votes > review.total_votes)
      throw ParseError(line_no,
                       "review '" + review.id + "': helpful votes exceed total votes");
    review.label = derive_label(review.helpful_votes, review.total_votes);
    review.text = std::string(fields[3]);

    for (std::size_t f = 4; f < fields.size(); ++f) {
      std::string_view field = fields[f];
      const std::size_t bar = field.rfind('|');
      if (bar == std::string_view::npos)
        throw ParseError(line_no, "clause is missing '|labels'");
      ClauseAnnotation clause;
      clause.text = std::string(trim(field.substr(0, bar)));
      if (clause.text.empty()) throw ParseError(line_no, "empty clause text");
      for (std::string_view name : split(field.substr(bar + 1), ',')) {
        name = trim(name);
        auto type = component_type_from_string(name);
        if (!type)
          throw ParseError(line_no,
                           "unknown component type: '" + std::string(name) + "'");
        clause.annotator_labels.push_back(*type);
      }
      clause.final_label = majority_vote(clause.annotator_labels);
      review.clauses.push_back(std::move(clause));
    }
    reviews.push_back(std::move(review));
  }
  return reviews;
}

std::vector<AnnotatedReview> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str());
}

void write_corpus(std::ostream& out, std::span<const AnnotatedReview> reviews) {
  auto check_field = [](std::string_view value, const char* what) {
    if (value.find('\t') != std::string_view::npos ||
        value.find('\n') != std::string_view::npos)
      throw std::invalid_argument(std::string(what) +
                                  " must not contain tabs or newlines");
  };
  for (const auto& review : reviews) {
    check_field(review.id, "review id");
    check_field(review.text, "review text");
    out << review.id << '\t' << review.helpful_votes << '\t'
        << review.total_votes << '\t' << review.text;
    for (const auto& clause : review.clauses) {
      check_field(clause.text, "clause text");
      if (clause.text.find('|') != std::string_view::npos)
        throw std::invalid_argument("clause text must not contain '|'");
      out << '\t' << clause.text << '|';
      for (std::size_t i = 0; i < clause.annotator_labels.size(); ++i) {
        if (i) out << ',';
        out << to_string(clause.annotator_labels[i]);
      }
    }
    out << '\n';
  }
}

double fleiss_kappa(const std::vector<std::vector<std::uint32_t>>& table) {
  if (table.empty())
    throw std::invalid_argument("fleiss_kappa: empty table");
  const std::size_t categories = table[0].size();
  if (categories == 0)
    throw std::invalid_argument("fleiss_kappa: no categories");
  std::uint64_t raters = 0;
  for (std::uint32_t v : table[0]) raters += v;
  if (raters < 2)
    throw std::invalid_argument("fleiss_kappa: need at least two raters");

  const auto items = static_cast<double>(table.size());
  double pbar_sum = 0.0;
  std::vector<std::uint64_t> category_totals(categories, 0);
  for (const auto& row : table) {
    if (row.size() != categories)
      throw std::invalid_argument("fleiss_kappa: ragged table");
    std::uint64_t row_sum = 0, same = 0;
    for (std::size_t j = 0; j < categories; ++j) {
      row_sum += row[j];
      same += static_cast<std::uint64_t>(row[j]) * row[j];
      category_totals[j] += row[j];
    }
    if (row_sum != raters)
      throw std::invalid_argument("fleiss_kappa: rows must share one rater count");
    pbar_sum += static_cast<double>(same - raters) /
                static_cast<double>(raters * (raters - 1));
  }
  const double pbar = pbar_sum / items;

  double pe = 0.0;
  for (std::uint64_t total : category_totals) {
    const double p = static_cast<double>(total) / (items * static_cast<double>(raters));
    pe += p * p;
  }
  if (pe == 1.0) return std::numeric_limits<double>::quiet_NaN();
  return (pbar - pe) / (1.0 - pe);
}

std::vector<ArgumentComponent> assemble_components(const AnnotatedReview& review,
                                                   bool merge_adjacent) {
  std::vector<ArgumentComponent> components;
  const std::size_t total = review.clauses.size();
  if (total == 0) return components;

  std::size_t start = 0;
  while (start < total) {
    std::size_t end = start + 1;
    if (merge_adjacent) {
      while (end < total && review.clauses[end].final_label ==
                                review.clauses[start].final_label)
        ++end;
    }
    ArgumentComponent component;
    component.component_type = review.clauses[start].final_label;
    component.first_clause = static_cast<std::uint32_t>(start);
    component.last_clause = static_cast<std::uint32_t>(end - 1);
    std::size_t tokens = 0, letters = 0;
    for (std::size_t i = start; i < end; ++i) {
      tokens += token_count(review.clauses[i].text);
      letters += letter_count(review.clauses[i].text);
    }
    component.token_count = static_cast<std::uint32_t>(tokens);
    component.letter_count = static_cast<std::uint32_t>(letters);
    component.position =
        static_cast<double>(start + 1) / static_cast<double>(total);
    components.push_back(component);
    start = end;
  }
  return components;
}

CorpusStatistics corpus_statistics(std::span<const AnnotatedReview> reviews) {
  CorpusStatistics stats;
  stats.review_count = reviews.size();

  std::optional<std::uint32_t> annotators;
  bool uniform = true;
  for (const auto& review : reviews) {
    if (review.label == Helpfulness::Helpful) ++stats.helpful_count;
    stats.clause_count += review.clauses.size();
    for (const auto& clause : review.clauses) {
      const auto n = static_cast<std::uint32_t>(clause.annotator_labels.size());
      if (!annotators)
        annotators = n;
      else if (*annotators != n)
        uniform = false;
      ++stats.per_type[static_cast<std::size_t>(clause.final_label)].clause_count;
    }
    for (const auto& component : assemble_components(review, true))
      ++stats.per_type[static_cast<std::size_t>(component.component_type)]
            .merged_component_count;
  }
  for (auto& entry : stats.per_type)
    entry.unmerged_component_count = entry.clause_count;

  if (uniform && annotators && *annotators >= 2 && stats.clause_count > 0) {
    stats.annotator_count = annotators;
    std::vector<std::vector<std::uint32_t>> table;
    table.reserve(stats.clause_count);
    for (const auto& review : reviews) {
      for (const auto& clause : review.clauses) {
        std::vector<std::uint32_t> row(kComponentTypeCount, 0);
        for (ComponentType label : clause.annotator_labels)
          ++row[static_cast<std::size_t>(label)];
        table.push_back(std::move(row));
      }
    }
    stats.overall_kappa = fleiss_kappa(table);
    for (std::size_t t = 0; t < kComponentTypeCount; ++t) {
      std::vector<std::vector<std::uint32_t>> binary;
      binary.reserve(table.size());
      for (const auto& row : table) {
        std::uint32_t rest = 0;
        for (std::size_t j = 0; j < kComponentTypeCount; ++j)
          if (j != t) rest += row[j];
        binary.push_back({row[t], rest});
      }
      stats.per_type[t].kappa = fleiss_kappa(binary);
    }
  } else {
    stats.overall_kappa = std::numeric_limits<double>::quiet_NaN();
    for (auto& entry : stats.per_type)
      entry.kappa = std::numeric_limits<double>::quiet_NaN();
  }
  return stats;
}

}  // namespace argrev
