#include "argrev/synth.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>

#include "argrev/textproc.hpp"

namespace argrev {

namespace {

// Short filler words. A few of them appear in the builtin lexicons so the
// emotion/semantic counts are exercised without carrying label information.
constexpr const char* kShortWords[] = {
    "book",   "story",  "plot",   "page",   "cover",  "print",  "words",
    "style",  "tone",   "theme",  "scene",  "series", "volume", "detail",
    "reader", "writer", "facts",  "ideas",  "point",  "parts",  "lines",
    "texts",  "notes",  "index",  "title",  "prose",  "draft",  "genre",
    "good",   "great",  "bad",    "boring", "useful", "think",  "know",
    "because","many",   "pages",  "recommend", "interesting"};

constexpr const char* kLongWords[] = {
    "characters",  "paragraphs",  "description", "vocabulary",  "narrative",
    "structure",   "publisher",   "chapters",    "storyline",   "references",
    "illustrations", "typography", "footnotes",   "appendices",  "bibliography",
    "introduction", "conclusion", "translation", "hardcover",   "paperback",
    "protagonist", "development", "atmosphere",  "background",  "perspective",
    "information", "experience",  "impression",  "collection",  "edition"};

constexpr std::size_t kShortCount = std::size(kShortWords);
constexpr std::size_t kLongCount = std::size(kLongWords);

std::string make_clause(std::uint32_t tokens, double long_fraction, Rng& rng) {
  std::string text;
  for (std::uint32_t t = 0; t < tokens; ++t) {
    if (t) text += ' ';
    if (rng.chance(long_fraction))
      text += kLongWords[rng.below(kLongCount)];
    else
      text += kShortWords[rng.below(kShortCount)];
  }
  return text;
}

// Split `total` into `parts` positive counts that differ by at most one.
std::vector<std::uint32_t> split_evenly(std::uint32_t total, std::uint32_t parts) {
  std::vector<std::uint32_t> out(parts, total / parts);
  for (std::uint32_t i = 0; i < total % parts; ++i) ++out[i];
  return out;
}

ComponentType random_other_type(ComponentType type, Rng& rng) {
  const auto offset = 1 + rng.below(kComponentTypeCount - 1);
  return static_cast<ComponentType>(
      (static_cast<std::uint64_t>(type) + offset) % kComponentTypeCount);
}

}  // namespace

void SyntheticSpec::validate() const {
  if (review_count == 0)
    throw std::invalid_argument("SyntheticSpec: review_count must be positive");
  if (strength < 0.0 || strength > 1.0)
    throw std::invalid_argument("SyntheticSpec: strength must be in [0, 1]");
  if (annotator_noise < 0.0 || annotator_noise > 1.0)
    throw std::invalid_argument("SyntheticSpec: annotator_noise must be in [0, 1]");
  if (min_clauses < 2)
    throw std::invalid_argument("SyntheticSpec: need at least two clauses");
  if (max_clauses < min_clauses || max_clauses > 200)
    throw std::invalid_argument("SyntheticSpec: bad clause range");
  double sum = 0.0;
  for (double p : type_probabilities) {
    if (p < 0.0)
      throw std::invalid_argument("SyntheticSpec: negative type probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-6)
    throw std::invalid_argument("SyntheticSpec: type probabilities must sum to 1");
}

std::vector<AnnotatedReview> generate_corpus(const SyntheticSpec& spec, Rng& rng) {
  spec.validate();
  std::vector<AnnotatedReview> reviews;
  reviews.reserve(spec.review_count);

  for (std::uint32_t r = 0; r < spec.review_count; ++r) {
    // Planted signal: the premise/claim token ratio falls in a high or a low
    // band. The total premise+claim budget is drawn independently of the
    // band so review length itself carries no signal.
    const bool high = rng.chance(0.5);
    const double ratio = high ? rng.uniform(1.25, 2.5) : rng.uniform(0.3, 0.8);
    const auto budget = static_cast<std::uint32_t>(rng.range(40, 80));
    auto claim_total = static_cast<std::uint32_t>(
        std::max(5.0, std::round(budget / (1.0 + ratio))));
    claim_total = std::min(claim_total, budget - 5);
    const std::uint32_t premise_total = budget - claim_total;

    const auto clause_count =
        static_cast<std::uint32_t>(rng.range(spec.min_clauses, spec.max_clauses));
    std::vector<ComponentType> types{ComponentType::Claim, ComponentType::Premise};
    while (types.size() < clause_count)
      types.push_back(
          static_cast<ComponentType>(rng.categorical(spec.type_probabilities)));
    rng.shuffle(types);  // clause order carries no position signal

    std::uint32_t claim_clauses = 0, premise_clauses = 0;
    for (ComponentType type : types) {
      if (type == ComponentType::Claim) ++claim_clauses;
      if (type == ComponentType::Premise) ++premise_clauses;
    }
    // Every clause gets at least one token.
    const auto claim_split =
        split_evenly(std::max(claim_total, claim_clauses), claim_clauses);
    const auto premise_split =
        split_evenly(std::max(premise_total, premise_clauses), premise_clauses);

    // Per-type long-word fractions, independent across types and reviews, so
    // letter totals track token totals only loosely.
    double long_fraction[kComponentTypeCount];
    for (double& f : long_fraction) f = rng.uniform(0.05, 0.6);

    AnnotatedReview review;
    review.id = "synth-" + std::to_string(r);
    std::uint32_t next_claim = 0, next_premise = 0;
    for (ComponentType type : types) {
      std::uint32_t tokens;
      if (type == ComponentType::Claim)
        tokens = claim_split[next_claim++];
      else if (type == ComponentType::Premise)
        tokens = premise_split[next_premise++];
      else
        tokens = static_cast<std::uint32_t>(rng.range(4, 12));

      ClauseAnnotation clause;
      clause.text = make_clause(
          tokens, long_fraction[static_cast<std::size_t>(type)], rng);
      clause.annotator_labels.assign(3, type);
      for (std::size_t a = 1; a < 3; ++a)
        if (rng.chance(spec.annotator_noise))
          clause.annotator_labels[a] = random_other_type(type, rng);
      clause.final_label = majority_vote(clause.annotator_labels);
      review.clauses.push_back(std::move(clause));
    }

    // The label follows the post-annotation signal with probability
    // `strength`; otherwise a fair coin.
    std::uint64_t voted_premise = 0, voted_claim = 0;
    for (const auto& clause : review.clauses) {
      const std::size_t tokens = token_count(clause.text);
      if (clause.final_label == ComponentType::Premise) voted_premise += tokens;
      if (clause.final_label == ComponentType::Claim) voted_claim += tokens;
    }
    const bool signal =
        voted_claim > 0 && static_cast<double>(voted_premise) /
                                   static_cast<double>(voted_claim) >=
                               1.0;
    const bool helpful = rng.chance(spec.strength) ? signal : rng.chance(0.5);

    review.total_votes = static_cast<std::uint64_t>(rng.range(4, 40));
    const std::uint64_t cut = (3 * review.total_votes + 3) / 4;  // ceil(3Y/4)
    if (helpful)
      review.helpful_votes = static_cast<std::uint64_t>(
          rng.range(static_cast<std::int64_t>(cut),
                    static_cast<std::int64_t>(review.total_votes)));
    else
      review.helpful_votes = static_cast<std::uint64_t>(
          rng.range(0, static_cast<std::int64_t>(cut) - 1));
    review.label = derive_label(review.helpful_votes, review.total_votes);

    // Review text: clauses grouped into 1-3 clause sentences with varied
    // terminators, so the surface statistics behave like prose.
    std::string text;
    std::size_t clause_index = 0;
    while (clause_index < review.clauses.size()) {
      const std::size_t group = std::min<std::size_t>(
          1 + rng.below(3), review.clauses.size() - clause_index);
      if (!text.empty()) text += ' ';
      for (std::size_t g = 0; g < group; ++g) {
        if (g) text += ", ";
        text += review.clauses[clause_index + g].text;
      }
      const double u = rng.unit();
      text += u < 0.12 ? '!' : (u < 0.24 ? '?' : '.');
      clause_index += group;
    }
    review.text = std::move(text);
    reviews.push_back(std::move(review));
  }
  return reviews;
}

}  // namespace argrev
