#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "argrev/corpus.hpp"
#include "argrev/synth.hpp"
#include "argrev/textproc.hpp"

using namespace argrev;

TEST_CASE("SyntheticSpec::validate rejects bad parameters") {
  SyntheticSpec ok;
  CHECK_NOTHROW(ok.validate());

  SyntheticSpec spec;
  spec.review_count = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

  spec = SyntheticSpec{};
  spec.strength = 1.5;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

  spec = SyntheticSpec{};
  spec.annotator_noise = -0.1;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

  spec = SyntheticSpec{};
  spec.min_clauses = 1;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

  spec = SyntheticSpec{};
  spec.max_clauses = spec.min_clauses - 1;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

  spec = SyntheticSpec{};
  spec.type_probabilities[0] = 0.9;  // no longer sums to 1
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

  spec = SyntheticSpec{};
  spec.type_probabilities = {2.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("generate_corpus honours its parameters") {
  SyntheticSpec spec;
  spec.review_count = 50;
  spec.min_clauses = 5;
  spec.max_clauses = 9;
  Rng rng(17);
  auto reviews = generate_corpus(spec, rng);
  REQUIRE(reviews.size() == 50);

  std::set<std::string> ids;
  for (const auto& review : reviews) {
    ids.insert(review.id);
    CHECK(review.clauses.size() >= 5);
    CHECK(review.clauses.size() <= 9);
    CHECK(!review.text.empty());
    CHECK(review.total_votes >= 4);
    CHECK(review.helpful_votes <= review.total_votes);
    CHECK(derive_label(review.helpful_votes, review.total_votes) == review.label);

    bool has_claim = false, has_premise = false;
    for (const auto& clause : review.clauses) {
      CHECK(!clause.text.empty());
      CHECK(token_count(clause.text) >= 1);
      REQUIRE(clause.annotator_labels.size() == 3);
      has_claim |= clause.final_label == ComponentType::Claim;
      has_premise |= clause.final_label == ComponentType::Premise;
    }
    CHECK(has_claim);
    CHECK(has_premise);
  }
  CHECK(ids.size() == 50);  // unique ids
  CHECK(reviews[0].id == "synth-0");
}

TEST_CASE("without annotator noise agreement is perfect") {
  SyntheticSpec spec;
  spec.review_count = 40;
  spec.annotator_noise = 0.0;
  Rng rng(23);
  auto reviews = generate_corpus(spec, rng);

  for (const auto& review : reviews)
    for (const auto& clause : review.clauses)
      for (auto label : clause.annotator_labels)
        CHECK(label == clause.final_label);

  auto stats = corpus_statistics(reviews);
  REQUIRE(stats.annotator_count.has_value());
  CHECK(*stats.annotator_count == 3);
  CHECK(stats.overall_kappa == 1.0);
}

TEST_CASE("annotator noise lowers agreement") {
  SyntheticSpec spec;
  spec.review_count = 60;
  spec.annotator_noise = 0.4;
  Rng rng(29);
  auto reviews = generate_corpus(spec, rng);
  auto stats = corpus_statistics(reviews);
  CHECK(stats.overall_kappa < 0.9);
  CHECK(stats.overall_kappa > 0.0);
}

TEST_CASE("at full strength the label equals the planted signal") {
  SyntheticSpec spec;
  spec.review_count = 120;
  spec.strength = 1.0;
  spec.annotator_noise = 0.0;
  Rng rng(31);
  auto reviews = generate_corpus(spec, rng);

  int helpful = 0;
  for (const auto& review : reviews) {
    std::uint64_t premise_tokens = 0, claim_tokens = 0;
    for (const auto& clause : review.clauses) {
      if (clause.final_label == ComponentType::Premise)
        premise_tokens += token_count(clause.text);
      if (clause.final_label == ComponentType::Claim)
        claim_tokens += token_count(clause.text);
    }
    REQUIRE(claim_tokens > 0);
    const bool signal = static_cast<double>(premise_tokens) >=
                        static_cast<double>(claim_tokens);
    CHECK((review.label == Helpfulness::Helpful) == signal);
    helpful += review.label == Helpfulness::Helpful;
  }
  // The high/low ratio bands keep both classes common.
  CHECK(helpful > 30);
  CHECK(helpful < 90);
}

TEST_CASE("generation is deterministic in the seed") {
  SyntheticSpec spec;
  spec.review_count = 20;

  Rng a(5), b(5), c(6);
  auto first = generate_corpus(spec, a);
  auto second = generate_corpus(spec, b);
  auto third = generate_corpus(spec, c);

  std::ostringstream out_first, out_second, out_third;
  write_corpus(out_first, first);
  write_corpus(out_second, second);
  write_corpus(out_third, third);
  CHECK(out_first.str() == out_second.str());
  CHECK(out_first.str() != out_third.str());
}

TEST_CASE("synthetic corpora survive the corpus file format") {
  SyntheticSpec spec;
  spec.review_count = 30;
  spec.annotator_noise = 0.2;
  Rng rng(37);
  auto reviews = generate_corpus(spec, rng);

  std::ostringstream out;
  write_corpus(out, reviews);
  auto reparsed = parse_corpus(out.str());

  REQUIRE(reparsed.size() == reviews.size());
  for (std::size_t i = 0; i < reviews.size(); ++i) {
    CHECK(reparsed[i].id == reviews[i].id);
    CHECK(reparsed[i].label == reviews[i].label);
    CHECK(reparsed[i].text == reviews[i].text);
    REQUIRE(reparsed[i].clauses.size() == reviews[i].clauses.size());
    for (std::size_t c = 0; c < reviews[i].clauses.size(); ++c) {
      CHECK(reparsed[i].clauses[c].text == reviews[i].clauses[c].text);
      CHECK(reparsed[i].clauses[c].annotator_labels ==
            reviews[i].clauses[c].annotator_labels);
      CHECK(reparsed[i].clauses[c].final_label ==
            reviews[i].clauses[c].final_label);
    }
  }
}

TEST_CASE("reviews mix short and long vocabulary") {
  SyntheticSpec spec;
  spec.review_count = 25;
  Rng rng(41);
  auto reviews = generate_corpus(spec, rng);

  std::size_t short_tokens = 0, long_tokens = 0;
  for (const auto& review : reviews)
    for (const auto& token : tokenize(review.text))
      (token.surface.size() > 9 ? long_tokens : short_tokens) += 1;
  CHECK(short_tokens > 0);
  CHECK(long_tokens > 0);
}
