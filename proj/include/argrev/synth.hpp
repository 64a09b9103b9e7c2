#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "argrev/component_type.hpp"
#include "argrev/corpus.hpp"
#include "argrev/random.hpp"

namespace argrev {

// Synthetic review generator. Reviews carry a planted signal in the
// premise/claim token-budget ratio: each review draws the ratio from a high
// band or a low band, annotators label the clauses, and the helpfulness label
// follows the majority-voted ratio (threshold 1.0) with probability
// `strength`, otherwise a fair coin. Vote counts are drawn consistent with
// the label. Clause order is shuffled so positions carry no signal, and each
// review draws its own long-word fraction so letter totals track token totals
// only loosely.
struct SyntheticSpec {
  std::uint32_t review_count = 200;
  double strength = 0.8;        // P(label follows the planted signal)
  double annotator_noise = 0.0; // P(a secondary annotator flips a clause label)
  std::uint32_t min_clauses = 4;
  std::uint32_t max_clauses = 12;
  // Type distribution of the clauses beyond the mandatory Claim and Premise;
  // canonical type order, must sum to 1.
  std::array<double, kComponentTypeCount> type_probabilities = {
      1.0 / 11, 2.0 / 11, 3.0 / 11, 1.0 / 11, 1.0 / 11, 1.0 / 11, 2.0 / 11};

  void validate() const;  // throws std::invalid_argument
};

std::vector<AnnotatedReview> generate_corpus(const SyntheticSpec& spec, Rng& rng);

}  // namespace argrev
