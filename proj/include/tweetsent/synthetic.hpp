#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tweetsent/corpus.hpp"

namespace tweetsent {

/// Seeded generator for tweet-like posts about energy bills. Opinion words
/// are planted from the bundled lexicon so that lexicon labeling yields a
/// realistic, imbalanced two-class corpus.
struct SyntheticConfig {
  std::size_t n_docs = 2000;
  std::uint64_t seed = 20221017;
  std::size_t min_words = 4;   // topic words per post
  std::size_t max_words = 24;
  double complaint_share = 0.6;  // posts in the bills-and-prices mood
  double theme_strength = 0.2;   // chance a topic word comes from the mood's theme
};

Corpus generate_synthetic_corpus(const SyntheticConfig& config = {});

/// Opinion words the generator plants; every entry appears in the bundled
/// lexicon files.
const std::vector<std::string>& synthetic_positive_words();
const std::vector<std::string>& synthetic_negative_words();

}  // namespace tweetsent
