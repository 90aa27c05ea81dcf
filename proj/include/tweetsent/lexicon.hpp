#pragma once

#include <cstddef>
#include <istream>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "tweetsent/corpus.hpp"
#include "tweetsent/text.hpp"

namespace tweetsent {

/// Positive and negative opinion word sets. Entries are lowercase; a word
/// listed on both sides is dropped from both and counted as a conflict.
class OpinionLexicon {
 public:
  OpinionLexicon() = default;
  OpinionLexicon(const std::vector<std::string>& positive, const std::vector<std::string>& negative);

  bool is_positive(const std::string& token) const { return positive_.count(token) != 0; }
  bool is_negative(const std::string& token) const { return negative_.count(token) != 0; }

  const std::unordered_set<std::string>& positive() const { return positive_; }
  const std::unordered_set<std::string>& negative() const { return negative_; }
  std::size_t conflicts() const { return conflicts_; }
  std::size_t size() const { return positive_.size() + negative_.size(); }

  /// Lexicon whose entries went through the Porter stemmer, so it can be
  /// matched against preprocessed tokens. Stems shared by both sides
  /// are dropped as conflicts.
  OpinionLexicon stemmed() const;

 private:
  std::unordered_set<std::string> positive_;
  std::unordered_set<std::string> negative_;
  std::size_t conflicts_ = 0;
};

/// Word-per-line lists; ';' comment lines and blank lines are skipped.
OpinionLexicon load_lexicon(std::istream& positive, std::istream& negative);

struct SentimentScore {
  std::size_t pos_count = 0;
  std::size_t neg_count = 0;
  std::size_t token_count = 0;
  /// (pos_count - neg_count) / max(1, token_count)
  double score = 0.0;
};

/// Scoring strategy. The counting rule below is the default; other rule
/// engines plug in here without touching labeling or persistence.
class SentimentScorer {
 public:
  virtual ~SentimentScorer() = default;
  virtual SentimentScore score(const TokenSequence& tokens) const = 0;
};

class LexiconCountScorer final : public SentimentScorer {
 public:
  explicit LexiconCountScorer(OpinionLexicon lexicon) : lexicon_(std::move(lexicon)) {}
  SentimentScore score(const TokenSequence& tokens) const override;
  const OpinionLexicon& lexicon() const { return lexicon_; }

 private:
  OpinionLexicon lexicon_;
};

SentimentScore polarity_score(const TokenSequence& tokens, const OpinionLexicon& lexicon);

inline constexpr double kDefaultPolarityThreshold = 0.1;

/// Positive iff score >= threshold.
SentimentLabel assign_label(const SentimentScore& score, double threshold = kDefaultPolarityThreshold);
SentimentLabel assign_label(double score, double threshold = kDefaultPolarityThreshold);

struct LabelingResult {
  std::vector<LabeledDocument> docs;
  std::size_t positive = 0;
  std::size_t negative = 0;
};

/// Preprocesses every record and labels it with `scorer`.
LabelingResult label_corpus(const Corpus& corpus, const CleaningConfig& cleaning,
                            const StopwordList& stopwords, const SentimentScorer& scorer,
                            double threshold = kDefaultPolarityThreshold,
                            std::size_t workers = 1);

}  // namespace tweetsent
