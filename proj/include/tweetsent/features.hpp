#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tweetsent/text.hpp"

namespace tweetsent {

struct NgramConfig {
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  std::size_t min_df = 1;

  /// Throws Config unless 1 <= n_min <= n_max <= 3 and min_df >= 1.
  void validate() const;
};

/// All contiguous n-token windows for n in [n_min, n_max], joined by a single
/// space; grouped by n, then by position.
std::vector<std::string> extract_ngrams(const TokenSequence& tokens, const NgramConfig& config);

class Vocabulary {
 public:
  Vocabulary() = default;

  std::size_t size() const { return terms_.size(); }
  std::size_t n_docs() const { return n_docs_; }
  const NgramConfig& config() const { return config_; }

  const std::vector<std::string>& terms() const { return terms_; }
  const std::vector<std::size_t>& document_frequency() const { return df_; }

  /// Index of `term`, or npos.
  std::size_t index_of(std::string_view term) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Terms of `tokens` under this vocabulary's n-gram configuration.
  std::vector<std::string> terms_of(const TokenSequence& tokens) const {
    return extract_ngrams(tokens, config_);
  }

 private:
  friend Vocabulary build_vocabulary(const std::vector<TokenSequence>&, const NgramConfig&);
  friend class TfidfModel;

  void add(std::string term, std::size_t df);

  std::vector<std::string> terms_;
  std::vector<std::size_t> df_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t n_docs_ = 0;
  NgramConfig config_;
};

/// Terms with document frequency >= min_df, indexed in first-occurrence order.
Vocabulary build_vocabulary(const std::vector<TokenSequence>& docs, const NgramConfig& config);

struct SparseEntry {
  std::size_t index;
  double value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Entries sorted by strictly increasing index, no explicit zeros.
using SparseVector = std::vector<SparseEntry>;

struct FeatureMatrix {
  std::vector<SparseVector> rows;
  std::size_t n_cols = 0;

  std::size_t n_rows() const { return rows.size(); }
};

/// count(t) / len(terms) for in-vocabulary t. Out-of-vocabulary terms count
/// toward the length only.
SparseVector term_frequency(const std::vector<std::string>& terms, const Vocabulary& vocab);

/// Raw in-vocabulary term counts.
SparseVector term_counts(const std::vector<std::string>& terms, const Vocabulary& vocab);

enum class IdfMode { NaturalLog, Log10, RawRatio };

std::string_view to_string(IdfMode mode);
IdfMode parse_idf_mode(std::string_view name);

/// f(n_docs / df) with f = ln, log10 or identity.
double idf_weight(std::size_t n_docs, std::size_t df, IdfMode mode);

class TfidfModel {
 public:
  TfidfModel() = default;

  const Vocabulary& vocabulary() const { return vocab_; }
  const std::vector<double>& idf() const { return idf_; }
  IdfMode mode() const { return mode_; }
  std::size_t size() const { return vocab_.size(); }

  /// tf x idf over the vocabulary's n-gram terms of `tokens`.
  SparseVector transform(const TokenSequence& tokens) const;
  /// Raw counts over the vocabulary's n-gram terms of `tokens`.
  SparseVector counts(const TokenSequence& tokens) const;

  /// Versioned text format: header (V, n_docs, idf_mode, n-gram config)
  /// followed by term,index,df,idf rows.
  void save(std::ostream& out) const;
  static TfidfModel load(std::istream& in);

 private:
  friend TfidfModel fit_idf(Vocabulary vocab, IdfMode mode);

  Vocabulary vocab_;
  std::vector<double> idf_;
  IdfMode mode_ = IdfMode::NaturalLog;
};

TfidfModel fit_idf(Vocabulary vocab, IdfMode mode = IdfMode::NaturalLog);

/// Settings for turning token sequences into model inputs.
struct FeatureConfig {
  NgramConfig ngram{1, 1, 2};
  IdfMode idf_mode = IdfMode::NaturalLog;
};

FeatureMatrix tfidf_transform(const std::vector<TokenSequence>& docs, const TfidfModel& model,
                              std::size_t workers = 1);
FeatureMatrix count_transform(const std::vector<TokenSequence>& docs, const TfidfModel& model,
                              std::size_t workers = 1);

}  // namespace tweetsent
