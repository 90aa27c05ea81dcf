#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tweetsent/csv.hpp"

namespace tweetsent {

enum class CountryCode { UK, India, Other };

/// Country tag of a record; `name` carries the raw value for Other.
struct Country {
  CountryCode code = CountryCode::Other;
  std::string name;

  static Country parse(std::string_view raw);
  std::string to_string() const;

  friend bool operator==(const Country&, const Country&) = default;
};

struct TweetRecord {
  std::string id;
  std::string text;
  std::string author;
  std::string created_at;
  Country country;

  friend bool operator==(const TweetRecord&, const TweetRecord&) = default;
};

struct IngestStats {
  std::size_t accepted = 0;
  std::size_t dropped_empty = 0;
  std::size_t dropped_duplicate = 0;
  std::size_t replaced_bytes = 0;  // invalid UTF-8 sequences replaced
  std::vector<csv::RowError> row_errors;
};

class Corpus {
 public:
  Corpus() = default;
  Corpus(std::vector<TweetRecord> records, std::string source_name);

  const std::vector<TweetRecord>& records() const { return records_; }
  const std::string& source_name() const { return source_name_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  const IngestStats& stats() const { return stats_; }
  void set_stats(IngestStats stats) { stats_ = std::move(stats); }

 private:
  std::vector<TweetRecord> records_;
  std::string source_name_;
  IngestStats stats_;
};

/// Maps logical record fields to CSV column names. Only `text` is required
/// to be present in the file; an empty name disables a field.
struct IngestSchema {
  std::string id = "id";
  std::string text = "text";
  std::string author = "author";
  std::string created_at = "created_at";
  std::string country = "country";
  bool strict = false;  // malformed CSV rows become fatal
  std::string fallback_country;  // used when the country column is absent
};

/// Reads a tweet export. Rows with empty text are dropped; a repeated id
/// keeps its first occurrence. Missing id column -> ids are data row numbers.
Corpus ingest_csv(std::istream& in, const IngestSchema& schema,
                  std::string source_name = {});

Corpus filter_by_country(const Corpus& corpus, const Country& country);

/// Writes records in ingest schema column order: id,text,author,created_at,country.
std::size_t persist_corpus(const Corpus& corpus, std::ostream& out);

// ---- labeled documents ------------------------------------------------------

enum class SentimentLabel : int { Negative = 0, Positive = 1 };

inline int to_int(SentimentLabel label) { return static_cast<int>(label); }
inline SentimentLabel label_from_int(int v) {
  return v ? SentimentLabel::Positive : SentimentLabel::Negative;
}

struct LabeledDocument {
  std::string id;
  std::vector<std::string> tokens;  // preprocessed
  std::size_t pos_count = 0;
  std::size_t neg_count = 0;
  double score = 0.0;
  SentimentLabel label = SentimentLabel::Negative;

  friend bool operator==(const LabeledDocument&, const LabeledDocument&) = default;
};

/// CSV with columns id,text,pos_count,neg_count,score,label where text holds
/// the tokens joined by single spaces. Returns the number of data rows.
std::size_t persist_labeled(const std::vector<LabeledDocument>& docs, std::ostream& out);

std::vector<LabeledDocument> read_labeled(std::istream& in);

// ---- splitting --------------------------------------------------------------

struct SplitSpec {
  double test_fraction = 0.3;
  std::uint64_t seed = 0;
  bool stratified = true;
};

struct SplitIndices {
  std::vector<std::size_t> train;  // ascending
  std::vector<std::size_t> test;   // ascending
};

/// Number of test items for a group of `n`: n * fraction rounded half up.
std::size_t split_test_count(std::size_t n, double test_fraction);

/// Index-level split over `labels` (0/1 per document).
SplitIndices train_test_split(const std::vector<int>& labels, const SplitSpec& spec);

std::pair<std::vector<LabeledDocument>, std::vector<LabeledDocument>> train_test_split(
    const std::vector<LabeledDocument>& docs, const SplitSpec& spec);

}  // namespace tweetsent
