#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tweetsent/classifiers.hpp"
#include "tweetsent/corpus.hpp"
#include "tweetsent/evaluation.hpp"
#include "tweetsent/features.hpp"
#include "tweetsent/text.hpp"

namespace tweetsent {

/// Flat `section.key = value` settings. '#' starts a comment line.
/// Later assignments override earlier ones, so CLI flags applied after the
/// file take precedence.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::istream& in, std::string_view origin = "config");

  void set(const std::string& key, std::string value);
  std::optional<std::string> get(const std::string& key) const;
  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

/// Every key a configuration may carry, with its default value.
const std::map<std::string, std::string>& default_settings();

struct PipelineConfig {
  std::filesystem::path corpus_path;
  std::filesystem::path positive_lexicon_path;
  std::filesystem::path negative_lexicon_path;
  std::filesystem::path stopwords_path;  // empty = bundled list
  std::optional<Country> country;        // nullopt = pool all countries
  IngestSchema schema;

  std::filesystem::path output_dir = "out";
  std::uint64_t master_seed = 42;
  std::size_t workers = 1;

  CleaningConfig cleaning;
  double polarity_threshold = 0.1;

  FeatureConfig features;
  NgramConfig compare_ngram{2, 2, 2};  // n-gram side of compare-features

  std::vector<ModelKind> models{ModelKind::RandomForest};
  ModelParams params;

  SplitSpec split;
  CvConfig cv;
  std::size_t top_k = 30;

  /// Builds from defaults overlaid with `settings`; unknown keys and
  /// unparsable values raise Config errors. Stage seeds are derived from
  /// the master seed.
  static PipelineConfig from_settings(const KeyValueConfig& settings);
};

}  // namespace tweetsent
