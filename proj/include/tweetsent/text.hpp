#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace tweetsent {

enum class CleaningStep {
  Lowercase,
  StripUrls,           // scheme://non-space-run
  StripMentions,       // @ followed by word characters
  StripHashtagMarks,   // drop '#', keep the word
  StripDigits,
  StripSpecialChars,   // keep ASCII letters and whitespace only
  CollapseWhitespace,  // single spaces, trimmed
};

std::string_view to_string(CleaningStep step);
CleaningStep parse_cleaning_step(std::string_view name);

/// Ordered, individually toggleable cleaning steps. When present,
/// CollapseWhitespace always runs last regardless of where it was listed.
class CleaningConfig {
 public:
  /// All steps in their canonical order.
  CleaningConfig();
  explicit CleaningConfig(std::vector<CleaningStep> steps);

  /// Parses a comma separated step list, e.g. "lowercase,strip_urls".
  static CleaningConfig parse(std::string_view list);

  const std::vector<CleaningStep>& steps() const { return steps_; }
  bool enabled(CleaningStep step) const;
  std::string to_string() const;

 private:
  std::vector<CleaningStep> steps_;
};

using TokenSequence = std::vector<std::string>;

class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(const std::vector<std::string>& words);

  /// One word per line; '#' comment lines and blank lines are skipped.
  static StopwordList load(std::istream& in);
  /// The bundled English list.
  static StopwordList english();

  bool contains(std::string_view word) const { return words_.count(std::string(word)) != 0; }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

/// The bundled English stopwords, in file order.
const std::vector<std::string>& english_stopwords();

std::string clean_text(std::string_view raw, const CleaningConfig& config);

/// Splits on runs of ASCII whitespace.
TokenSequence tokenize(std::string_view cleaned);

TokenSequence remove_stopwords(const TokenSequence& tokens, const StopwordList& list);

/// Porter (1980) suffix stripping. Tokens that are not entirely lowercase
/// ASCII letters are returned unchanged.
std::string stem(std::string_view token);

TokenSequence preprocess(std::string_view raw, const CleaningConfig& config,
                         const StopwordList& stopwords);

}  // namespace tweetsent
