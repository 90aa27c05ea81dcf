#include "tweetsent/text.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "tweetsent/error.hpp"

namespace tweetsent {

namespace {

constexpr std::array kCanonicalOrder = {
    CleaningStep::Lowercase,         CleaningStep::StripUrls,
    CleaningStep::StripMentions,     CleaningStep::StripHashtagMarks,
    CleaningStep::StripDigits,       CleaningStep::StripSpecialChars,
    CleaningStep::CollapseWhitespace,
};

constexpr std::array<std::string_view, 7> kStepNames = {
    "lowercase",    "strip_urls",          "strip_mentions",      "strip_hashtag_marks",
    "strip_digits", "strip_special_chars", "collapse_whitespace",
};

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word(char c) { return is_alpha(c) || is_digit(c) || c == '_'; }
bool is_scheme_char(char c) { return is_alpha(c) || is_digit(c) || c == '+' || c == '-' || c == '.'; }

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// scheme "://" non-space-run, where scheme = ALPHA *(ALPHA / DIGIT / + - .)
std::string strip_urls(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t sep = s.find("://", i);
    if (sep == std::string_view::npos) break;
    std::size_t start = sep;
    while (start > i && is_scheme_char(s[start - 1])) --start;
    while (start < sep && !is_alpha(s[start])) ++start;  // scheme begins with a letter
    if (start == sep) {
      out.append(s.substr(i, sep + 3 - i));
      i = sep + 3;
      continue;
    }
    std::size_t end = sep + 3;
    while (end < s.size() && !is_space(s[end])) ++end;
    out.append(s.substr(i, start - i));
    out.push_back(' ');
    i = end;
  }
  out.append(s.substr(std::min(i, s.size())));
  return out;
}

std::string strip_mentions(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] == '@' && i + 1 < s.size() && is_word(s[i + 1])) {
      ++i;
      while (i < s.size() && is_word(s[i])) ++i;
      out.push_back(' ');
      continue;
    }
    out.push_back(s[i++]);
  }
  return out;
}

template <typename Pred>
std::string without(std::string_view s, Pred pred) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!pred(c)) out.push_back(c);
  }
  return out;
}

// Apostrophes vanish ("don't" -> "dont"); every other non-letter becomes a
// space so that "prices/bills" still yields two words.
std::string strip_special(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (is_alpha(c) || is_space(c)) out.push_back(c);
    else if (c != '\'') out.push_back(' ');
  }
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending = false;
  for (char c : s) {
    if (is_space(c)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(' ');
    pending = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string_view to_string(CleaningStep step) {
  return kStepNames[static_cast<std::size_t>(step)];
}

CleaningStep parse_cleaning_step(std::string_view name) {
  for (std::size_t i = 0; i < kStepNames.size(); ++i) {
    if (kStepNames[i] == name) return static_cast<CleaningStep>(i);
  }
  fail(ErrorKind::Config, "unknown cleaning step '" + std::string(name) + "'");
}

CleaningConfig::CleaningConfig() : steps_(kCanonicalOrder.begin(), kCanonicalOrder.end()) {}

CleaningConfig::CleaningConfig(std::vector<CleaningStep> steps) {
  bool collapse = false;
  for (auto step : steps) {
    if (step == CleaningStep::CollapseWhitespace) {
      collapse = true;
    } else if (std::find(steps_.begin(), steps_.end(), step) == steps_.end()) {
      steps_.push_back(step);
    }
  }
  if (collapse) steps_.push_back(CleaningStep::CollapseWhitespace);
}

CleaningConfig CleaningConfig::parse(std::string_view list) {
  std::vector<CleaningStep> steps;
  std::size_t i = 0;
  while (i <= list.size()) {
    std::size_t j = list.find(',', i);
    if (j == std::string_view::npos) j = list.size();
    auto item = list.substr(i, j - i);
    while (!item.empty() && is_space(item.front())) item.remove_prefix(1);
    while (!item.empty() && is_space(item.back())) item.remove_suffix(1);
    if (!item.empty()) steps.push_back(parse_cleaning_step(item));
    i = j + 1;
  }
  return CleaningConfig(std::move(steps));
}

bool CleaningConfig::enabled(CleaningStep step) const {
  return std::find(steps_.begin(), steps_.end(), step) != steps_.end();
}

std::string CleaningConfig::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out.push_back(',');
    out += tweetsent::to_string(steps_[i]);
  }
  return out;
}

std::string clean_text(std::string_view raw, const CleaningConfig& config) {
  std::string text(raw);
  for (auto step : config.steps()) {
    switch (step) {
      case CleaningStep::Lowercase: text = lowercase(text); break;
      case CleaningStep::StripUrls: text = strip_urls(text); break;
      case CleaningStep::StripMentions: text = strip_mentions(text); break;
      case CleaningStep::StripHashtagMarks: text = without(text, [](char c) { return c == '#'; }); break;
      case CleaningStep::StripDigits: text = without(text, is_digit); break;
      case CleaningStep::StripSpecialChars: text = strip_special(text); break;
      case CleaningStep::CollapseWhitespace: text = collapse_whitespace(text); break;
    }
  }
  return text;
}

TokenSequence tokenize(std::string_view cleaned) {
  TokenSequence tokens;
  std::size_t i = 0;
  while (i < cleaned.size()) {
    while (i < cleaned.size() && is_space(cleaned[i])) ++i;
    std::size_t j = i;
    while (j < cleaned.size() && !is_space(cleaned[j])) ++j;
    if (j > i) tokens.emplace_back(cleaned.substr(i, j - i));
    i = j;
  }
  return tokens;
}

StopwordList::StopwordList(const std::vector<std::string>& words) {
  for (const auto& w : words) {
    if (!w.empty()) words_.insert(lowercase(w));
  }
}

StopwordList StopwordList::load(std::istream& in) {
  if (!in) fail(ErrorKind::Io, "cannot read stopword list");
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    words.push_back(tokens.front());
  }
  return StopwordList(words);
}

StopwordList StopwordList::english() { return StopwordList(english_stopwords()); }

TokenSequence remove_stopwords(const TokenSequence& tokens, const StopwordList& list) {
  TokenSequence out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!list.contains(t)) out.push_back(t);
  }
  return out;
}

TokenSequence preprocess(std::string_view raw, const CleaningConfig& config,
                         const StopwordList& stopwords) {
  auto tokens = remove_stopwords(tokenize(clean_text(raw, config)), stopwords);
  for (auto& t : tokens) t = stem(t);
  return tokens;
}

const std::vector<std::string>& english_stopwords() {
  static const std::vector<std::string> kWords = {
      "a",       "about",   "above",   "after",   "again",   "against", "all",     "am",
      "an",      "and",     "any",     "are",     "as",      "at",      "be",      "because",
      "been",    "before",  "being",   "below",   "between", "both",    "but",     "by",
      "can",     "could",   "did",     "do",      "does",    "doing",   "down",    "during",
      "each",    "few",     "for",     "from",    "further", "had",     "has",     "have",
      "having",  "he",      "her",     "here",    "hers",    "herself", "him",     "himself",
      "his",     "how",     "i",       "if",      "in",      "into",    "is",      "it",
      "its",     "itself",  "just",    "me",      "more",    "most",    "my",      "myself",
      "now",     "of",      "off",     "on",      "once",    "only",    "or",      "other",
      "our",     "ours",    "ourselves", "out",   "over",    "own",     "same",    "she",
      "should",  "so",      "some",    "such",    "than",    "that",    "the",     "their",
      "theirs",  "them",    "themselves", "then", "there",   "these",   "they",    "this",
      "those",   "through", "to",      "too",     "under",   "until",   "up",      "very",
      "was",     "we",      "were",    "what",    "when",    "where",   "which",   "while",
      "who",     "whom",    "why",     "will",    "with",    "would",   "you",     "your",
      "yours",   "yourself", "yourselves", "rt",  "amp",
  };
  return kWords;
}

}  // namespace tweetsent
