#include "tweetsent/lexicon.hpp"

#include <algorithm>

#include "tweetsent/error.hpp"
#include "tweetsent/parallel.hpp"

namespace tweetsent {

namespace {

std::vector<std::string> read_word_list(std::istream& in, const char* which) {
  if (!in) fail(ErrorKind::Io, std::string("cannot read ") + which + " lexicon");
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().front() == ';') continue;
    words.push_back(std::move(tokens.front()));
  }
  if (in.bad()) fail(ErrorKind::Io, std::string("error reading ") + which + " lexicon");
  return words;
}

std::string lower(std::string s) {
  for (auto& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return s;
}

}  // namespace

OpinionLexicon::OpinionLexicon(const std::vector<std::string>& positive,
                               const std::vector<std::string>& negative) {
  for (const auto& w : positive) {
    if (!w.empty()) positive_.insert(lower(w));
  }
  for (const auto& w : negative) {
    if (!w.empty()) negative_.insert(lower(w));
  }
  std::vector<std::string> shared;
  for (const auto& w : positive_) {
    if (negative_.count(w)) shared.push_back(w);
  }
  for (const auto& w : shared) {
    positive_.erase(w);
    negative_.erase(w);
  }
  conflicts_ = shared.size();
}

OpinionLexicon OpinionLexicon::stemmed() const {
  std::vector<std::string> pos, neg;
  pos.reserve(positive_.size());
  neg.reserve(negative_.size());
  for (const auto& w : positive_) pos.push_back(stem(w));
  for (const auto& w : negative_) neg.push_back(stem(w));
  OpinionLexicon out(pos, neg);
  out.conflicts_ += conflicts_;
  return out;
}

OpinionLexicon load_lexicon(std::istream& positive, std::istream& negative) {
  auto pos = read_word_list(positive, "positive");
  auto neg = read_word_list(negative, "negative");
  if (pos.empty() && neg.empty()) {
    fail(ErrorKind::Config, "both opinion word lists are empty");
  }
  return OpinionLexicon(pos, neg);
}

SentimentScore polarity_score(const TokenSequence& tokens, const OpinionLexicon& lexicon) {
  SentimentScore s;
  s.token_count = tokens.size();
  for (const auto& t : tokens) {
    if (lexicon.is_positive(t)) ++s.pos_count;
    else if (lexicon.is_negative(t)) ++s.neg_count;
  }
  const double diff = static_cast<double>(s.pos_count) - static_cast<double>(s.neg_count);
  s.score = diff / static_cast<double>(std::max<std::size_t>(1, s.token_count));
  return s;
}

SentimentScore LexiconCountScorer::score(const TokenSequence& tokens) const {
  return polarity_score(tokens, lexicon_);
}

SentimentLabel assign_label(double score, double threshold) {
  return score >= threshold ? SentimentLabel::Positive : SentimentLabel::Negative;
}

SentimentLabel assign_label(const SentimentScore& score, double threshold) {
  return assign_label(score.score, threshold);
}

LabelingResult label_corpus(const Corpus& corpus, const CleaningConfig& cleaning,
                            const StopwordList& stopwords, const SentimentScorer& scorer,
                            double threshold, std::size_t workers) {
  if (corpus.empty()) fail(ErrorKind::Data, "cannot label an empty corpus");
  const auto& records = corpus.records();
  LabelingResult result;
  result.docs.resize(records.size());
  parallel_for(records.size(), workers, [&](std::size_t i) {
    auto& doc = result.docs[i];
    doc.id = records[i].id;
    doc.tokens = preprocess(records[i].text, cleaning, stopwords);
    const auto s = scorer.score(doc.tokens);
    doc.pos_count = s.pos_count;
    doc.neg_count = s.neg_count;
    doc.score = s.score;
    doc.label = assign_label(s, threshold);
  });
  for (const auto& d : result.docs) {
    if (d.label == SentimentLabel::Positive) ++result.positive;
    else ++result.negative;
  }
  return result;
}

}  // namespace tweetsent
