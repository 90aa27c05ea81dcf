#include "tweetsent/features.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "tweetsent/csv.hpp"
#include "tweetsent/error.hpp"
#include "tweetsent/format.hpp"
#include "tweetsent/parallel.hpp"

namespace tweetsent {

namespace {

constexpr std::string_view kModelMagic = "tweetsent-tfidf";
constexpr int kModelVersion = 1;

// Sorts (index) hits and folds duplicates into counts.
SparseVector count_indices(std::vector<std::size_t> hits) {
  std::sort(hits.begin(), hits.end());
  SparseVector out;
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    while (j < hits.size() && hits[j] == hits[i]) ++j;
    out.push_back({hits[i], static_cast<double>(j - i)});
    i = j;
  }
  return out;
}

std::vector<std::size_t> lookup(const std::vector<std::string>& terms, const Vocabulary& vocab) {
  std::vector<std::size_t> hits;
  hits.reserve(terms.size());
  for (const auto& t : terms) {
    const auto idx = vocab.index_of(t);
    if (idx != Vocabulary::npos) hits.push_back(idx);
  }
  return hits;
}

}  // namespace

void NgramConfig::validate() const {
  if (n_min < 1 || n_max < n_min || n_max > 3) {
    fail(ErrorKind::Config, "n-gram range must satisfy 1 <= n_min <= n_max <= 3");
  }
  if (min_df < 1) fail(ErrorKind::Config, "min_df must be at least 1");
}

std::vector<std::string> extract_ngrams(const TokenSequence& tokens, const NgramConfig& config) {
  std::vector<std::string> out;
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    if (tokens.size() < n) break;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      std::string term = tokens[i];
      for (std::size_t k = 1; k < n; ++k) {
        term.push_back(' ');
        term += tokens[i + k];
      }
      out.push_back(std::move(term));
    }
  }
  return out;
}

std::size_t Vocabulary::index_of(std::string_view term) const {
  auto it = index_.find(std::string(term));
  return it == index_.end() ? npos : it->second;
}

void Vocabulary::add(std::string term, std::size_t df) {
  index_.emplace(term, terms_.size());
  terms_.push_back(std::move(term));
  df_.push_back(df);
}

Vocabulary build_vocabulary(const std::vector<TokenSequence>& docs, const NgramConfig& config) {
  config.validate();
  if (docs.empty()) fail(ErrorKind::Config, "cannot build a vocabulary from zero documents");

  std::vector<std::string> order;  // first-occurrence order
  std::unordered_map<std::string, std::size_t> df;
  for (const auto& doc : docs) {
    std::unordered_set<std::string> seen;
    for (auto& term : extract_ngrams(doc, config)) {
      if (!seen.insert(term).second) continue;
      auto [it, inserted] = df.try_emplace(term, 0);
      if (inserted) order.push_back(term);
      ++it->second;
    }
  }

  Vocabulary vocab;
  vocab.config_ = config;
  vocab.n_docs_ = docs.size();
  for (auto& term : order) {
    const auto count = df.at(term);
    if (count >= config.min_df) vocab.add(std::move(term), count);
  }
  if (vocab.size() == 0) {
    fail(ErrorKind::Config, "vocabulary is empty after applying min_df = " +
                                std::to_string(config.min_df));
  }
  return vocab;
}

SparseVector term_frequency(const std::vector<std::string>& terms, const Vocabulary& vocab) {
  if (terms.empty()) return {};
  auto out = count_indices(lookup(terms, vocab));
  const double len = static_cast<double>(terms.size());
  for (auto& e : out) e.value /= len;
  return out;
}

SparseVector term_counts(const std::vector<std::string>& terms, const Vocabulary& vocab) {
  return count_indices(lookup(terms, vocab));
}

std::string_view to_string(IdfMode mode) {
  switch (mode) {
    case IdfMode::NaturalLog: return "natural_log";
    case IdfMode::Log10: return "log10";
    case IdfMode::RawRatio: return "raw_ratio";
  }
  return "natural_log";
}

IdfMode parse_idf_mode(std::string_view name) {
  if (name == "natural_log" || name == "ln") return IdfMode::NaturalLog;
  if (name == "log10") return IdfMode::Log10;
  if (name == "raw_ratio" || name == "raw") return IdfMode::RawRatio;
  fail(ErrorKind::Config, "unknown idf mode '" + std::string(name) + "'");
}

double idf_weight(std::size_t n_docs, std::size_t df, IdfMode mode) {
  if (df == 0 || df > n_docs) {
    fail(ErrorKind::Data, "document frequency must lie in [1, n_docs]");
  }
  const double ratio = static_cast<double>(n_docs) / static_cast<double>(df);
  switch (mode) {
    case IdfMode::NaturalLog: return std::log(ratio);
    case IdfMode::Log10: return std::log10(ratio);
    case IdfMode::RawRatio: return ratio;
  }
  return ratio;
}

TfidfModel fit_idf(Vocabulary vocab, IdfMode mode) {
  if (vocab.n_docs() < 1) fail(ErrorKind::Config, "vocabulary was fitted on zero documents");
  TfidfModel model;
  model.mode_ = mode;
  model.idf_.reserve(vocab.size());
  for (auto df : vocab.document_frequency()) {
    model.idf_.push_back(idf_weight(vocab.n_docs(), df, mode));
  }
  model.vocab_ = std::move(vocab);
  return model;
}

SparseVector TfidfModel::transform(const TokenSequence& tokens) const {
  auto row = term_frequency(vocab_.terms_of(tokens), vocab_);
  SparseVector out;
  out.reserve(row.size());
  for (const auto& e : row) {
    const double v = e.value * idf_[e.index];
    if (v != 0.0) out.push_back({e.index, v});  // idf is 0 for terms in every doc
  }
  return out;
}

SparseVector TfidfModel::counts(const TokenSequence& tokens) const {
  return term_counts(vocab_.terms_of(tokens), vocab_);
}

void TfidfModel::save(std::ostream& out) const {
  const auto& cfg = vocab_.config();
  out << kModelMagic << ' ' << kModelVersion << '\n';
  out << "V " << vocab_.size() << '\n';
  out << "n_docs " << vocab_.n_docs() << '\n';
  out << "idf_mode " << to_string(mode_) << '\n';
  out << "ngram " << cfg.n_min << ' ' << cfg.n_max << ' ' << cfg.min_df << '\n';
  csv::write_row(out, {"term", "index", "df", "idf"});
  for (std::size_t i = 0; i < vocab_.size(); ++i) {
    csv::write_row(out, {vocab_.terms()[i], std::to_string(i),
                         std::to_string(vocab_.document_frequency()[i]), format_double(idf_[i])});
  }
  if (!out) fail(ErrorKind::Io, "failed writing tf-idf model");
}

TfidfModel TfidfModel::load(std::istream& in) {
  if (!in) fail(ErrorKind::Io, "cannot read tf-idf model");
  auto expect = [&](const char* key) {
    std::string word;
    if (!(in >> word) || word != key) {
      fail(ErrorKind::Data, std::string("tf-idf model: expected '") + key + "'");
    }
  };
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != kModelMagic) {
    fail(ErrorKind::Data, "not a tf-idf model file");
  }
  if (version != kModelVersion) {
    fail(ErrorKind::Data, "unsupported tf-idf model version " + std::to_string(version));
  }
  std::size_t v = 0, n_docs = 0;
  std::string mode;
  NgramConfig cfg;
  expect("V");
  in >> v;
  expect("n_docs");
  in >> n_docs;
  expect("idf_mode");
  in >> mode;
  expect("ngram");
  in >> cfg.n_min >> cfg.n_max >> cfg.min_df;
  if (!in) fail(ErrorKind::Data, "tf-idf model: malformed header");
  cfg.validate();
  in.ignore(1);  // newline

  csv::Reader reader(in);
  csv::Row row;
  if (!reader.next(row) || row != csv::Row{"term", "index", "df", "idf"}) {
    fail(ErrorKind::Data, "tf-idf model: missing term table header");
  }

  TfidfModel model;
  model.mode_ = parse_idf_mode(mode);
  model.vocab_.config_ = cfg;
  model.vocab_.n_docs_ = n_docs;
  while (reader.next(row)) {
    if (reader.error() || row.size() != 4) fail(ErrorKind::Data, "tf-idf model: malformed term row");
    const auto index = parse_int<std::size_t>(row[1], "index");
    if (index != model.vocab_.size()) fail(ErrorKind::Data, "tf-idf model: indices not contiguous");
    const auto df = parse_int<std::size_t>(row[2], "df");
    if (df < 1 || df > n_docs) fail(ErrorKind::Data, "tf-idf model: df out of range");
    model.vocab_.add(row[0], df);
    model.idf_.push_back(parse_double(row[3], "idf"));
  }
  if (model.vocab_.size() != v) fail(ErrorKind::Data, "tf-idf model: term count does not match V");
  return model;
}

FeatureMatrix tfidf_transform(const std::vector<TokenSequence>& docs, const TfidfModel& model,
                              std::size_t workers) {
  FeatureMatrix m;
  m.n_cols = model.size();
  m.rows.resize(docs.size());
  parallel_for(docs.size(), workers, [&](std::size_t i) { m.rows[i] = model.transform(docs[i]); });
  return m;
}

FeatureMatrix count_transform(const std::vector<TokenSequence>& docs, const TfidfModel& model,
                              std::size_t workers) {
  FeatureMatrix m;
  m.n_cols = model.size();
  m.rows.resize(docs.size());
  parallel_for(docs.size(), workers, [&](std::size_t i) { m.rows[i] = model.counts(docs[i]); });
  return m;
}

}  // namespace tweetsent
