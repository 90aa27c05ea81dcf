#include "tweetsent/pipeline.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "tweetsent/csv.hpp"
#include "tweetsent/format.hpp"
#include "tweetsent/lexicon.hpp"
#include "tweetsent/report.hpp"
#include "tweetsent/text_classifier.hpp"

#ifndef TWEETSENT_DATA_DIR
#define TWEETSENT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;

namespace tweetsent {

namespace {

std::string fixed4(double v) { return format_fixed(round_half_up(v, 4), 4); }

fs::path out_path(const PipelineConfig& c, const std::string& name) { return c.output_dir / name; }

fs::path bundled(const fs::path& configured, const char* name) {
  return configured.empty() ? fs::path(TWEETSENT_DATA_DIR) / name : configured;
}

void require_input(const fs::path& p, const std::string& what) {
  if (p.empty()) fail(ErrorKind::Usage, what + " path is not configured");
  if (!fs::is_regular_file(p)) fail(ErrorKind::Io, what + " not found: " + p.string());
}

// A missing predecessor artifact names the subcommand that produces it.
void require_artifact(const PipelineConfig& c, const char* name, const char* producer) {
  if (!fs::is_regular_file(out_path(c, name))) {
    fail(ErrorKind::Usage, std::string("missing ") + (c.output_dir / name).string() + "; run `" +
                               producer + "` first");
  }
}

std::ifstream open_in(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open " + p.string());
  return in;
}

std::vector<LabeledDocument> load_labeled(const PipelineConfig& c) {
  require_artifact(c, artifact::kLabeled, "label");
  auto in = open_in(out_path(c, artifact::kLabeled));
  auto docs = read_labeled(in);
  if (docs.empty()) fail(ErrorKind::Data, "labeled corpus is empty");
  return docs;
}

std::string model_file(ModelKind kind) { return "model_" + std::string(to_string(kind)) + ".txt"; }

// ---- stages ----------------------------------------------------------------

void run_ingest(const PipelineConfig& c, std::ostream& log) {
  require_input(c.corpus_path, "input.corpus");
  auto in = open_in(c.corpus_path);
  Corpus corpus = ingest_csv(in, c.schema, c.corpus_path.filename().string());
  const IngestStats stats = corpus.stats();
  if (c.country) {
    corpus = filter_by_country(corpus, *c.country);
    corpus.set_stats(stats);
  }
  if (corpus.empty()) fail(ErrorKind::Data, "no records left after ingest");
  for (const auto& e : stats.row_errors) {
    log << "warning: line " << e.line << ": " << e.message << '\n';
  }
  std::ostringstream out;
  persist_corpus(corpus, out);
  write_atomic(out_path(c, artifact::kCorpus), out.str());
  log << "ingest: " << corpus.size() << " records (" << stats.dropped_empty << " empty, "
      << stats.dropped_duplicate << " duplicate, " << stats.row_errors.size()
      << " malformed rows dropped)\n";
}

void run_label(const PipelineConfig& c, std::ostream& log) {
  const fs::path pos_path = bundled(c.positive_lexicon_path, "positive-words.txt");
  const fs::path neg_path = bundled(c.negative_lexicon_path, "negative-words.txt");
  require_input(pos_path, "input.positive");
  require_input(neg_path, "input.negative");
  if (!c.stopwords_path.empty()) require_input(c.stopwords_path, "input.stopwords");
  require_artifact(c, artifact::kCorpus, "ingest");

  auto pos = open_in(pos_path);
  auto neg = open_in(neg_path);
  const OpinionLexicon lexicon = load_lexicon(pos, neg);
  StopwordList stopwords = StopwordList::english();
  if (!c.stopwords_path.empty()) {
    auto sw = open_in(c.stopwords_path);
    stopwords = StopwordList::load(sw);
  }

  auto corpus_in = open_in(out_path(c, artifact::kCorpus));
  IngestSchema schema;  // our own persisted format
  const Corpus corpus = ingest_csv(corpus_in, schema, artifact::kCorpus);

  // tokens are stemmed, so the lexicon is matched in stemmed form too
  const LexiconCountScorer scorer(lexicon.stemmed());
  const auto result =
      label_corpus(corpus, c.cleaning, stopwords, scorer, c.polarity_threshold, c.workers);
  std::ostringstream out;
  persist_labeled(result.docs, out);
  write_atomic(out_path(c, artifact::kLabeled), out.str());
  log << "label: " << result.docs.size() << " documents, " << result.positive << " positive, "
      << result.negative << " negative";
  if (lexicon.conflicts()) log << " (" << lexicon.conflicts() << " lexicon conflicts dropped)";
  log << '\n';
}

void run_featurize(const PipelineConfig& c, std::ostream& log) {
  const auto docs = load_labeled(c);
  const auto split = train_test_split(labels_of(docs), c.split);

  std::ostringstream split_out;
  csv::write_row(split_out, {"id", "set"});
  std::vector<std::string> set_of(docs.size(), "train");
  for (auto i : split.test) set_of[i] = "test";
  for (std::size_t i = 0; i < docs.size(); ++i) csv::write_row(split_out, {docs[i].id, set_of[i]});

  std::vector<TokenSequence> train_tokens;
  train_tokens.reserve(split.train.size());
  for (auto i : split.train) train_tokens.push_back(docs[i].tokens);
  const TfidfModel tfidf = fit_idf(build_vocabulary(train_tokens, c.features.ngram), c.features.idf_mode);

  std::ostringstream vec_out;
  tfidf.save(vec_out);
  write_atomic(out_path(c, artifact::kSplit), split_out.str());
  write_atomic(out_path(c, artifact::kVectorizer), vec_out.str());
  log << "featurize: " << split.train.size() << " train / " << split.test.size() << " test, "
      << tfidf.size() << " terms\n";
}

SplitIndices read_split(const PipelineConfig& c, const std::vector<LabeledDocument>& docs) {
  auto in = open_in(out_path(c, artifact::kSplit));
  csv::Reader reader(in);
  csv::Row row;
  if (!reader.next(row) || row != csv::Row{"id", "set"}) {
    fail(ErrorKind::Schema, "split.csv: expected header id,set");
  }
  std::unordered_map<std::string, bool> is_test;
  while (reader.next(row)) {
    if (reader.error()) fail(ErrorKind::Data, "split.csv: " + reader.error()->message);
    if (row.size() != 2 || (row[1] != "train" && row[1] != "test")) {
      fail(ErrorKind::Data, "split.csv: malformed row");
    }
    is_test[row[0]] = row[1] == "test";
  }
  SplitIndices split;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    auto it = is_test.find(docs[i].id);
    if (it == is_test.end()) {
      fail(ErrorKind::Usage, "split.csv does not cover labeled.csv; re-run `featurize`");
    }
    (it->second ? split.test : split.train).push_back(i);
  }
  return split;
}

template <typename T>
std::vector<T> pick(const std::vector<T>& v, const std::vector<std::size_t>& idx) {
  std::vector<T> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(v[i]);
  return out;
}

void run_train(const PipelineConfig& c, std::ostream& log) {
  const auto docs = load_labeled(c);
  require_artifact(c, artifact::kSplit, "featurize");
  require_artifact(c, artifact::kVectorizer, "featurize");
  const auto split = read_split(c, docs);
  auto vin = open_in(out_path(c, artifact::kVectorizer));
  const TfidfModel tfidf = TfidfModel::load(vin);

  const auto train = pick(docs, split.train);
  const auto test = pick(docs, split.test);
  const auto y_train = labels_of(train);
  const auto y_test = labels_of(test);
  for (const auto kind : c.models) {
    const FeatureMatrix X = featurize(train, tfidf, kind, c.workers);
    const ClassifierModel model = fit_model(kind, X, y_train, c.params, c.workers);
    std::ostringstream model_out;
    save_model(model, model_out);
    write_atomic(out_path(c, model_file(kind)), model_out.str());

    const FeatureMatrix X_test = featurize(test, tfidf, kind, c.workers);
    std::vector<double> scores(test.size());
    for (std::size_t i = 0; i < test.size(); ++i) scores[i] = predict_score(model, X_test.rows[i]);
    const auto holdout = evaluate_scores(y_test, scores);
    const std::string stem = "holdout_" + std::string(to_string(kind));
    write_atomic(out_path(c, stem + ".csv"), render_report_csv(holdout.report));
    write_atomic(out_path(c, stem + ".txt"), render_report_text(holdout.report));
    log << "train: " << to_string(kind) << " holdout accuracy " << fixed4(holdout.report.accuracy)
        << '\n';
  }
}

void run_evaluate(const PipelineConfig& c, std::ostream& log) {
  const auto docs = load_labeled(c);
  std::vector<RocSeries> series;
  std::ostringstream summary;
  csv::write_row(summary, {"model", "accuracy", "precision", "recall", "f1", "auc"});
  for (const auto kind : c.models) {
    const auto cv = cross_validate(docs, c.features, kind, c.params, c.cv, c.workers);
    for (const auto& w : cv.warnings) log << "warning: " << w << '\n';
    const std::string name(to_string(kind));
    write_atomic(out_path(c, "cv_report_" + name + ".csv"), render_report_csv(cv.report));
    write_atomic(out_path(c, "cv_report_" + name + ".txt"), render_report_text(cv.report));
    write_atomic(out_path(c, "cv_roc_" + name + ".csv"), render_roc_csv(cv.roc));
    csv::write_row(summary, {name, fixed4(cv.report.accuracy), fixed4(cv.report.weighted.precision),
                             fixed4(cv.report.weighted.recall), fixed4(cv.report.weighted.f1),
                             fixed4(cv.roc.auc)});
    series.push_back({name, cv.roc});
    log << "evaluate: " << name << " accuracy " << fixed4(cv.report.accuracy) << " auc "
        << fixed4(cv.roc.auc) << '\n';
  }
  SvgStyle style;
  style.title = "ROC curves";
  write_atomic(out_path(c, artifact::kSummary), summary.str());
  write_atomic(out_path(c, artifact::kRocSvg), render_roc_svg(series, style));
}

void run_compare(const PipelineConfig& c, std::ostream& log) {
  const auto docs = load_labeled(c);
  FeatureConfig ngram = c.features;
  ngram.ngram = c.compare_ngram;
  const std::pair<const char*, FeatureConfig> variants[] = {{"tfidf-word", c.features},
                                                            {"tfidf-ngram", ngram}};
  std::ostringstream table;
  csv::write_row(table, {"features", "model", "n_min", "n_max", "accuracy", "f1", "auc"});
  for (const auto kind : c.models) {
    for (const auto& [label, features] : variants) {
      const auto cv = cross_validate(docs, features, kind, c.params, c.cv, c.workers);
      csv::write_row(table, {label, std::string(to_string(kind)), std::to_string(features.ngram.n_min),
                             std::to_string(features.ngram.n_max), fixed4(cv.report.accuracy),
                             fixed4(cv.report.weighted.f1), fixed4(cv.roc.auc)});
      log << "compare-features: " << label << ' ' << to_string(kind) << " accuracy "
          << fixed4(cv.report.accuracy) << '\n';
    }
  }
  write_atomic(out_path(c, artifact::kCompare), table.str());
}

void run_report(const PipelineConfig& c, std::ostream& log) {
  const auto docs = load_labeled(c);
  for (const auto label : {SentimentLabel::Positive, SentimentLabel::Negative}) {
    const std::string name = label == SentimentLabel::Positive ? "positive" : "negative";
    const auto report = word_frequency_report(docs, label, c.top_k);
    write_atomic(out_path(c, "frequency_" + name + ".csv"), render_frequency_csv(report));
    if (report.entries.empty()) {
      log << "report: no " << name << " documents, word cloud skipped\n";
      continue;
    }
    SvgStyle style;
    style.title = "Most frequent words, " + name + " tweets";
    write_atomic(out_path(c, "wordcloud_" + name + ".svg"), render_word_cloud_svg(report, style));
    log << "report: " << name << " top token '" << report.entries.front().first << "' ("
        << report.entries.front().second << ")\n";
  }
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> kNames = {"ingest",   "label",            "featurize", "train",
                                                  "evaluate", "compare-features", "report"};
  return kNames;
}

void run_subcommand(std::string_view name, const PipelineConfig& config, std::ostream& log) {
  using Stage = void (*)(const PipelineConfig&, std::ostream&);
  static const std::map<std::string_view, Stage> kStages = {
      {"ingest", run_ingest},     {"label", run_label},
      {"featurize", run_featurize}, {"train", run_train},
      {"evaluate", run_evaluate}, {"compare-features", run_compare},
      {"report", run_report},
  };
  auto it = kStages.find(name);
  if (it == kStages.end()) fail(ErrorKind::Usage, "unknown subcommand '" + std::string(name) + "'");
  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec) fail(ErrorKind::Io, "cannot create " + config.output_dir.string() + ": " + ec.message());
  it->second(config, log);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage:
    case ErrorKind::Config: return 1;
    case ErrorKind::Io:
    case ErrorKind::Schema:
    case ErrorKind::Data: return 2;
    case ErrorKind::Numeric: return 3;
  }
  return 2;
}

void write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) fail(ErrorKind::Io, "write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(ErrorKind::Io, "cannot replace " + path.string());
  }
}

}  // namespace tweetsent
