#include "tweetsent/config.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tweetsent/error.hpp"
#include "tweetsent/format.hpp"
#include "tweetsent/seed.hpp"

namespace tweetsent {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class Settings {
 public:
  explicit Settings(const KeyValueConfig& overrides) : values_(default_settings()) {
    for (const auto& [k, v] : overrides.entries()) {
      if (!values_.count(k)) fail(ErrorKind::Config, "unknown configuration key '" + k + "'");
      values_[k] = v;
    }
  }

  const std::string& text(const std::string& key) const { return values_.at(key); }

  std::size_t size(const std::string& key) const {
    try {
      return parse_int<std::size_t>(text(key), key);
    } catch (const Error& e) {
      fail(ErrorKind::Config, e.what());
    }
  }

  std::optional<std::size_t> optional_size(const std::string& key) const {
    const auto& v = text(key);
    if (v == "none" || v == "auto" || v.empty()) return std::nullopt;
    return size(key);
  }

  std::uint64_t u64(const std::string& key) const {
    try {
      return parse_int<std::uint64_t>(text(key), key);
    } catch (const Error& e) {
      fail(ErrorKind::Config, e.what());
    }
  }

  double real(const std::string& key) const {
    try {
      return parse_double(text(key), key);
    } catch (const Error& e) {
      fail(ErrorKind::Config, e.what());
    }
  }

  bool flag(const std::string& key) const {
    const auto& v = text(key);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    fail(ErrorKind::Config, "expected true/false for '" + key + "', got '" + v + "'");
  }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace

KeyValueConfig KeyValueConfig::parse(std::istream& in, std::string_view origin) {
  if (!in) fail(ErrorKind::Io, "cannot read " + std::string(origin));
  KeyValueConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorKind::Config, std::string(origin) + ":" + std::to_string(line_no) +
                                  ": expected 'key = value'");
    }
    const auto key = trim(body.substr(0, eq));
    if (key.empty()) {
      fail(ErrorKind::Config, std::string(origin) + ":" + std::to_string(line_no) + ": empty key");
    }
    cfg.set(std::string(key), std::string(trim(body.substr(eq + 1))));
  }
  return cfg;
}

void KeyValueConfig::set(const std::string& key, std::string value) {
  entries_[key] = std::move(value);
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

const std::map<std::string, std::string>& default_settings() {
  static const std::map<std::string, std::string> kDefaults = {
      {"input.corpus", ""},
      {"input.positive", ""},
      {"input.negative", ""},
      {"input.stopwords", ""},
      {"input.country", "all"},
      {"schema.id", "id"},
      {"schema.text", "text"},
      {"schema.author", "author"},
      {"schema.created_at", "created_at"},
      {"schema.country", "country"},
      {"schema.default_country", ""},
      {"schema.strict", "false"},
      {"output.dir", "out"},
      {"seed", "42"},
      {"workers", "1"},
      {"clean.steps", CleaningConfig().to_string()},
      {"label.threshold", "0.1"},
      {"features.n_min", "1"},
      {"features.n_max", "1"},
      {"features.min_df", "2"},
      {"features.idf_mode", "natural_log"},
      {"compare.n_min", "2"},
      {"compare.n_max", "2"},
      {"model.kind", "rf"},
      {"nb.alpha", "1"},
      {"dt.max_depth", "20"},
      {"dt.min_samples_leaf", "1"},
      {"rf.n_trees", "50"},
      {"rf.features_per_split", "auto"},
      {"rf.max_depth", "none"},
      {"rf.min_samples_leaf", "1"},
      {"rf.bootstrap", "true"},
      {"lr.learning_rate", "0.1"},
      {"lr.epochs", "500"},
      {"lr.l2", "0.0001"},
      {"split.test_fraction", "0.3"},
      {"split.stratified", "true"},
      {"cv.k", "5"},
      {"cv.stratified", "true"},
      {"report.top_k", "30"},
  };
  return kDefaults;
}

PipelineConfig PipelineConfig::from_settings(const KeyValueConfig& overrides) {
  const Settings s(overrides);
  PipelineConfig c;

  c.corpus_path = s.text("input.corpus");
  c.positive_lexicon_path = s.text("input.positive");
  c.negative_lexicon_path = s.text("input.negative");
  c.stopwords_path = s.text("input.stopwords");
  if (const auto& country = s.text("input.country"); country != "all" && !country.empty()) {
    c.country = Country::parse(country);
  }

  c.schema.id = s.text("schema.id");
  c.schema.text = s.text("schema.text");
  c.schema.author = s.text("schema.author");
  c.schema.created_at = s.text("schema.created_at");
  c.schema.country = s.text("schema.country");
  c.schema.fallback_country = s.text("schema.default_country");
  c.schema.strict = s.flag("schema.strict");
  if (c.schema.text.empty()) fail(ErrorKind::Config, "schema.text must name a column");

  c.output_dir = s.text("output.dir");
  c.master_seed = s.u64("seed");
  c.workers = s.size("workers");
  if (c.workers < 1) fail(ErrorKind::Config, "workers must be >= 1");

  c.cleaning = CleaningConfig::parse(s.text("clean.steps"));
  c.polarity_threshold = s.real("label.threshold");

  c.features.ngram = {s.size("features.n_min"), s.size("features.n_max"), s.size("features.min_df")};
  c.features.ngram.validate();
  c.features.idf_mode = parse_idf_mode(s.text("features.idf_mode"));
  c.compare_ngram = {s.size("compare.n_min"), s.size("compare.n_max"), c.features.ngram.min_df};
  c.compare_ngram.validate();

  const auto& kind = s.text("model.kind");
  if (kind == "all") {
    c.models = {ModelKind::NaiveBayes, ModelKind::DecisionTree, ModelKind::RandomForest,
                ModelKind::Logistic};
  } else {
    c.models.clear();
    std::istringstream list(kind);
    for (std::string name; std::getline(list, name, ',');) {
      const auto parsed = parse_model_kind(trim(name));
      if (std::find(c.models.begin(), c.models.end(), parsed) == c.models.end()) c.models.push_back(parsed);
    }
    if (c.models.empty()) fail(ErrorKind::Config, "model.kind lists no models");
  }

  c.params.nb_alpha = s.real("nb.alpha");
  c.params.tree.max_depth = s.optional_size("dt.max_depth");
  c.params.tree.min_samples_leaf = s.size("dt.min_samples_leaf");
  c.params.forest.n_trees = s.size("rf.n_trees");
  c.params.forest.features_per_split = s.optional_size("rf.features_per_split");
  c.params.forest.tree.max_depth = s.optional_size("rf.max_depth");
  c.params.forest.tree.min_samples_leaf = s.size("rf.min_samples_leaf");
  c.params.forest.bootstrap = s.flag("rf.bootstrap");
  c.params.logistic.learning_rate = s.real("lr.learning_rate");
  c.params.logistic.epochs = s.size("lr.epochs");
  c.params.logistic.l2 = s.real("lr.l2");

  c.split.test_fraction = s.real("split.test_fraction");
  c.split.stratified = s.flag("split.stratified");
  if (!(c.split.test_fraction > 0.0 && c.split.test_fraction < 1.0)) {
    fail(ErrorKind::Config, "split.test_fraction must lie strictly between 0 and 1");
  }
  c.cv.k = s.size("cv.k");
  c.cv.stratified = s.flag("cv.stratified");
  if (c.cv.k < 2) fail(ErrorKind::Config, "cv.k must be at least 2");
  c.top_k = s.size("report.top_k");
  if (c.top_k < 1) fail(ErrorKind::Config, "report.top_k must be at least 1");

  // every random stream derives from the master seed
  c.split.seed = stage_seed(c.master_seed, "split");
  c.cv.seed = stage_seed(c.master_seed, "cv");
  c.params.forest.seed = stage_seed(c.master_seed, "forest");
  c.params.logistic.seed = stage_seed(c.master_seed, "logistic");
  return c;
}

}  // namespace tweetsent
