#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "tweetsent/pipeline.hpp"
#include "tweetsent/seed.hpp"

using namespace tweetsent;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("tweetsent_unit_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

KeyValueConfig settings(const fs::path& out) {
  std::istringstream in("input.corpus = " TWEETSENT_DATA_DIR "/synthetic_corpus.csv\n"
                        "output.dir = " + out.string() + "\n");
  return KeyValueConfig::parse(in);
}

}  // namespace

TEST_CASE("config parsing") {
  std::istringstream in("# comment\n\n  seed = 7  \nrf.n_trees=12\nmodel.kind = all\n");
  const auto kv = KeyValueConfig::parse(in);
  CHECK(kv.get("seed") == "7");
  CHECK(kv.get("rf.n_trees") == "12");
  const auto c = PipelineConfig::from_settings(kv);
  CHECK(c.master_seed == 7);
  CHECK(c.params.forest.n_trees == 12);
  CHECK(c.models.size() == 4);
  CHECK(c.params.forest.seed == stage_seed(7, "forest"));
  CHECK(c.split.seed != c.cv.seed);
}

TEST_CASE("config defaults") {
  const auto c = PipelineConfig::from_settings({});
  CHECK(c.polarity_threshold == 0.1);
  CHECK(c.split.test_fraction == 0.3);
  CHECK(c.cv.k == 5);
  CHECK(c.models == std::vector<ModelKind>{ModelKind::RandomForest});
  CHECK_FALSE(c.country);
  CHECK(default_settings().count("lr.learning_rate") == 1);
}

TEST_CASE("config errors") {
  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    try {
      PipelineConfig::from_settings(KeyValueConfig::parse(in));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;  // sentinel: nothing thrown
  };
  CHECK(bad("nonsense.key = 1\n") == ErrorKind::Config);
  CHECK(bad("seed = abc\n") == ErrorKind::Config);
  CHECK(bad("cv.k = 1\n") == ErrorKind::Config);
  CHECK(bad("split.test_fraction = 1.5\n") == ErrorKind::Config);
  CHECK(bad("model.kind = svm\n") == ErrorKind::Config);
  CHECK(bad("just text\n") == ErrorKind::Config);
  CHECK(bad("rf.bootstrap = maybe\n") == ErrorKind::Config);
}

TEST_CASE("stage seeds depend only on master seed and stage name") {
  CHECK(stage_seed(1, "split") == stage_seed(1, "split"));
  CHECK(stage_seed(1, "split") != stage_seed(2, "split"));
  CHECK(stage_seed(1, "split") != stage_seed(1, "cv"));
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ErrorKind::Usage) == 1);
  CHECK(exit_code_for(ErrorKind::Config) == 1);
  CHECK(exit_code_for(ErrorKind::Data) == 2);
  CHECK(exit_code_for(ErrorKind::Io) == 2);
  CHECK(exit_code_for(ErrorKind::Schema) == 2);
  CHECK(exit_code_for(ErrorKind::Numeric) == 3);
}

TEST_CASE("a stage without its predecessor names the missing subcommand") {
  const auto out = scratch("order");
  const auto cfg = PipelineConfig::from_settings(settings(out));
  std::ostringstream log;
  try {
    run_subcommand("train", cfg, log);
    FAIL("expected a usage error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Usage);
    CHECK(std::string(e.what()).find("`label`") != std::string::npos);
  }
  try {
    run_subcommand("label", cfg, log);
    FAIL("expected a usage error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("`ingest`") != std::string::npos);
  }
  CHECK_THROWS_AS(run_subcommand("fly", cfg, log), Error);
  fs::remove_all(out);
}

TEST_CASE("stages chain and re-running is idempotent") {
  const auto out = scratch("chain");
  auto kv = settings(out);
  kv.set("rf.n_trees", "8");
  kv.set("cv.k", "3");
  const auto cfg = PipelineConfig::from_settings(kv);
  std::ostringstream log;
  for (const char* s : {"ingest", "label", "featurize", "train", "evaluate", "compare-features", "report"}) {
    run_subcommand(s, cfg, log);
  }
  for (const char* f : {"corpus.csv", "labeled.csv", "split.csv", "vectorizer.txt", "model_random_forest.txt",
                        "holdout_random_forest.csv", "cv_report_random_forest.csv", "cv_roc_random_forest.csv",
                        "cv_summary.csv", "roc.svg", "compare_features.csv", "frequency_positive.csv",
                        "frequency_negative.csv", "wordcloud_positive.svg", "wordcloud_negative.svg"}) {
    CHECK_MESSAGE(fs::is_regular_file(out / f), f);
  }
  const auto compare = slurp(out / "compare_features.csv");
  CHECK(compare.find("\ntfidf-word,random_forest,1,1,") != std::string::npos);
  CHECK(compare.find("\ntfidf-ngram,random_forest,2,2,") != std::string::npos);

  const auto labeled = slurp(out / "labeled.csv");
  const auto report = slurp(out / "cv_report_random_forest.csv");
  run_subcommand("label", cfg, log);
  run_subcommand("evaluate", cfg, log);
  CHECK(slurp(out / "labeled.csv") == labeled);
  CHECK(slurp(out / "cv_report_random_forest.csv") == report);
  for (const auto& entry : fs::directory_iterator(out)) {
    CHECK(entry.path().extension() != ".tmp");
  }
  fs::remove_all(out);
}

TEST_CASE("country filter at ingest") {
  const auto out = scratch("country");
  auto kv = settings(out);
  kv.set("input.country", "India");
  std::ostringstream log;
  run_subcommand("ingest", PipelineConfig::from_settings(kv), log);
  const auto text = slurp(out / "corpus.csv");
  CHECK(text.find(",UK\n") == std::string::npos);
  CHECK(text.find(",India\n") != std::string::npos);
  fs::remove_all(out);
}

TEST_CASE("missing corpus is a data-side error") {
  const auto out = scratch("missing");
  auto kv = settings(out);
  kv.set("input.corpus", (out / "nope.csv").string());
  std::ostringstream log;
  try {
    run_subcommand("ingest", PipelineConfig::from_settings(kv), log);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(exit_code_for(e.kind()) == 2);
  }
  fs::remove_all(out);
}

TEST_CASE("model.kind accepts a comma list") {
  KeyValueConfig kv;
  kv.set("model.kind", "lr, nb,lr");
  const auto cfg = PipelineConfig::from_settings(kv);
  CHECK(cfg.models == std::vector<ModelKind>{ModelKind::Logistic, ModelKind::NaiveBayes});
  kv.set("model.kind", "nb,svm");
  CHECK_THROWS_AS(PipelineConfig::from_settings(kv), Error);
}
