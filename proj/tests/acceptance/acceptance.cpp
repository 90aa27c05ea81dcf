// Acceptance suite: one PASS/FAIL line per criterion. Exit status 1 if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <array>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tweetsent/classifiers.hpp"
#include "tweetsent/evaluation.hpp"
#include "tweetsent/features.hpp"
#include "tweetsent/format.hpp"
#include "tweetsent/lexicon.hpp"
#include "tweetsent/pipeline.hpp"
#include "tweetsent/text.hpp"

using namespace tweetsent;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string fmt(double v, int digits = 6) { return format_fixed(v, digits); }

// ---- 1 ----------------------------------------------------------------------------

Outcome report_averages() {
  Outcome o;
  const auto r = classification_report({0.87, 0.91, 0.89, 1959}, {0.69, 0.61, 0.65, 661});
  const std::pair<const char*, std::pair<double, double>> rows[] = {
      {"macro precision", {r.macro.precision, 0.78}},
      {"macro recall", {r.macro.recall, 0.76}},
      {"macro f1", {r.macro.f1, 0.77}},
      {"weighted precision", {r.weighted.precision, 0.83}},
      {"weighted recall", {r.weighted.recall, 0.83}},
      {"weighted f1", {r.weighted.f1, 0.83}},
  };
  for (const auto& [name, pair] : rows) {
    const auto [got, want] = pair;
    const bool rendered = format_fixed(round_half_up(got, 2), 2) == format_fixed(want, 2);
    const bool close = std::abs(got - want) <= 0.005;
    o.require(rendered && close, std::string(name) + " = " + fmt(got, 5) + " renders " +
                                     format_fixed(round_half_up(got, 2), 2) + ", expected " +
                                     format_fixed(want, 2));
  }
  return o;
}

// ---- 2 ----------------------------------------------------------------------------

Outcome tfidf_example() {
  Outcome o;
  std::vector<TokenSequence> corpus{{"term"}};
  const auto vocab = build_vocabulary(corpus, {1, 1, 1});
  std::vector<std::string> doc(250, "other");
  for (std::size_t i = 0; i < 10; ++i) doc[i * 25] = "term";
  const auto tf = term_frequency(doc, vocab);
  o.require(tf.size() == 1 && tf[0].value == 10.0 / 250.0, "tf(10 of 250) != 0.04");
  const double tf_value = tf.empty() ? 0.0 : tf[0].value;
  const double raw = idf_weight(50000, 500, IdfMode::RawRatio);
  o.require(raw == 100.0, "raw_ratio idf = " + fmt(raw));
  o.require(tf_value * raw == 4.0, "raw product = " + format_double(tf_value * raw));
  const double ln_product = tf_value * idf_weight(50000, 500, IdfMode::NaturalLog);
  const double reference = 0.04 * std::log(100.0);
  o.require(std::abs(ln_product - reference) <= 1e-9,
            "natural_log product = " + format_double(ln_product));
  o.require(format_fixed(ln_product, 7) == "0.1842068",
            "natural_log product renders " + format_fixed(ln_product, 7));
  return o;
}

// ---- 3 ----------------------------------------------------------------------------

Outcome polarity_rule() {
  Outcome o;
  o.require(assign_label(0.1) == SentimentLabel::Positive, "0.1 is not Positive");
  o.require(assign_label(0.0999) == SentimentLabel::Negative, "0.0999 is not Negative");
  // the boundary as produced by an actual count: 1 positive hit in 10 tokens
  const OpinionLexicon lex({"good"}, {"bad"});
  TokenSequence ten(10, "bill");
  ten[3] = "good";
  o.require(assign_label(polarity_score(ten, lex)) == SentimentLabel::Positive,
            "1 hit in 10 tokens is not Positive");
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    o.require(to_int(assign_label(a)) <= to_int(assign_label(b)),
              "monotonicity broken at " + fmt(a) + " <= " + fmt(b));
  }
  return o;
}

// ---- 4 ----------------------------------------------------------------------------

Outcome nb_oracle() {
  Outcome o;
  std::mt19937_64 rng(404);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 5;  // <= 6 docs
    const std::size_t V = 1 + rng() % 5;  // <= 5 terms
    oracle::Dense rows(n, std::vector<double>(V));
    std::vector<int> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& v : rows[i]) v = static_cast<double>(rng() % 4);
      y[i] = i < 2 ? static_cast<int>(i) : static_cast<int>(rng() % 2);
    }
    const double alpha = std::array<double, 3>{1.0, 0.5, 2.0}[trial % 3];
    const auto model = nb_fit(oracle::sparsify(rows, V), y, alpha);
    const auto ref = oracle::nb_count(rows, y, alpha);
    for (int c = 0; c < 2; ++c) {
      worst = std::max(worst, std::abs(std::exp(model.log_prior[c]) - ref.prior[c]));
      for (std::size_t t = 0; t < V; ++t) {
        worst = std::max(worst, std::abs(std::exp(model.log_likelihood[c][t]) - ref.likelihood[c][t]));
      }
    }
    // posteriors on the training rows plus a few fresh documents
    oracle::Dense probes = rows;
    for (int extra = 0; extra < 3; ++extra) {
      std::vector<double> d(V);
      for (auto& v : d) v = static_cast<double>(rng() % 4);
      probes.push_back(d);
    }
    const auto X = oracle::sparsify(probes, V);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      worst = std::max(worst, std::abs(predict_score(model, X.rows[i]) - oracle::nb_posterior(ref, probes[i])));
    }
  }
  o.require(worst <= 1e-12, "max deviation " + format_double(worst));
  o.detail = o.pass ? "max deviation " + format_double(worst) : o.detail;
  return o;
}

// ---- 5 ----------------------------------------------------------------------------

Outcome dt_oracle() {
  Outcome o;
  std::mt19937_64 rng(505);
  int splits = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 7;  // <= 8 samples
    const std::size_t V = 1 + rng() % 3;  // <= 3 features
    oracle::Dense rows(n, std::vector<double>(V));
    std::vector<int> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& v : rows[i]) v = static_cast<double>(rng() % 4) * 0.25;
      y[i] = static_cast<int>(rng() % 2);
    }
    const auto model = dt_fit(oracle::sparsify(rows, V), y);
    const auto best = oracle::best_root_split(rows, y);
    const auto& root = model.nodes[0];
    const std::string where = "instance " + std::to_string(trial);
    if (!best.found) {
      o.require(root.is_leaf(), where + ": split made where none reduces impurity");
      continue;
    }
    ++splits;
    if (root.is_leaf()) {
      o.require(false, where + ": no split, oracle gain exists");
      continue;
    }
    const auto& l = model.nodes[static_cast<std::size_t>(root.left)];
    const auto& r = model.nodes[static_cast<std::size_t>(root.right)];
    const double nl = static_cast<double>(l.counts[0] + l.counts[1]);
    const double nr = static_cast<double>(r.counts[0] + r.counts[1]);
    const double weighted = (nl * oracle::gini(static_cast<double>(l.counts[1]), static_cast<double>(l.counts[0])) +
                             nr * oracle::gini(static_cast<double>(r.counts[1]), static_cast<double>(r.counts[0]))) /
                            static_cast<double>(n);
    o.require(std::abs(weighted - best.weighted_gini) <= 1e-12,
              where + ": weighted gini " + format_double(weighted) + " vs " + format_double(best.weighted_gini));
    o.require(static_cast<std::size_t>(root.feature) == best.feature && root.threshold == best.threshold,
              where + ": tie rule picked feature " + std::to_string(root.feature) + " at " +
                  format_double(root.threshold));
  }
  if (o.pass) o.detail = std::to_string(splits) + " of 200 instances split";
  return o;
}

// ---- 6 ----------------------------------------------------------------------------

Outcome lr_checks() {
  Outcome o;
  std::mt19937_64 rng(606);
  std::normal_distribution<double> nd(0.0, 1.0);
  const std::size_t n = 25, V = 4;
  oracle::Dense rows(n, std::vector<double>(V));
  std::vector<int> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& v : rows[i]) v = nd(rng);
    y[i] = static_cast<int>(rng() % 2);
  }
  const auto X = oracle::sparsify(rows, V);
  const double l2 = 1e-3, h = 1e-5;
  double worst = 0.0;
  for (int point = 0; point < 10; ++point) {
    std::vector<double> w(V);
    for (auto& v : w) v = nd(rng);
    const double b = nd(rng);
    const auto g = lr_loss_and_gradient(w, b, X, y, l2);
    auto rel = [](double a, double e) { return std::abs(a - e) / std::max(1e-12, std::max(std::abs(a), std::abs(e))); };
    for (std::size_t j = 0; j <= V; ++j) {
      auto wp = w, wm = w;
      double bp = b, bm = b;
      if (j < V) {
        wp[j] += h;
        wm[j] -= h;
      } else {
        bp += h;
        bm -= h;
      }
      const double fd = (oracle::logistic_loss(wp, bp, rows, y, l2) - oracle::logistic_loss(wm, bm, rows, y, l2)) / (2 * h);
      worst = std::max(worst, rel(j < V ? g.d_weights[j] : g.d_bias, fd));
    }
  }
  o.require(worst <= 1e-6, "max relative gradient error " + format_double(worst));

  // two well separated blobs in two features
  oracle::Dense sep;
  std::vector<int> ys;
  std::normal_distribution<double> noise(0.0, 0.3);
  for (int i = 0; i < 60; ++i) {
    const int label = i % 2;
    const double c = label ? 1.0 : -1.0;
    sep.push_back({c + noise(rng), c + noise(rng)});
    ys.push_back(label);
  }
  const auto Xs = oracle::sparsify(sep, 2);
  const auto model = lr_fit(Xs, ys);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    correct += to_int(predict_label(ClassifierModel{model}, Xs.rows[i])) == ys[i];
  }
  o.require(correct == ys.size(), "training accuracy " + std::to_string(correct) + "/" + std::to_string(ys.size()));
  if (o.pass) o.detail = "max relative gradient error " + format_double(worst);
  return o;
}

// ---- 7 ----------------------------------------------------------------------------

Outcome auc_oracle() {
  Outcome o;
  std::mt19937_64 rng(707);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 199;  // <= 200
    std::vector<int> y(n);
    std::vector<double> s(n);
    const std::size_t levels = 2 + rng() % 20;  // few levels force ties
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = i < 2 ? static_cast<int>(i) : static_cast<int>(rng() % 2);
      s[i] = static_cast<double>(rng() % levels) / static_cast<double>(levels);
    }
    worst = std::max(worst, std::abs(roc_curve(y, s).auc - oracle::pairwise_auc(y, s)));
  }
  o.require(worst <= 1e-12, "max deviation " + format_double(worst));
  if (o.pass) o.detail = "max deviation " + format_double(worst);
  return o;
}

// ---- 8 ----------------------------------------------------------------------------

Outcome kfold_properties() {
  Outcome o;
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 300;
    const std::size_t k = 2 + rng() % std::min<std::size_t>(n - 1, 10);
    std::vector<int> labels(n);
    const std::size_t share = rng() % 101;
    std::size_t n1 = 0;
    for (auto& l : labels) n1 += static_cast<std::size_t>(l = (rng() % 100) < share);
    const bool stratified = trial % 3 != 0;
    const CvConfig cfg{k, rng(), stratified};
    const auto plan = kfold_partition(n, labels, cfg);
    const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k);

    std::vector<int> seen(n, 0);
    std::size_t lo = n, hi = 0;
    for (const auto& f : plan.folds) {
      for (auto i : f) ++seen[i];
      lo = std::min(lo, f.size());
      hi = std::max(hi, f.size());
    }
    o.require(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }),
              where + ": folds not a partition");
    o.require(hi - lo <= 1, where + ": fold sizes differ by " + std::to_string(hi - lo));
    o.require(kfold_partition(n, labels, cfg).folds == plan.folds, where + ": not deterministic");
    if (!stratified) continue;
    for (const auto& f : plan.folds) {
      std::size_t ones = 0;
      for (auto i : f) ones += static_cast<std::size_t>(labels[i]);
      const double ideal1 = static_cast<double>(n1) / static_cast<double>(k);
      const double ideal0 = static_cast<double>(n - n1) / static_cast<double>(k);
      o.require(std::abs(static_cast<double>(ones) - ideal1) < 1.0 &&
                    std::abs(static_cast<double>(f.size() - ones) - ideal0) < 1.0,
                where + ": class count off by a full sample");
    }
  }
  return o;
}

// ---- 9 and 11: the pipeline on the bundled corpus -------------------------------------

KeyValueConfig bundled_settings(const fs::path& out, std::size_t workers) {
  std::ifstream in(fs::path(TWEETSENT_CONFIG_DIR) / "synthetic.conf");
  if (!in) fail(ErrorKind::Io, "bundled config missing");
  auto kv = KeyValueConfig::parse(in, "synthetic.conf");
  const fs::path data = TWEETSENT_DATA_DIR;
  kv.set("input.corpus", (data / "synthetic_corpus.csv").string());
  kv.set("input.positive", (data / "positive-words.txt").string());
  kv.set("input.negative", (data / "negative-words.txt").string());
  kv.set("input.stopwords", (data / "stopwords.txt").string());
  kv.set("output.dir", out.string());
  kv.set("workers", std::to_string(workers));
  return kv;
}

std::map<std::string, double> read_accuracies(const fs::path& summary) {
  std::ifstream in(summary);
  std::string line;
  std::getline(in, line);
  std::map<std::string, double> acc;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string model, value;
    std::getline(row, model, ',');
    std::getline(row, value, ',');
    acc[model] = std::stod(value);
  }
  return acc;
}

Outcome synthetic_pipeline(const fs::path& root) {
  Outcome o;
  const auto out = root / "criterion9";
  fs::remove_all(out);
  const auto cfg = PipelineConfig::from_settings(bundled_settings(out, 1));
  std::ostringstream log;
  const auto start = std::chrono::steady_clock::now();
  for (const char* s : {"ingest", "label", "featurize", "train", "evaluate"}) run_subcommand(s, cfg, log);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  auto acc = read_accuracies(out / artifact::kSummary);
  const double nb = acc["naive_bayes"], dt = acc["decision_tree"], rf = acc["random_forest"],
               lr = acc["logistic_regression"];
  o.require(acc.size() == 4, "summary does not list four models");
  o.require(rf >= dt - 0.02, "RF " + fmt(rf, 4) + " < DT " + fmt(dt, 4) + " - 0.02");
  o.require(rf > nb, "RF " + fmt(rf, 4) + " <= NB " + fmt(nb, 4));
  for (const auto& [name, a] : acc) o.require(a >= 0.80, name + " accuracy " + fmt(a, 4) + " < 0.80");
  o.require(seconds < 60.0, "took " + fmt(seconds, 1) + " s");
  o.detail = "NB " + fmt(nb, 4) + ", DT " + fmt(dt, 4) + ", RF " + fmt(rf, 4) + ", LR " + fmt(lr, 4) + " in " +
             fmt(seconds, 1) + " s" + (o.pass ? "" : "; " + o.detail);
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(const fs::path& root) {
  Outcome o;
  std::vector<fs::path> dirs;
  for (std::size_t workers : {1u, 4u}) {
    const auto out = root / ("criterion11_w" + std::to_string(workers));
    fs::remove_all(out);
    const auto cfg = PipelineConfig::from_settings(bundled_settings(out, workers));
    std::ostringstream log;
    for (const char* s : {"ingest", "label", "evaluate", "report"}) run_subcommand(s, cfg, log);
    dirs.push_back(out);
  }
  std::size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(dirs[0])) {
    const auto ext = entry.path().extension();
    if (ext != ".csv" && ext != ".svg") continue;
    const auto twin = dirs[1] / entry.path().filename();
    o.require(fs::exists(twin), "missing " + twin.filename().string() + " in second run");
    o.require(slurp(entry.path()) == slurp(twin), entry.path().filename().string() + " differs");
    ++compared;
  }
  o.require(compared >= 10, "only " + std::to_string(compared) + " artifacts compared");
  if (o.pass) o.detail = std::to_string(compared) + " CSV/SVG artifacts identical across --workers 1 and 4";
  return o;
}

// ---- 10 -----------------------------------------------------------------------------

Outcome porter_pairs() {
  Outcome o;
  // Each pair follows the 1980 rule tables step by step.
  const std::pair<const char*, const char*> pairs[] = {
      {"caresses", "caress"},     {"ponies", "poni"},         {"ties", "ti"},
      {"caress", "caress"},       {"cats", "cat"},            {"feed", "feed"},
      {"agreed", "agre"},         {"plastered", "plaster"},   {"bled", "bled"},
      {"motoring", "motor"},      {"sing", "sing"},           {"conflated", "conflat"},
      {"troubled", "troubl"},     {"sized", "size"},          {"hopping", "hop"},
      {"tanned", "tan"},          {"falling", "fall"},        {"hissing", "hiss"},
      {"fizzed", "fizz"},         {"failing", "fail"},        {"filing", "file"},
      {"happy", "happi"},         {"sky", "sky"},             {"relational", "relat"},
      {"conditional", "condit"},  {"rational", "ration"},     {"generalization", "gener"},
      {"oscillators", "oscil"},   {"running", "run"},         {"electricity", "electr"},
  };
  static_assert(std::size(pairs) == 30);
  std::size_t ok = 0;
  for (const auto& [word, want] : pairs) {
    const auto got = stem(word);
    o.require(got == want, std::string(word) + " -> " + got + ", expected " + want);
    ok += got == want;
  }
  o.detail = std::to_string(ok) + "/30 pairs" + (o.pass ? "" : "; " + o.detail);
  return o;
}

}  // namespace

int main() {
  const fs::path scratch = fs::temp_directory_path() / "tweetsent_acceptance";
  fs::create_directories(scratch);

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;  // 0 = no runtime bound
  };
  const std::vector<Criterion> criteria = {
      {1, "classification report macro and weighted averages", report_averages, 1.0},
      {2, "tf-idf worked example", tfidf_example, 1.0},
      {3, "polarity threshold rule", polarity_rule, 1.0},
      {4, "naive Bayes vs counting oracle", nb_oracle, 0.0},
      {5, "decision tree root vs exhaustive split search", dt_oracle, 0.0},
      {6, "logistic gradient check and separable fit", lr_checks, 0.0},
      {7, "AUC vs pairwise concordance", auc_oracle, 0.0},
      {8, "k-fold partition properties", kfold_properties, 0.0},
      {9, "synthetic corpus pipeline accuracies", [&] { return synthetic_pipeline(scratch); }, 0.0},
      {10, "Porter stemmer rule traces", porter_pairs, 0.0},
      {11, "evaluate output determinism across workers", [&] { return determinism(scratch); }, 0.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome result;
    const auto start = std::chrono::steady_clock::now();
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      result.pass = false;
      result.detail += " (runtime " + fmt(seconds, 3) + " s over budget)";
    }
    failures += !result.pass;
    std::cout << (result.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name;
    if (!result.detail.empty()) std::cout << " -- " << result.detail;
    std::cout << " [" << fmt(seconds, 3) << " s]\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  fs::remove_all(scratch);
  return failures ? 1 : 0;
}
