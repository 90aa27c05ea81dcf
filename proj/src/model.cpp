#include <algorithm>
#include <sstream>

#include "tweetsent/classifiers.hpp"
#include "tweetsent/error.hpp"
#include "tweetsent/format.hpp"

namespace tweetsent {

namespace {

constexpr std::string_view kMagic = "tweetsent-model";
constexpr int kVersion = 1;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// ---- writing ----

void write_doubles(std::ostream& out, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ' ';
    out << format_double(values[i]);
  }
  out << '\n';
}

std::string depth_text(const std::optional<std::size_t>& d) {
  return d ? std::to_string(*d) : "none";
}

void write_tree(std::ostream& out, const DecisionTreeModel& tree) {
  out << "nodes " << tree.nodes.size() << '\n';
  for (const auto& n : tree.nodes) {
    out << n.feature << ' ' << format_double(n.threshold) << ' ' << n.left << ' ' << n.right
        << ' ' << n.counts[0] << ' ' << n.counts[1] << '\n';
  }
}

// ---- reading ----

class Tokens {
 public:
  explicit Tokens(std::istream& in) : in_(in) {}

  std::string word() {
    std::string w;
    if (!(in_ >> w)) fail(ErrorKind::Data, "model file truncated");
    return w;
  }
  void expect(std::string_view key) {
    const auto w = word();
    if (w != key) {
      fail(ErrorKind::Data, "model file: expected '" + std::string(key) + "', found '" + w + "'");
    }
  }
  double real() { return parse_double(word(), "model value"); }
  template <typename Int>
  Int integer() { return parse_int<Int>(word(), "model value"); }
  std::size_t size() { return integer<std::size_t>(); }

  std::size_t keyed_size(std::string_view key) {
    expect(key);
    return size();
  }
  double keyed_real(std::string_view key) {
    expect(key);
    return real();
  }
  std::optional<std::size_t> keyed_depth(std::string_view key) {
    expect(key);
    const auto w = word();
    if (w == "none") return std::nullopt;
    return parse_int<std::size_t>(w, key);
  }
  std::vector<double> reals(std::size_t n) {
    std::vector<double> out(n);
    for (auto& v : out) v = real();
    return out;
  }

 private:
  std::istream& in_;
};

DecisionTreeModel read_tree(Tokens& tok, std::size_t n_features, const TreeConfig& config) {
  DecisionTreeModel tree;
  tree.config = config;
  tree.n_features = n_features;
  const auto count = tok.keyed_size("nodes");
  if (count == 0) fail(ErrorKind::Data, "model file: tree without nodes");
  tree.nodes.resize(count);
  for (auto& n : tree.nodes) {
    n.feature = tok.integer<std::int32_t>();
    n.threshold = tok.real();
    n.left = tok.integer<std::int32_t>();
    n.right = tok.integer<std::int32_t>();
    n.counts[0] = tok.size();
    n.counts[1] = tok.size();
    if (n.counts[0] + n.counts[1] == 0) fail(ErrorKind::Data, "model file: empty tree node");
  }
  const auto bad_child = [&](std::int32_t c) {
    return c <= 0 || static_cast<std::size_t>(c) >= count;
  };
  for (const auto& n : tree.nodes) {
    if (n.is_leaf()) continue;
    if (n.feature < 0 || static_cast<std::size_t>(n.feature) >= n_features || bad_child(n.left) ||
        bad_child(n.right)) {
      fail(ErrorKind::Data, "model file: malformed tree node");
    }
  }
  return tree;
}

void check_features(const SparseVector& x, std::size_t v) {
  for (const auto& e : x) {
    if (e.index >= v) {
      fail(ErrorKind::Data, "feature index " + std::to_string(e.index) +
                                " out of range for model with V = " + std::to_string(v));
    }
  }
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::NaiveBayes: return "naive_bayes";
    case ModelKind::DecisionTree: return "decision_tree";
    case ModelKind::RandomForest: return "random_forest";
    case ModelKind::Logistic: return "logistic_regression";
  }
  return "naive_bayes";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "nb" || name == "naive_bayes") return ModelKind::NaiveBayes;
  if (name == "dt" || name == "decision_tree") return ModelKind::DecisionTree;
  if (name == "rf" || name == "random_forest") return ModelKind::RandomForest;
  if (name == "lr" || name == "logistic_regression") return ModelKind::Logistic;
  fail(ErrorKind::Config, "unknown model kind '" + std::string(name) + "'");
}

ModelKind kind_of(const ClassifierModel& model) {
  return static_cast<ModelKind>(model.index());
}

std::size_t n_features(const ClassifierModel& model) {
  return std::visit(overloaded{
                        [](const NaiveBayesModel& m) { return m.n_features(); },
                        [](const DecisionTreeModel& m) { return m.n_features; },
                        [](const RandomForestModel& m) { return m.n_features; },
                        [](const LogisticModel& m) { return m.n_features(); },
                    },
                    model);
}

double predict_score(const ClassifierModel& model, const SparseVector& x) {
  check_features(x, n_features(model));
  const double s = std::visit([&](const auto& m) { return predict_score(m, x); }, model);
  return std::clamp(s, 0.0, 1.0);
}

SentimentLabel predict_label(const ClassifierModel& model, const SparseVector& x,
                             double threshold) {
  return predict_score(model, x) >= threshold ? SentimentLabel::Positive
                                              : SentimentLabel::Negative;
}

ClassifierModel fit_model(ModelKind kind, const FeatureMatrix& X, const std::vector<int>& y,
                          const ModelParams& params, std::size_t workers) {
  switch (kind) {
    case ModelKind::NaiveBayes: return nb_fit(X, y, params.nb_alpha);
    case ModelKind::DecisionTree: return dt_fit(X, y, params.tree);
    case ModelKind::RandomForest: return rf_fit(X, y, params.forest, workers);
    case ModelKind::Logistic: return lr_fit(X, y, params.logistic);
  }
  fail(ErrorKind::Config, "unknown model kind");
}

void save_model(const ClassifierModel& model, std::ostream& out) {
  out << kMagic << ' ' << kVersion << '\n';
  out << "kind " << to_string(kind_of(model)) << '\n';
  std::visit(
      overloaded{
          [&](const NaiveBayesModel& m) {
            out << "n_features " << m.n_features() << '\n';
            out << "alpha " << format_double(m.alpha) << '\n';
            out << "log_prior " << format_double(m.log_prior[0]) << ' '
                << format_double(m.log_prior[1]) << '\n';
            for (int c = 0; c < 2; ++c) {
              out << "log_likelihood " << c << ' ';
              write_doubles(out, m.log_likelihood[c]);
            }
          },
          [&](const DecisionTreeModel& m) {
            out << "n_features " << m.n_features << '\n';
            out << "max_depth " << depth_text(m.config.max_depth) << '\n';
            out << "min_samples_leaf " << m.config.min_samples_leaf << '\n';
            write_tree(out, m);
          },
          [&](const RandomForestModel& m) {
            out << "n_features " << m.n_features << '\n';
            out << "n_trees " << m.trees.size() << '\n';
            out << "features_per_split " << m.features_per_split << '\n';
            out << "bootstrap " << (m.config.bootstrap ? 1 : 0) << '\n';
            out << "seed " << m.config.seed << '\n';
            out << "max_depth " << depth_text(m.config.tree.max_depth) << '\n';
            out << "min_samples_leaf " << m.config.tree.min_samples_leaf << '\n';
            for (std::size_t t = 0; t < m.trees.size(); ++t) {
              out << "tree " << t << ' ' << m.tree_seeds[t] << '\n';
              write_tree(out, m.trees[t]);
            }
          },
          [&](const LogisticModel& m) {
            out << "n_features " << m.n_features() << '\n';
            out << "learning_rate " << format_double(m.config.learning_rate) << '\n';
            out << "epochs " << m.config.epochs << '\n';
            out << "l2 " << format_double(m.config.l2) << '\n';
            out << "seed " << m.config.seed << '\n';
            out << "bias " << format_double(m.bias) << '\n';
            out << "weights ";
            write_doubles(out, m.weights);
          },
      },
      model);
  if (!out) fail(ErrorKind::Io, "failed writing model");
}

ClassifierModel load_model(std::istream& in) {
  if (!in) fail(ErrorKind::Io, "cannot read model");
  Tokens tok(in);
  tok.expect(kMagic);
  const auto version = tok.integer<int>();
  if (version != kVersion) fail(ErrorKind::Data, "unsupported model version " + std::to_string(version));
  tok.expect("kind");
  const auto kind = parse_model_kind(tok.word());
  const auto v = tok.keyed_size("n_features");

  switch (kind) {
    case ModelKind::NaiveBayes: {
      NaiveBayesModel m;
      m.alpha = tok.keyed_real("alpha");
      tok.expect("log_prior");
      m.log_prior = {tok.real(), tok.real()};
      for (int c = 0; c < 2; ++c) {
        tok.expect("log_likelihood");
        if (tok.integer<int>() != c) fail(ErrorKind::Data, "model file: class rows out of order");
        m.log_likelihood[c] = tok.reals(v);
      }
      return m;
    }
    case ModelKind::DecisionTree: {
      TreeConfig cfg;
      cfg.max_depth = tok.keyed_depth("max_depth");
      cfg.min_samples_leaf = tok.keyed_size("min_samples_leaf");
      return read_tree(tok, v, cfg);
    }
    case ModelKind::RandomForest: {
      RandomForestModel m;
      m.n_features = v;
      const auto n_trees = tok.keyed_size("n_trees");
      m.features_per_split = tok.keyed_size("features_per_split");
      m.config.n_trees = n_trees;
      m.config.features_per_split = m.features_per_split;
      m.config.bootstrap = tok.keyed_size("bootstrap") != 0;
      tok.expect("seed");
      m.config.seed = tok.integer<std::uint64_t>();
      m.config.tree.max_depth = tok.keyed_depth("max_depth");
      m.config.tree.min_samples_leaf = tok.keyed_size("min_samples_leaf");
      if (n_trees == 0) fail(ErrorKind::Data, "model file: forest without trees");
      for (std::size_t t = 0; t < n_trees; ++t) {
        tok.expect("tree");
        if (tok.size() != t) fail(ErrorKind::Data, "model file: trees out of order");
        m.tree_seeds.push_back(tok.integer<std::uint64_t>());
        m.trees.push_back(read_tree(tok, v, m.config.tree));
      }
      return m;
    }
    case ModelKind::Logistic: {
      LogisticModel m;
      m.config.learning_rate = tok.keyed_real("learning_rate");
      m.config.epochs = tok.keyed_size("epochs");
      m.config.l2 = tok.keyed_real("l2");
      tok.expect("seed");
      m.config.seed = tok.integer<std::uint64_t>();
      m.bias = tok.keyed_real("bias");
      tok.expect("weights");
      m.weights = tok.reals(v);
      return m;
    }
  }
  fail(ErrorKind::Data, "unknown model kind");
}

}  // namespace tweetsent
