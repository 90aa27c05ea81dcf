#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tweetsent/corpus.hpp"
#include "tweetsent/features.hpp"

namespace tweetsent {

// ---- multinomial naive Bayes ------------------------------------------------

struct NaiveBayesModel {
  double alpha = 1.0;
  std::array<double, 2> log_prior{};                  // indexed by class 0 / 1
  std::array<std::vector<double>, 2> log_likelihood;  // [class][term]

  std::size_t n_features() const { return log_likelihood[0].size(); }
};

/// `counts` rows hold raw term counts. Both classes must be present.
/// With alpha = 0 a term never seen in a class gets likelihood 0 (log -inf)
/// for that class; documents containing it can then never be assigned there.
NaiveBayesModel nb_fit(const FeatureMatrix& counts, const std::vector<int>& y, double alpha = 1.0);

// ---- CART decision tree ------------------------------------------------------

/// 1 - p1^2 - p0^2 for a node holding the given class counts.
double gini_impurity(std::size_t count1, std::size_t count0);

struct TreeConfig {
  std::optional<std::size_t> max_depth;  // nullopt = unbounded
  std::size_t min_samples_leaf = 1;
};

struct TreeNode {
  static constexpr std::int32_t kLeaf = -1;

  std::int32_t feature = kLeaf;  // kLeaf for leaves
  double threshold = 0.0;        // samples with x[feature] <= threshold go left
  std::int32_t left = -1;
  std::int32_t right = -1;
  std::array<std::size_t, 2> counts{};  // training samples per class (0, 1)

  bool is_leaf() const { return feature == kLeaf; }
  double positive_fraction() const {
    return static_cast<double>(counts[1]) / static_cast<double>(counts[0] + counts[1]);
  }
};

struct DecisionTreeModel {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  TreeConfig config;
  std::size_t n_features = 0;

  std::size_t depth() const;
  const TreeNode& leaf_for(const SparseVector& x) const;
};

/// Exhaustive CART search: at each node every candidate feature is scanned
/// over midpoints of consecutive distinct values; the split with the lowest
/// weighted child Gini wins, ties going to the lower feature index, then the
/// lower threshold. Splits must strictly reduce impurity.
DecisionTreeModel dt_fit(const FeatureMatrix& X, const std::vector<int>& y,
                         const TreeConfig& config = {});

// ---- random forest -----------------------------------------------------------

struct ForestConfig {
  std::size_t n_trees = 50;
  std::optional<std::size_t> features_per_split;  // default ceil(sqrt(V))
  bool bootstrap = true;
  std::uint64_t seed = 0;
  TreeConfig tree;
};

struct RandomForestModel {
  std::vector<DecisionTreeModel> trees;
  std::vector<std::uint64_t> tree_seeds;
  std::size_t features_per_split = 0;
  ForestConfig config;
  std::size_t n_features = 0;
};

/// Trees are independent given (seed, tree index); `workers` only changes
/// wall-clock time.
RandomForestModel rf_fit(const FeatureMatrix& X, const std::vector<int>& y,
                         const ForestConfig& config = {}, std::size_t workers = 1);

// ---- logistic regression ------------------------------------------------------

struct LogisticConfig {
  double learning_rate = 0.1;
  std::size_t epochs = 500;
  double l2 = 1e-4;
  std::uint64_t seed = 0;  // recorded for reproducibility; initialisation is zero
};

struct LogisticModel {
  std::vector<double> weights;
  double bias = 0.0;
  LogisticConfig config;
  std::vector<double> loss_history;  // loss before each update, then final loss

  std::size_t n_features() const { return weights.size(); }
};

struct LogisticGradient {
  double loss = 0.0;
  std::vector<double> d_weights;
  double d_bias = 0.0;
};

/// Mean cross-entropy + (l2 / 2) * |w|^2 and its gradient.
LogisticGradient lr_loss_and_gradient(const std::vector<double>& weights, double bias,
                                      const FeatureMatrix& X, const std::vector<int>& y,
                                      double l2);

/// Full-batch gradient descent from zero weights. Throws Numeric when the
/// loss becomes non-finite or exceeds ten times its initial value.
LogisticModel lr_fit(const FeatureMatrix& X, const std::vector<int>& y,
                     const LogisticConfig& config = {});

// ---- common interface ------------------------------------------------------------

enum class ModelKind { NaiveBayes, DecisionTree, RandomForest, Logistic };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);

/// Naive Bayes consumes raw counts; the other models consume tf-idf.
inline bool uses_counts(ModelKind kind) { return kind == ModelKind::NaiveBayes; }

using ClassifierModel =
    std::variant<NaiveBayesModel, DecisionTreeModel, RandomForestModel, LogisticModel>;

ModelKind kind_of(const ClassifierModel& model);
std::size_t n_features(const ClassifierModel& model);

double predict_score(const NaiveBayesModel& model, const SparseVector& x);
double predict_score(const DecisionTreeModel& model, const SparseVector& x);
double predict_score(const RandomForestModel& model, const SparseVector& x);
double predict_score(const LogisticModel& model, const SparseVector& x);

/// Class-1 score in [0, 1]. Throws Data when x has an index >= V.
double predict_score(const ClassifierModel& model, const SparseVector& x);

/// Positive iff predict_score >= threshold.
SentimentLabel predict_label(const ClassifierModel& model, const SparseVector& x,
                             double threshold = 0.5);

struct ModelParams {
  double nb_alpha = 1.0;
  TreeConfig tree{std::size_t{20}, 1};
  ForestConfig forest;
  LogisticConfig logistic;
};

/// Fits the model of `kind`. `X` must already be in the representation the
/// model consumes (see uses_counts).
ClassifierModel fit_model(ModelKind kind, const FeatureMatrix& X, const std::vector<int>& y,
                          const ModelParams& params, std::size_t workers = 1);

/// Versioned text serialisation; reloading reproduces predictions bit for bit.
void save_model(const ClassifierModel& model, std::ostream& out);
ClassifierModel load_model(std::istream& in);

}  // namespace tweetsent
