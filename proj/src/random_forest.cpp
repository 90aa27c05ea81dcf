#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "tree_builder.hpp"
#include "tweetsent/error.hpp"
#include "tweetsent/parallel.hpp"
#include "tweetsent/seed.hpp"

namespace tweetsent {

RandomForestModel rf_fit(const FeatureMatrix& X, const std::vector<int>& y,
                         const ForestConfig& config, std::size_t workers) {
  if (X.n_rows() != y.size()) fail(ErrorKind::Data, "rf_fit: X and y lengths differ");
  if (y.empty()) fail(ErrorKind::Data, "rf_fit: need at least one sample");
  if (config.n_trees < 1) fail(ErrorKind::Config, "rf_fit: n_trees must be >= 1");

  const std::size_t v = X.n_cols;
  if (v == 0) fail(ErrorKind::Data, "rf_fit: no features");
  const std::size_t per_split =
      config.features_per_split.value_or(static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(v)))));
  if (per_split < 1 || per_split > v) {
    fail(ErrorKind::Config, "rf_fit: features_per_split must lie in [1, V]");
  }

  RandomForestModel forest;
  forest.config = config;
  forest.features_per_split = per_split;
  forest.n_features = v;
  forest.trees.resize(config.n_trees);
  forest.tree_seeds.resize(config.n_trees);
  for (std::size_t t = 0; t < config.n_trees; ++t) {
    forest.tree_seeds[t] = indexed_seed(config.seed, t);
  }

  const detail::DenseColumns columns(X);
  const std::size_t n = y.size();

  parallel_for(config.n_trees, workers, [&](std::size_t t) {
    std::mt19937_64 rng(forest.tree_seeds[t]);

    std::vector<std::size_t> samples(n);
    if (config.bootstrap) {
      std::uniform_int_distribution<std::size_t> draw(0, n - 1);
      for (auto& s : samples) s = draw(rng);
    } else {
      std::iota(samples.begin(), samples.end(), 0);
    }

    std::vector<std::size_t> pool(v);
    std::iota(pool.begin(), pool.end(), 0);
    const detail::FeatureSampler sampler = [&](std::vector<std::size_t>& out) {
      if (per_split == v) {
        out.assign(pool.begin(), pool.end());
        std::sort(out.begin(), out.end());
        return;
      }
      // partial Fisher-Yates over the persistent pool
      for (std::size_t i = 0; i < per_split; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, v - 1);
        std::swap(pool[i], pool[pick(rng)]);
      }
      out.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(per_split));
      std::sort(out.begin(), out.end());
    };

    forest.trees[t] = detail::grow_tree(columns, y, std::move(samples), config.tree, sampler);
  });
  return forest;
}

double predict_score(const RandomForestModel& model, const SparseVector& x) {
  double sum = 0.0;
  for (const auto& tree : model.trees) sum += predict_score(tree, x);
  return sum / static_cast<double>(model.trees.size());
}

}  // namespace tweetsent
