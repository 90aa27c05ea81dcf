#include <algorithm>
#include <numeric>

#include "tree_builder.hpp"
#include "tweetsent/error.hpp"

namespace tweetsent {

double gini_impurity(std::size_t count1, std::size_t count0) {
  const std::size_t n = count1 + count0;
  if (n == 0) fail(ErrorKind::Data, "gini_impurity: node holds no samples");
  const double p1 = static_cast<double>(count1) / static_cast<double>(n);
  const double p0 = static_cast<double>(count0) / static_cast<double>(n);
  return 1.0 - p1 * p1 - p0 * p0;
}

std::size_t DecisionTreeModel::depth() const {
  if (nodes.empty()) return 0;
  std::size_t best = 0;
  std::vector<std::pair<std::int32_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [id, d] = stack.back();
    stack.pop_back();
    const auto& node = nodes[static_cast<std::size_t>(id)];
    best = std::max(best, d);
    if (!node.is_leaf()) {
      stack.emplace_back(node.left, d + 1);
      stack.emplace_back(node.right, d + 1);
    }
  }
  return best;
}

namespace {

double feature_value(const SparseVector& x, std::size_t feature) {
  auto it = std::lower_bound(x.begin(), x.end(), feature,
                             [](const SparseEntry& e, std::size_t f) { return e.index < f; });
  return (it != x.end() && it->index == feature) ? it->value : 0.0;
}

}  // namespace

const TreeNode& DecisionTreeModel::leaf_for(const SparseVector& x) const {
  const TreeNode* node = &nodes.front();
  while (!node->is_leaf()) {
    const double v = feature_value(x, static_cast<std::size_t>(node->feature));
    node = &nodes[static_cast<std::size_t>(v <= node->threshold ? node->left : node->right)];
  }
  return *node;
}

double predict_score(const DecisionTreeModel& model, const SparseVector& x) {
  return model.leaf_for(x).positive_fraction();
}

namespace detail {

DenseColumns::DenseColumns(const FeatureMatrix& X)
    : n_rows_(X.n_rows()), n_cols_(X.n_cols), data_(X.n_rows() * X.n_cols, 0.0) {
  for (std::size_t r = 0; r < n_rows_; ++r) {
    for (const auto& e : X.rows[r]) {
      if (e.index >= n_cols_) fail(ErrorKind::Data, "feature index out of range");
      data_[e.index * n_rows_ + r] = e.value;
    }
  }
}

namespace {

using Wide = __int128;

// Weighted child Gini is  1 - purity / n  with
//   purity = (aL^2 + bL^2) / nL + (aR^2 + bR^2) / nR,
// so minimising Gini maximises purity. Purity is kept as an exact fraction
// num / den so that ties are detected exactly.
struct Purity {
  Wide num = 0;
  Wide den = 1;

  static Purity of_split(std::size_t l0, std::size_t l1, std::size_t r0, std::size_t r1) {
    const Wide nl = static_cast<Wide>(l0 + l1);
    const Wide nr = static_cast<Wide>(r0 + r1);
    const Wide sl = static_cast<Wide>(l0) * l0 + static_cast<Wide>(l1) * l1;
    const Wide sr = static_cast<Wide>(r0) * r0 + static_cast<Wide>(r1) * r1;
    return {sl * nr + sr * nl, nl * nr};
  }
  static Purity of_node(std::size_t c0, std::size_t c1) {
    return {static_cast<Wide>(c0) * c0 + static_cast<Wide>(c1) * c1, static_cast<Wide>(c0 + c1)};
  }
  bool operator>(const Purity& o) const { return num * o.den > o.num * den; }
};

struct Split {
  std::size_t feature = 0;
  double threshold = 0.0;
  Purity purity;
};

class Grower {
 public:
  Grower(const DenseColumns& columns, const std::vector<int>& y, const TreeConfig& config,
         const FeatureSampler& sampler)
      : columns_(columns), y_(y), config_(config), sampler_(sampler) {}

  DecisionTreeModel run(std::vector<std::size_t> samples) {
    DecisionTreeModel model;
    model.config = config_;
    model.n_features = columns_.n_cols();
    nodes_.clear();
    grow(samples, 0);
    model.nodes = std::move(nodes_);
    return model;
  }

 private:
  const DenseColumns& columns_;
  const std::vector<int>& y_;
  const TreeConfig& config_;
  const FeatureSampler& sampler_;
  std::vector<TreeNode> nodes_;
  std::vector<std::size_t> candidates_;
  std::vector<std::pair<double, int>> scratch_;

  std::int32_t grow(std::vector<std::size_t>& samples, std::size_t depth) {
    const auto id = static_cast<std::int32_t>(nodes_.size());
    nodes_.emplace_back();
    std::array<std::size_t, 2> counts{};
    for (auto s : samples) ++counts[y_[s] ? 1 : 0];
    nodes_.back().counts = counts;

    const bool depth_left = !config_.max_depth || depth < *config_.max_depth;
    const bool pure = counts[0] == 0 || counts[1] == 0;
    if (!depth_left || pure || samples.size() < 2 * std::max<std::size_t>(1, config_.min_samples_leaf)) {
      return id;
    }

    const auto split = best_split(samples, counts);
    if (!split) return id;

    std::vector<std::size_t> left, right;
    for (auto s : samples) {
      (columns_.at(s, split->feature) <= split->threshold ? left : right).push_back(s);
    }
    samples.clear();
    samples.shrink_to_fit();

    const auto l = grow(left, depth + 1);
    const auto r = grow(right, depth + 1);
    auto& node = nodes_[static_cast<std::size_t>(id)];
    node.feature = static_cast<std::int32_t>(split->feature);
    node.threshold = split->threshold;
    node.left = l;
    node.right = r;
    return id;
  }

  std::optional<Split> best_split(const std::vector<std::size_t>& samples,
                                  const std::array<std::size_t, 2>& counts) {
    const std::size_t min_leaf = std::max<std::size_t>(1, config_.min_samples_leaf);
    const std::size_t n = samples.size();
    std::optional<Split> best;
    Purity floor = Purity::of_node(counts[0], counts[1]);  // must be beaten strictly

    sampler_(candidates_);
    for (auto f : candidates_) {
      scratch_.clear();
      for (auto s : samples) scratch_.emplace_back(columns_.at(s, f), y_[s] ? 1 : 0);
      std::sort(scratch_.begin(), scratch_.end());

      std::array<std::size_t, 2> left{};
      for (std::size_t i = 0; i + 1 < n; ++i) {
        ++left[static_cast<std::size_t>(scratch_[i].second)];
        const double lo = scratch_[i].first;
        const double hi = scratch_[i + 1].first;
        if (!(lo < hi)) continue;
        const std::size_t n_left = i + 1;
        if (n_left < min_leaf || n - n_left < min_leaf) continue;

        const auto purity =
            Purity::of_split(left[0], left[1], counts[0] - left[0], counts[1] - left[1]);
        const Purity& bar = best ? best->purity : floor;
        if (purity > bar) {
          double t = lo + (hi - lo) / 2;
          if (!(t < hi)) t = lo;
          best = Split{f, t, purity};
        }
      }
    }
    return best;
  }
};

}  // namespace

DecisionTreeModel grow_tree(const DenseColumns& columns, const std::vector<int>& y,
                            std::vector<std::size_t> samples, const TreeConfig& config,
                            const FeatureSampler& sampler) {
  if (samples.empty()) fail(ErrorKind::Data, "cannot grow a tree on zero samples");
  return Grower(columns, y, config, sampler).run(std::move(samples));
}

}  // namespace detail

DecisionTreeModel dt_fit(const FeatureMatrix& X, const std::vector<int>& y,
                         const TreeConfig& config) {
  if (X.n_rows() != y.size()) fail(ErrorKind::Data, "dt_fit: X and y lengths differ");
  if (y.empty()) fail(ErrorKind::Data, "dt_fit: need at least one sample");
  const detail::DenseColumns columns(X);
  std::vector<std::size_t> samples(y.size());
  std::iota(samples.begin(), samples.end(), 0);
  const std::size_t v = X.n_cols;
  const detail::FeatureSampler all_features = [v](std::vector<std::size_t>& out) {
    out.resize(v);
    std::iota(out.begin(), out.end(), 0);
  };
  return detail::grow_tree(columns, y, std::move(samples), config, all_features);
}

}  // namespace tweetsent
