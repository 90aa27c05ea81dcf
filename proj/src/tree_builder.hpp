#pragma once

// Internal CART grower shared by the single tree and the forest.

#include <cstddef>
#include <functional>
#include <vector>

#include "tweetsent/classifiers.hpp"

namespace tweetsent::detail {

/// Column-major dense copy of a feature matrix.
class DenseColumns {
 public:
  explicit DenseColumns(const FeatureMatrix& X);

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return n_cols_; }
  double at(std::size_t row, std::size_t col) const { return data_[col * n_rows_ + row]; }

 private:
  std::size_t n_rows_;
  std::size_t n_cols_;
  std::vector<double> data_;
};

/// Fills `out` with the candidate features for one split, ascending.
using FeatureSampler = std::function<void(std::vector<std::size_t>& out)>;

/// Grows a tree over `samples` (row indices into `columns`; repeats allowed
/// and weigh as separate samples).
DecisionTreeModel grow_tree(const DenseColumns& columns, const std::vector<int>& y,
                            std::vector<std::size_t> samples, const TreeConfig& config,
                            const FeatureSampler& sampler);

}  // namespace tweetsent::detail
