#include <algorithm>
#include <cmath>

#include "tweetsent/classifiers.hpp"
#include "tweetsent/error.hpp"

namespace tweetsent {

namespace {

// log(1 + e^z) without overflow
double softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z))); }

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double dot(const std::vector<double>& w, const SparseVector& x) {
  double s = 0.0;
  for (const auto& e : x) s += w[e.index] * e.value;
  return s;
}

}  // namespace

LogisticGradient lr_loss_and_gradient(const std::vector<double>& weights, double bias,
                                      const FeatureMatrix& X, const std::vector<int>& y,
                                      double l2) {
  if (X.n_rows() != y.size()) fail(ErrorKind::Data, "logistic: X and y lengths differ");
  if (y.empty()) fail(ErrorKind::Data, "logistic: need at least one sample");
  if (weights.size() != X.n_cols) fail(ErrorKind::Data, "logistic: weight length differs from V");

  LogisticGradient g;
  g.d_weights.assign(weights.size(), 0.0);
  const double inv_n = 1.0 / static_cast<double>(y.size());

  double data_loss = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double z = dot(weights, X.rows[i]) + bias;
    const double target = y[i] ? 1.0 : 0.0;
    data_loss += softplus(z) - target * z;
    const double residual = sigmoid(z) - target;
    for (const auto& e : X.rows[i]) g.d_weights[e.index] += residual * e.value;
    g.d_bias += residual;
  }

  double sq = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    sq += weights[j] * weights[j];
    g.d_weights[j] = g.d_weights[j] * inv_n + l2 * weights[j];
  }
  g.d_bias *= inv_n;
  g.loss = data_loss * inv_n + 0.5 * l2 * sq;
  return g;
}

LogisticModel lr_fit(const FeatureMatrix& X, const std::vector<int>& y,
                     const LogisticConfig& config) {
  if (!(config.learning_rate > 0.0)) fail(ErrorKind::Config, "lr_fit: learning_rate must be > 0");
  if (!(config.l2 >= 0.0)) fail(ErrorKind::Config, "lr_fit: l2 must be >= 0");
  for (const auto& row : X.rows) {
    for (const auto& e : row) {
      if (!std::isfinite(e.value)) fail(ErrorKind::Data, "lr_fit: non-finite feature value");
    }
  }

  LogisticModel model;
  model.config = config;
  model.weights.assign(X.n_cols, 0.0);
  model.loss_history.reserve(config.epochs + 1);

  double initial = 0.0;
  for (std::size_t epoch = 0;; ++epoch) {
    const auto g = lr_loss_and_gradient(model.weights, model.bias, X, y, config.l2);
    if (!std::isfinite(g.loss)) {
      fail(ErrorKind::Numeric, "lr_fit: non-finite loss at epoch " + std::to_string(epoch));
    }
    if (epoch == 0) initial = g.loss;
    if (g.loss > 10.0 * initial) {
      fail(ErrorKind::Numeric, "lr_fit: loss diverged at epoch " + std::to_string(epoch) +
                                   " (try a smaller learning rate)");
    }
    model.loss_history.push_back(g.loss);
    if (epoch == config.epochs) break;

    for (std::size_t j = 0; j < model.weights.size(); ++j) {
      model.weights[j] -= config.learning_rate * g.d_weights[j];
    }
    model.bias -= config.learning_rate * g.d_bias;
  }
  return model;
}

double predict_score(const LogisticModel& model, const SparseVector& x) {
  return sigmoid(dot(model.weights, x) + model.bias);
}

}  // namespace tweetsent
