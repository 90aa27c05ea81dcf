#include <cmath>
#include <limits>

#include "tweetsent/classifiers.hpp"
#include "tweetsent/error.hpp"

namespace tweetsent {

NaiveBayesModel nb_fit(const FeatureMatrix& counts, const std::vector<int>& y, double alpha) {
  if (counts.n_rows() != y.size()) fail(ErrorKind::Data, "nb_fit: X and y lengths differ");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) fail(ErrorKind::Config, "nb_fit: alpha must be >= 0");

  const std::size_t v = counts.n_cols;
  std::array<std::size_t, 2> docs{};
  std::array<std::vector<double>, 2> term_totals{std::vector<double>(v, 0.0),
                                                 std::vector<double>(v, 0.0)};
  std::array<double, 2> class_totals{};

  for (std::size_t i = 0; i < y.size(); ++i) {
    const int c = y[i] ? 1 : 0;
    ++docs[c];
    for (const auto& e : counts.rows[i]) {
      if (e.index >= v) fail(ErrorKind::Data, "nb_fit: feature index out of range");
      if (!(e.value >= 0.0) || !std::isfinite(e.value)) {
        fail(ErrorKind::Data, "nb_fit: counts must be finite and non-negative");
      }
      term_totals[c][e.index] += e.value;
      class_totals[c] += e.value;
    }
  }
  if (docs[0] == 0 || docs[1] == 0) fail(ErrorKind::Data, "nb_fit: both classes must be present");

  NaiveBayesModel model;
  model.alpha = alpha;
  const double n = static_cast<double>(y.size());
  for (int c = 0; c < 2; ++c) {
    model.log_prior[c] = std::log(static_cast<double>(docs[c]) / n);
    const double denom = class_totals[c] + alpha * static_cast<double>(v);
    auto& ll = model.log_likelihood[c];
    ll.resize(v);
    for (std::size_t t = 0; t < v; ++t) {
      const double num = term_totals[c][t] + alpha;
      ll[t] = (num == 0.0 || denom == 0.0) ? -std::numeric_limits<double>::infinity()
                                           : std::log(num / denom);
    }
  }
  return model;
}

double predict_score(const NaiveBayesModel& model, const SparseVector& x) {
  std::array<double, 2> joint = model.log_prior;
  for (int c = 0; c < 2; ++c) {
    for (const auto& e : x) {
      if (e.value != 0.0) joint[c] += e.value * model.log_likelihood[c][e.index];
    }
  }
  const bool dead0 = std::isinf(joint[0]) && joint[0] < 0;
  const bool dead1 = std::isinf(joint[1]) && joint[1] < 0;
  if (dead0 && dead1) return std::exp(model.log_prior[1]);  // no evidence either way
  if (dead1) return 0.0;
  if (dead0) return 1.0;
  // 1 / (1 + exp(j0 - j1)), evaluated without overflow
  const double d = joint[0] - joint[1];
  if (d >= 0) {
    const double e = std::exp(-d);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(d));
}

}  // namespace tweetsent
