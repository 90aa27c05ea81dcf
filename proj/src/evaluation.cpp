#include "tweetsent/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "tweetsent/error.hpp"
#include "tweetsent/format.hpp"
#include "tweetsent/parallel.hpp"
#include "tweetsent/text_classifier.hpp"

namespace tweetsent {

FoldPlan kfold_partition(std::size_t n, const std::vector<int>& labels, const CvConfig& config) {
  if (config.k < 2) fail(ErrorKind::Config, "k-fold: k must be at least 2");
  if (config.k > n) {
    fail(ErrorKind::Config, "k-fold: k = " + std::to_string(config.k) + " exceeds sample count " +
                                std::to_string(n));
  }
  FoldPlan plan;
  std::mt19937_64 rng(config.seed);
  std::vector<std::size_t> order;
  order.reserve(n);

  if (config.stratified) {
    if (labels.size() != n) fail(ErrorKind::Data, "k-fold: labels must cover every sample");
    std::array<std::vector<std::size_t>, 2> groups;
    for (std::size_t i = 0; i < n; ++i) groups[labels[i] ? 1 : 0].push_back(i);
    for (int c = 0; c < 2; ++c) {
      std::shuffle(groups[c].begin(), groups[c].end(), rng);
      if (groups[c].size() < config.k) {
        plan.warnings.push_back("class " + std::to_string(c) + " has " +
                                std::to_string(groups[c].size()) + " members, fewer than k = " +
                                std::to_string(config.k));
      }
      order.insert(order.end(), groups[c].begin(), groups[c].end());
    }
  } else {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
  }

  plan.folds.resize(config.k);
  for (std::size_t p = 0; p < n; ++p) plan.folds[p % config.k].push_back(order[p]);
  for (auto& f : plan.folds) std::sort(f.begin(), f.end());
  return plan;
}

ConfusionMatrix confusion(const std::vector<int>& y_true, const std::vector<int>& y_pred) {
  if (y_true.size() != y_pred.size()) {
    fail(ErrorKind::Data, "confusion: y_true and y_pred lengths differ");
  }
  if (y_true.empty()) fail(ErrorKind::Data, "confusion: no samples");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const bool actual = y_true[i] != 0;
    const bool predicted = y_pred[i] != 0;
    if (actual && predicted) ++cm.tp;
    else if (!actual && predicted) ++cm.fp;
    else if (actual) ++cm.fn;
    else ++cm.tn;
  }
  return cm;
}

double f1_score(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

BinaryMetrics metrics(const ConfusionMatrix& cm) {
  const auto total = cm.total();
  if (total == 0) fail(ErrorKind::Data, "metrics: empty confusion matrix");
  BinaryMetrics m;
  m.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(total);
  if (cm.tp + cm.fp > 0) {
    m.precision = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
  } else {
    m.precision_degenerate = true;
  }
  if (cm.tp + cm.fn > 0) {
    m.recall = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
  } else {
    m.recall_degenerate = true;
  }
  m.f1 = f1_score(m.precision, m.recall);
  m.f1_degenerate = m.precision + m.recall == 0.0;
  return m;
}

ClassificationReport classification_report(const ClassMetrics& positive,
                                           const ClassMetrics& negative) {
  const auto total = positive.support + negative.support;
  if (total == 0) fail(ErrorKind::Data, "classification report: total support is zero");

  ClassificationReport r;
  r.positive = positive;
  r.negative = negative;
  r.macro = {(positive.precision + negative.precision) / 2.0,
             (positive.recall + negative.recall) / 2.0, (positive.f1 + negative.f1) / 2.0, total};

  const double w1 = static_cast<double>(positive.support);
  const double w0 = static_cast<double>(negative.support);
  const double n = static_cast<double>(total);
  r.weighted = {(positive.precision * w1 + negative.precision * w0) / n,
                (positive.recall * w1 + negative.recall * w0) / n,
                (positive.f1 * w1 + negative.f1 * w0) / n, total};
  r.accuracy = r.weighted.recall;
  return r;
}

ClassificationReport classification_report(const ConfusionMatrix& cm) {
  const auto pos = metrics(cm);
  const auto neg = metrics(cm.swapped());
  auto r = classification_report({pos.precision, pos.recall, pos.f1, cm.tp + cm.fn},
                                 {neg.precision, neg.recall, neg.f1, cm.tn + cm.fp});
  // (TP + TN) / n exactly; rounding in the support-weighted sum would
  // otherwise break the weighted-recall identity by an ulp
  r.accuracy = pos.accuracy;
  r.weighted.recall = pos.accuracy;
  return r;
}

namespace {

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string rounded(double v, int digits) { return format_fixed(round_half_up(v, digits), digits); }

}  // namespace

std::string render_report_text(const ClassificationReport& r, int digits) {
  constexpr std::size_t kLabel = 12;
  constexpr std::size_t kCol = 10;
  std::ostringstream out;
  out << pad_left("", kLabel) << pad_left("precision", kCol) << pad_left("recall", kCol)
      << pad_left("f1-score", kCol) << pad_left("support", kCol) << "\n\n";
  auto row = [&](const std::string& name, const ClassMetrics& m) {
    out << pad_left(name, kLabel) << pad_left(rounded(m.precision, digits), kCol)
        << pad_left(rounded(m.recall, digits), kCol) << pad_left(rounded(m.f1, digits), kCol)
        << pad_left(std::to_string(m.support), kCol) << '\n';
  };
  row("1", r.positive);
  row("0", r.negative);
  out << '\n';
  out << pad_left("accuracy", kLabel) << pad_left("", 2 * kCol)
      << pad_left(rounded(r.accuracy, digits), kCol) << pad_left(std::to_string(r.total()), kCol)
      << '\n';
  row("macro avg", r.macro);
  row("weighted avg", r.weighted);
  return out.str();
}

std::string render_report_csv(const ClassificationReport& r, int digits) {
  std::ostringstream out;
  out << "class,precision,recall,f1,support\n";
  auto row = [&](const char* name, const ClassMetrics& m) {
    out << name << ',' << rounded(m.precision, digits) << ',' << rounded(m.recall, digits) << ','
        << rounded(m.f1, digits) << ',' << m.support << '\n';
  };
  row("1", r.positive);
  row("0", r.negative);
  out << "accuracy,,," << rounded(r.accuracy, digits) << ',' << r.total() << '\n';
  row("macro avg", r.macro);
  row("weighted avg", r.weighted);
  return out.str();
}

RocCurve roc_curve(const std::vector<int>& y_true, const std::vector<double>& scores) {
  if (y_true.size() != scores.size()) fail(ErrorKind::Data, "roc: labels and scores lengths differ");
  std::size_t pos = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) fail(ErrorKind::Data, "roc: non-finite score");
    if (y_true[i]) ++pos;
  }
  const std::size_t neg = y_true.size() - pos;
  if (pos == 0 || neg == 0) fail(ErrorKind::Data, "roc: both classes are required (AUC undefined)");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  RocCurve roc;
  roc.points.push_back({INFINITY, 0.0, 0.0});
  // twice the area in units of (1/neg) x (1/pos) cells; exact in integers
  std::uint64_t area2 = 0;
  std::size_t tp = 0, fp = 0;
  for (std::size_t i = 0; i < order.size();) {
    const double s = scores[order[i]];
    const std::size_t tp_prev = tp, fp_prev = fp;
    for (; i < order.size() && scores[order[i]] == s; ++i) {
      if (y_true[order[i]]) ++tp;
      else ++fp;
    }
    area2 += static_cast<std::uint64_t>(fp - fp_prev) * (tp + tp_prev);
    roc.points.push_back({s, static_cast<double>(fp) / static_cast<double>(neg),
                          static_cast<double>(tp) / static_cast<double>(pos)});
  }
  roc.auc = static_cast<double>(area2) / (2.0 * static_cast<double>(pos) * static_cast<double>(neg));
  return roc;
}

std::string render_roc_csv(const RocCurve& roc) {
  std::ostringstream out;
  out << "threshold,fpr,tpr\n";
  for (const auto& p : roc.points) {
    out << format_double(p.threshold) << ',' << format_double(p.fpr) << ','
        << format_double(p.tpr) << '\n';
  }
  return out.str();
}

HoldoutResult evaluate_scores(const std::vector<int>& y_true, const std::vector<double>& scores,
                              double threshold) {
  HoldoutResult r;
  r.scores = scores;
  std::vector<int> y_pred(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) y_pred[i] = scores[i] >= threshold ? 1 : 0;
  r.confusion = confusion(y_true, y_pred);
  r.report = classification_report(r.confusion);
  const bool both = r.confusion.tp + r.confusion.fn > 0 && r.confusion.tn + r.confusion.fp > 0;
  if (both) r.roc = roc_curve(y_true, scores);
  return r;
}

CvResult cross_validate(const std::vector<LabeledDocument>& docs, const FeatureConfig& features,
                        ModelKind kind, const ModelParams& params, const CvConfig& cv,
                        std::size_t workers) {
  const auto y = labels_of(docs);
  const auto both = std::count(y.begin(), y.end(), 1);
  if (both == 0 || static_cast<std::size_t>(both) == y.size()) {
    fail(ErrorKind::Data, "cross-validation needs both classes present");
  }
  auto plan = kfold_partition(docs.size(), y, cv);

  CvResult result;
  result.warnings = std::move(plan.warnings);
  result.folds.resize(cv.k);
  result.scores.assign(docs.size(), 0.0);

  // Folds run in parallel; nested work inside a fold stays single-threaded
  // so total threads are bounded by `workers`.
  const std::size_t outer = std::min(workers, cv.k);
  const std::size_t inner = outer > 1 ? 1 : workers;
  parallel_for(cv.k, outer, [&](std::size_t f) {
    const auto& held = plan.folds[f];
    std::vector<LabeledDocument> train, test;
    train.reserve(docs.size() - held.size());
    std::size_t h = 0;
    for (std::size_t i = 0; i < docs.size(); ++i) {
      if (h < held.size() && held[h] == i) {
        test.push_back(docs[i]);
        ++h;
      } else {
        train.push_back(docs[i]);
      }
    }
    const auto clf = fit_text_classifier(train, features, kind, params, inner);
    std::vector<int> y_test;
    std::vector<double> s_test;
    for (std::size_t j = 0; j < test.size(); ++j) {
      const double s = clf.score(test[j].tokens);
      s_test.push_back(s);
      y_test.push_back(to_int(test[j].label));
      result.scores[held[j]] = s;
    }
    auto eval = evaluate_scores(y_test, s_test);
    result.folds[f] = FoldResult{eval.confusion, eval.report, std::move(eval.roc)};
  });

  for (std::size_t f = 0; f < cv.k; ++f) {
    result.pooled += result.folds[f].confusion;
    if (!result.folds[f].roc) {
      result.warnings.push_back("fold " + std::to_string(f) +
                                " holds a single class; its ROC curve is omitted");
    }
  }
  result.report = classification_report(result.pooled);
  result.roc = roc_curve(y, result.scores);
  return result;
}

}  // namespace tweetsent
