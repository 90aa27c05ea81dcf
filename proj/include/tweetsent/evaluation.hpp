#pragma once

// Binary evaluation with class 1 (Positive) as the positive class.
//
// Precision is TP / (TP + FP) (share of positive predictions that are right)
// and recall is TP / (TP + FN) (share of actual positives found). Watch for
// transcriptions of these formulas with FP and FN exchanged.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tweetsent/classifiers.hpp"
#include "tweetsent/corpus.hpp"
#include "tweetsent/features.hpp"

namespace tweetsent {

// ---- folds -------------------------------------------------------------------

struct CvConfig {
  std::size_t k = 5;
  std::uint64_t seed = 0;
  bool stratified = true;
};

struct FoldPlan {
  std::vector<std::vector<std::size_t>> folds;  // each ascending
  std::vector<std::string> warnings;
};

/// Shuffles (per class when stratified) and deals indices round-robin, so
/// fold sizes differ by at most one and the first n % k folds are larger.
/// `labels` may be empty when not stratified.
FoldPlan kfold_partition(std::size_t n, const std::vector<int>& labels, const CvConfig& config);

// ---- confusion matrix and metrics ---------------------------------------------

struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const { return tp + fp + fn + tn; }
  /// Matrix seen from class 0 as the positive class.
  ConfusionMatrix swapped() const { return {tn, fn, fp, tp}; }

  ConfusionMatrix& operator+=(const ConfusionMatrix& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    tn += o.tn;
    return *this;
  }
  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

ConfusionMatrix confusion(const std::vector<int>& y_true, const std::vector<int>& y_pred);

/// Zero-denominator ratios are reported as 0 with the matching flag set.
struct BinaryMetrics {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool precision_degenerate = false;
  bool recall_degenerate = false;
  bool f1_degenerate = false;
};

BinaryMetrics metrics(const ConfusionMatrix& cm);

/// 2PR / (P + R), or 0 when P + R = 0.
double f1_score(double precision, double recall);

// ---- classification report -----------------------------------------------------

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

struct ClassificationReport {
  ClassMetrics positive;  // class 1
  ClassMetrics negative;  // class 0
  ClassMetrics macro;     // unweighted mean of the two classes
  ClassMetrics weighted;  // support-weighted mean
  double accuracy = 0.0;

  std::size_t total() const { return positive.support + negative.support; }
};

/// Aggregates two per-class rows. Accuracy is taken as the weighted recall,
/// which equals (TP + TN) / total for any binary matrix.
ClassificationReport classification_report(const ClassMetrics& positive,
                                           const ClassMetrics& negative);

ClassificationReport classification_report(const ConfusionMatrix& cm);

/// Table in the familiar precision / recall / f1-score / support layout,
/// values rounded half-up to `digits` decimals.
std::string render_report_text(const ClassificationReport& report, int digits = 2);

/// class,precision,recall,f1,support rows for 1, 0, accuracy, macro avg,
/// weighted avg; values at `digits` decimals.
std::string render_report_csv(const ClassificationReport& report, int digits = 4);

// ---- ROC -----------------------------------------------------------------------

struct RocPoint {
  double threshold;  // +inf for the initial (0, 0) point
  double fpr;
  double tpr;
};

struct RocCurve {
  std::vector<RocPoint> points;
  double auc = 0.0;
};

/// Sweeps thresholds over distinct scores in descending order; tied scores
/// form one step (a diagonal segment). AUC by the trapezoidal rule.
RocCurve roc_curve(const std::vector<int>& y_true, const std::vector<double>& scores);

std::string render_roc_csv(const RocCurve& roc);

// ---- cross-validation -------------------------------------------------------------

struct FoldResult {
  ConfusionMatrix confusion;
  ClassificationReport report;
  std::optional<RocCurve> roc;  // absent when the held-out fold has one class
};

struct CvResult {
  std::vector<FoldResult> folds;
  ConfusionMatrix pooled;
  ClassificationReport report;  // from the pooled matrix
  RocCurve roc;                 // over all out-of-fold scores
  std::vector<double> scores;   // out-of-fold score per input document
  std::vector<std::string> warnings;
};

/// For each fold, fits vocabulary, idf and model on the remaining folds only
/// and scores the held-out fold. Folds run on up to `workers` threads.
CvResult cross_validate(const std::vector<LabeledDocument>& docs, const FeatureConfig& features,
                        ModelKind kind, const ModelParams& params, const CvConfig& cv,
                        std::size_t workers = 1);

/// Report, confusion matrix and ROC of scores against labels at `threshold`.
struct HoldoutResult {
  ConfusionMatrix confusion;
  ClassificationReport report;
  std::optional<RocCurve> roc;
  std::vector<double> scores;
};

HoldoutResult evaluate_scores(const std::vector<int>& y_true, const std::vector<double>& scores,
                              double threshold = 0.5);

}  // namespace tweetsent
