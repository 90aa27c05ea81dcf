#pragma once

#include <cstddef>
#include <vector>

#include "tweetsent/classifiers.hpp"
#include "tweetsent/corpus.hpp"
#include "tweetsent/features.hpp"

namespace tweetsent {

/// A vectorizer fitted on training documents plus the classifier trained on
/// its output. Scores raw token sequences end to end.
struct TextClassifier {
  TfidfModel features;
  ClassifierModel model;

  /// Representation expected by `model` (counts for naive Bayes, tf-idf otherwise).
  SparseVector featurize(const TokenSequence& tokens) const;
  double score(const TokenSequence& tokens) const;
  SentimentLabel predict(const TokenSequence& tokens, double threshold = 0.5) const;
};

std::vector<int> labels_of(const std::vector<LabeledDocument>& docs);

FeatureMatrix featurize(const std::vector<LabeledDocument>& docs, const TfidfModel& features,
                        ModelKind kind, std::size_t workers = 1);

/// Fits the vocabulary/idf on `train` only, then the classifier.
TextClassifier fit_text_classifier(const std::vector<LabeledDocument>& train,
                                   const FeatureConfig& feature_config, ModelKind kind,
                                   const ModelParams& params, std::size_t workers = 1);

}  // namespace tweetsent
