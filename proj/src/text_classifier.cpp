#include "tweetsent/text_classifier.hpp"

namespace tweetsent {

namespace {

std::vector<TokenSequence> tokens_of(const std::vector<LabeledDocument>& docs) {
  std::vector<TokenSequence> out;
  out.reserve(docs.size());
  for (const auto& d : docs) out.push_back(d.tokens);
  return out;
}

}  // namespace

SparseVector TextClassifier::featurize(const TokenSequence& tokens) const {
  return uses_counts(kind_of(model)) ? features.counts(tokens) : features.transform(tokens);
}

double TextClassifier::score(const TokenSequence& tokens) const {
  return predict_score(model, featurize(tokens));
}

SentimentLabel TextClassifier::predict(const TokenSequence& tokens, double threshold) const {
  return score(tokens) >= threshold ? SentimentLabel::Positive : SentimentLabel::Negative;
}

std::vector<int> labels_of(const std::vector<LabeledDocument>& docs) {
  std::vector<int> y;
  y.reserve(docs.size());
  for (const auto& d : docs) y.push_back(to_int(d.label));
  return y;
}

FeatureMatrix featurize(const std::vector<LabeledDocument>& docs, const TfidfModel& features,
                        ModelKind kind, std::size_t workers) {
  const auto tokens = tokens_of(docs);
  return uses_counts(kind) ? count_transform(tokens, features, workers)
                           : tfidf_transform(tokens, features, workers);
}

TextClassifier fit_text_classifier(const std::vector<LabeledDocument>& train,
                                   const FeatureConfig& feature_config, ModelKind kind,
                                   const ModelParams& params, std::size_t workers) {
  TextClassifier out;
  out.features = fit_idf(build_vocabulary(tokens_of(train), feature_config.ngram),
                         feature_config.idf_mode);
  const auto X = featurize(train, out.features, kind, workers);
  out.model = fit_model(kind, X, labels_of(train), params, workers);
  return out;
}

}  // namespace tweetsent
