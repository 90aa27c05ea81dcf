#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tweetsent/corpus.hpp"
#include "tweetsent/evaluation.hpp"

namespace tweetsent {

struct FrequencyReport {
  SentimentLabel label = SentimentLabel::Positive;
  std::size_t top_k = 0;
  std::size_t total_tokens = 0;  // over all docs carrying `label`
  std::vector<std::pair<std::string, std::size_t>> entries;  // count desc, then token asc
};

/// Token counts over the documents carrying `label`, truncated to `top_k`.
FrequencyReport word_frequency_report(const std::vector<LabeledDocument>& docs,
                                      SentimentLabel label, std::size_t top_k);

std::string render_frequency_csv(const FrequencyReport& report);

struct SvgStyle {
  int width = 800;
  int height = 600;
  int margin = 60;
  std::string font_family = "Helvetica, Arial, sans-serif";
  double max_font_size = 56.0;
  std::string title;
};

/// Word cloud on a deterministic grid: the i-th token goes to cell i in
/// row-major order, font size proportional to sqrt(count).
std::string render_word_cloud_svg(const FrequencyReport& report, const SvgStyle& style = {});

struct RocSeries {
  std::string name;
  RocCurve curve;
};

/// Chance diagonal plus one polyline per series and a legend with AUCs.
std::string render_roc_svg(const std::vector<RocSeries>& series, const SvgStyle& style = {});

}  // namespace tweetsent
