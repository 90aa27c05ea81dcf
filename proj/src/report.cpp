#include "tweetsent/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "tweetsent/csv.hpp"
#include "tweetsent/error.hpp"
#include "tweetsent/format.hpp"

namespace tweetsent {

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double v) { return format_fixed(v, 2); }

// Colour cycle for series; the chance line is grey.
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

void open_svg(std::ostringstream& out, const SvgStyle& style) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\""
      << style.height << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << style.width << "\" height=\"" << style.height
      << "\" fill=\"#ffffff\"/>\n";
  if (!style.title.empty()) {
    out << "<title>" << xml_escape(style.title) << "</title>\n";
  }
}

}  // namespace

FrequencyReport word_frequency_report(const std::vector<LabeledDocument>& docs,
                                      SentimentLabel label, std::size_t top_k) {
  if (top_k < 1) fail(ErrorKind::Config, "word frequency report: top_k must be >= 1");
  std::map<std::string, std::size_t> counts;
  FrequencyReport report;
  report.label = label;
  report.top_k = top_k;
  for (const auto& d : docs) {
    if (d.label != label) continue;
    for (const auto& t : d.tokens) ++counts[t];
    report.total_tokens += d.tokens.size();
  }
  report.entries.assign(counts.begin(), counts.end());
  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (report.entries.size() > top_k) report.entries.resize(top_k);
  return report;
}

std::string render_frequency_csv(const FrequencyReport& report) {
  std::ostringstream out;
  csv::write_row(out, {"rank", "token", "count"});
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    csv::write_row(out, {std::to_string(i + 1), report.entries[i].first,
                         std::to_string(report.entries[i].second)});
  }
  return out.str();
}

std::string render_word_cloud_svg(const FrequencyReport& report, const SvgStyle& style) {
  if (report.entries.empty()) fail(ErrorKind::Data, "word cloud: report has no tokens");
  const std::size_t n = report.entries.size();
  const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  const std::size_t rows = (n + cols - 1) / cols;
  const double cell_w = static_cast<double>(style.width - 2 * style.margin) / static_cast<double>(cols);
  const double cell_h = static_cast<double>(style.height - 2 * style.margin) / static_cast<double>(rows);
  const double max_count = static_cast<double>(report.entries.front().second);
  // never let the largest word overflow its cell
  const double max_font = std::min(style.max_font_size, cell_h * 0.8);

  std::ostringstream out;
  open_svg(out, style);
  out << "<g font-family=\"" << xml_escape(style.font_family) << "\" text-anchor=\"middle\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [token, count] = report.entries[i];
    const double size = max_font * std::sqrt(static_cast<double>(count) / max_count);
    const double x = style.margin + (static_cast<double>(i % cols) + 0.5) * cell_w;
    const double y = style.margin + (static_cast<double>(i / cols) + 0.5) * cell_h + size * 0.35;
    out << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << num(size)
        << "\" fill=\"" << kPalette[i % std::size(kPalette)] << "\">" << xml_escape(token)
        << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string render_roc_svg(const std::vector<RocSeries>& series, const SvgStyle& style) {
  if (series.empty()) fail(ErrorKind::Data, "ROC plot: no curves");
  for (const auto& s : series) {
    if (s.curve.points.empty()) fail(ErrorKind::Data, "ROC plot: curve '" + s.name + "' is empty");
  }
  const double left = style.margin;
  const double top = style.margin;
  const double w = style.width - 2.0 * style.margin;
  const double h = style.height - 2.0 * style.margin;
  auto px = [&](double fpr) { return left + fpr * w; };
  auto py = [&](double tpr) { return top + (1.0 - tpr) * h; };

  std::ostringstream out;
  open_svg(out, style);
  out << "<g font-family=\"" << xml_escape(style.font_family) << "\" font-size=\"14\">\n";
  out << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(w)
      << "\" height=\"" << num(h) << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  for (int t = 0; t <= 10; t += 2) {
    const double v = t / 10.0;
    out << "<text x=\"" << num(px(v)) << "\" y=\"" << num(top + h + 20)
        << "\" text-anchor=\"middle\">" << format_fixed(v, 1) << "</text>\n";
    out << "<text x=\"" << num(left - 8) << "\" y=\"" << num(py(v) + 5)
        << "\" text-anchor=\"end\">" << format_fixed(v, 1) << "</text>\n";
  }
  out << "<text x=\"" << num(left + w / 2) << "\" y=\"" << num(top + h + 45)
      << "\" text-anchor=\"middle\">False positive rate</text>\n";
  out << "<text x=\"" << num(left - 45) << "\" y=\"" << num(top + h / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << num(left - 45) << ' '
      << num(top + h / 2) << ")\">True positive rate</text>\n";
  out << "<line class=\"chance\" x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0)) << "\" x2=\""
      << num(px(1)) << "\" y2=\"" << num(py(1))
      << "\" stroke=\"#999999\" stroke-dasharray=\"6 4\"/>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* colour = kPalette[i % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
    const auto& pts = series[i].curve.points;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j) out << ' ';
      out << num(px(pts[j].fpr)) << ',' << num(py(pts[j].tpr));
    }
    out << "\"/>\n";
    const double ly = top + h - 20.0 * static_cast<double>(series.size() - i);
    out << "<line x1=\"" << num(left + w - 190) << "\" y1=\"" << num(ly) << "\" x2=\""
        << num(left + w - 165) << "\" y2=\"" << num(ly) << "\" stroke=\"" << colour
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << num(left + w - 160) << "\" y=\"" << num(ly + 5) << "\">"
        << xml_escape(series[i].name) << " (AUC " << format_fixed(round_half_up(series[i].curve.auc, 3), 3)
        << ")</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace tweetsent
