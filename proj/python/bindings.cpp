#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "tweetsent/classifiers.hpp"
#include "tweetsent/config.hpp"
#include "tweetsent/evaluation.hpp"
#include "tweetsent/features.hpp"
#include "tweetsent/lexicon.hpp"
#include "tweetsent/pipeline.hpp"
#include "tweetsent/text.hpp"

namespace py = pybind11;
using namespace tweetsent;

namespace {

using Dense = std::vector<std::vector<double>>;

FeatureMatrix to_matrix(const Dense& rows) {
  FeatureMatrix X;
  X.n_cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != X.n_cols) fail(ErrorKind::Data, "rows differ in length");
    SparseVector v;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0.0) v.push_back({j, row[j]});
    }
    X.rows.push_back(std::move(v));
  }
  return X;
}

std::vector<std::pair<std::size_t, double>> to_pairs(const SparseVector& v) {
  std::vector<std::pair<std::size_t, double>> out;
  for (const auto& e : v) out.emplace_back(e.index, e.value);
  return out;
}

CleaningConfig cleaning_from(const std::optional<std::string>& steps) {
  return steps ? CleaningConfig::parse(*steps) : CleaningConfig();
}

StopwordList stopwords_from(const std::optional<std::vector<std::string>>& words) {
  return words ? StopwordList(*words) : StopwordList::english();
}

py::dict class_metrics(const ClassMetrics& m) {
  py::dict d;
  d["precision"] = m.precision;
  d["recall"] = m.recall;
  d["f1"] = m.f1;
  d["support"] = m.support;
  return d;
}

py::dict report_dict(const ClassificationReport& r) {
  py::dict d;
  d["positive"] = class_metrics(r.positive);
  d["negative"] = class_metrics(r.negative);
  d["macro"] = class_metrics(r.macro);
  d["weighted"] = class_metrics(r.weighted);
  d["accuracy"] = r.accuracy;
  d["text"] = render_report_text(r);
  return d;
}

ModelParams params_from(const py::kwargs& kw) {
  ModelParams p;
  for (const auto& [key, value] : kw) {
    const auto k = py::cast<std::string>(key);
    if (k == "alpha") p.nb_alpha = py::cast<double>(value);
    else if (k == "max_depth") p.tree.max_depth = py::cast<std::optional<std::size_t>>(value);
    else if (k == "min_samples_leaf") p.tree.min_samples_leaf = py::cast<std::size_t>(value);
    else if (k == "n_trees") p.forest.n_trees = py::cast<std::size_t>(value);
    else if (k == "features_per_split") p.forest.features_per_split = py::cast<std::optional<std::size_t>>(value);
    else if (k == "bootstrap") p.forest.bootstrap = py::cast<bool>(value);
    else if (k == "seed") p.forest.seed = p.logistic.seed = py::cast<std::uint64_t>(value);
    else if (k == "learning_rate") p.logistic.learning_rate = py::cast<double>(value);
    else if (k == "epochs") p.logistic.epochs = py::cast<std::size_t>(value);
    else if (k == "l2") p.logistic.l2 = py::cast<double>(value);
    else fail(ErrorKind::Config, "unknown model parameter '" + k + "'");
  }
  p.forest.tree = TreeConfig{p.forest.tree.max_depth, p.tree.min_samples_leaf};
  return p;
}

struct Model {
  ClassifierModel inner;

  std::string kind() const { return std::string(to_string(kind_of(inner))); }
  std::vector<double> scores(const Dense& rows) const {
    const auto X = to_matrix(rows);
    std::vector<double> out;
    for (const auto& r : X.rows) out.push_back(predict_score(inner, r));
    return out;
  }
  std::vector<int> predict(const Dense& rows, double threshold) const {
    const auto X = to_matrix(rows);
    std::vector<int> out;
    for (const auto& r : X.rows) out.push_back(to_int(predict_label(inner, r, threshold)));
    return out;
  }
  std::string dumps() const {
    std::ostringstream out;
    save_model(inner, out);
    return out.str();
  }
};

std::string run(const std::string& subcommand, const std::string& config_path,
                const std::map<std::string, std::string>& overrides) {
  std::ifstream in(config_path);
  if (!in) fail(ErrorKind::Usage, "cannot open config " + config_path);
  auto kv = KeyValueConfig::parse(in, config_path);
  for (const auto& [k, v] : overrides) kv.set(k, v);
  std::ostringstream log;
  run_subcommand(subcommand, PipelineConfig::from_settings(kv), log);
  return log.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lexicon-labeled tweet sentiment pipeline";

  static py::exception<Error> error_type(m, "TweetsentError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type.ptr())(e.what());
      exc.attr("exit_code") = exit_code_for(e.kind());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def("clean_text", [](const std::string& text, std::optional<std::string> steps) {
    return clean_text(text, cleaning_from(steps));
  }, py::arg("text"), py::arg("steps") = py::none());
  m.def("tokenize", [](const std::string& s) { return tokenize(s); }, py::arg("cleaned"));
  m.def("stem", [](const std::string& s) { return stem(s); }, py::arg("token"));
  m.def("preprocess", [](const std::string& text, std::optional<std::string> steps,
                         std::optional<std::vector<std::string>> stopwords) {
    return preprocess(text, cleaning_from(steps), stopwords_from(stopwords));
  }, py::arg("text"), py::arg("steps") = py::none(), py::arg("stopwords") = py::none());

  m.def("polarity_score", [](const std::vector<std::string>& tokens,
                             const std::vector<std::string>& positive,
                             const std::vector<std::string>& negative) {
    const auto s = polarity_score(tokens, OpinionLexicon(positive, negative));
    return py::make_tuple(s.score, s.pos_count, s.neg_count);
  }, py::arg("tokens"), py::arg("positive"), py::arg("negative"));
  m.def("assign_label", [](double score, double threshold) { return to_int(assign_label(score, threshold)); },
        py::arg("score"), py::arg("threshold") = kDefaultPolarityThreshold);

  m.def("idf_weight", [](std::size_t n_docs, std::size_t df, const std::string& mode) {
    return idf_weight(n_docs, df, parse_idf_mode(mode));
  }, py::arg("n_docs"), py::arg("df"), py::arg("mode") = "natural_log");

  py::class_<TfidfModel>(m, "TfidfModel")
      .def_property_readonly("terms", [](const TfidfModel& t) { return t.vocabulary().terms(); })
      .def_property_readonly("idf", &TfidfModel::idf)
      .def("transform", [](const TfidfModel& t, const std::vector<std::string>& tokens) {
        return to_pairs(t.transform(tokens));
      })
      .def("counts", [](const TfidfModel& t, const std::vector<std::string>& tokens) {
        return to_pairs(t.counts(tokens));
      })
      .def("__len__", &TfidfModel::size);
  m.def("fit_tfidf", [](const std::vector<TokenSequence>& docs, std::size_t n_min, std::size_t n_max,
                        std::size_t min_df, const std::string& mode) {
    return fit_idf(build_vocabulary(docs, {n_min, n_max, min_df}), parse_idf_mode(mode));
  }, py::arg("docs"), py::arg("n_min") = 1, py::arg("n_max") = 1, py::arg("min_df") = 1,
     py::arg("idf_mode") = "natural_log");

  py::class_<Model>(m, "Model")
      .def_property_readonly("kind", &Model::kind)
      .def("scores", &Model::scores, py::arg("rows"))
      .def("predict", &Model::predict, py::arg("rows"), py::arg("threshold") = 0.5)
      .def("dumps", &Model::dumps);
  m.def("fit", [](const std::string& kind, const Dense& rows, const std::vector<int>& y, std::size_t workers,
                  py::kwargs kw) {
    return Model{fit_model(parse_model_kind(kind), to_matrix(rows), y, params_from(kw), workers)};
  }, py::arg("kind"), py::arg("rows"), py::arg("y"), py::arg("workers") = 1);
  m.def("loads", [](const std::string& text) {
    std::istringstream in(text);
    return Model{load_model(in)};
  }, py::arg("text"));

  m.def("classification_report", [](const std::vector<int>& y_true, const std::vector<int>& y_pred) {
    return report_dict(classification_report(confusion(y_true, y_pred)));
  }, py::arg("y_true"), py::arg("y_pred"));
  m.def("roc_curve", [](const std::vector<int>& y_true, const std::vector<double>& scores) {
    const auto roc = roc_curve(y_true, scores);
    std::vector<std::tuple<double, double, double>> points;
    for (const auto& p : roc.points) points.emplace_back(p.threshold, p.fpr, p.tpr);
    return py::make_tuple(points, roc.auc);
  }, py::arg("y_true"), py::arg("scores"));

  m.def("subcommands", &subcommands);
  m.def("run_subcommand", &run, py::arg("subcommand"), py::arg("config"),
        py::arg("overrides") = std::map<std::string, std::string>{});
}
