#include <cmath>
#include <sstream>

#include "doctest.h"
#include "tweetsent/error.hpp"
#include "tweetsent/features.hpp"

using namespace tweetsent;

namespace {
using Terms = std::vector<std::string>;
}

TEST_CASE("n-gram windows") {
  CHECK(extract_ngrams({"a", "b", "c"}, {2, 2, 1}) == Terms{"a b", "b c"});
  CHECK(extract_ngrams({"a", "b", "c"}, {1, 2, 1}) == Terms{"a", "b", "c", "a b", "b c"});
  CHECK(extract_ngrams({"a"}, {2, 2, 1}).empty());
  CHECK_THROWS_AS((NgramConfig{2, 1, 1}.validate()), Error);
  CHECK_THROWS_AS((NgramConfig{1, 1, 0}.validate()), Error);
}

TEST_CASE("vocabulary document frequencies") {
  const std::vector<TokenSequence> docs{{"a", "a", "b"}, {"b", "c"}};
  const auto v = build_vocabulary(docs, {1, 1, 1});
  CHECK(v.terms() == Terms{"a", "b", "c"});
  CHECK(v.document_frequency() == std::vector<std::size_t>{1, 2, 1});
  CHECK(v.n_docs() == 2);
  const auto v2 = build_vocabulary(docs, {1, 1, 2});
  CHECK(v2.terms() == Terms{"b"});
  CHECK(v2.index_of("a") == Vocabulary::npos);
  const auto single = build_vocabulary({{"x"}}, {1, 1, 1});
  CHECK(single.size() == 1);
  CHECK(single.document_frequency()[0] == 1);
  CHECK_THROWS_AS(build_vocabulary(docs, {1, 1, 3}), Error);
}

TEST_CASE("term frequency") {
  const auto v = build_vocabulary({{"a", "b"}}, {1, 1, 1});
  const auto ab = term_frequency({"a", "a", "b", "b"}, v);
  REQUIRE(ab.size() == 2);
  CHECK(ab[0].value == 0.5);
  CHECK(ab[1].value == 0.5);
  const auto oov = term_frequency({"a", "z"}, v);
  REQUIRE(oov.size() == 1);
  CHECK(oov[0].value == 0.5);
  CHECK(term_frequency({}, v).empty());

  Terms doc(250, "filler");
  for (int i = 0; i < 10; ++i) doc[static_cast<std::size_t>(i) * 25] = "a";
  const auto tf = term_frequency(doc, v);
  REQUIRE(tf.size() == 1);
  CHECK(tf[0].value == doctest::Approx(0.04).epsilon(1e-15));
}

TEST_CASE("idf modes") {
  CHECK(idf_weight(50000, 500, IdfMode::RawRatio) == 100.0);
  CHECK(idf_weight(50000, 500, IdfMode::NaturalLog) == doctest::Approx(std::log(100.0)).epsilon(1e-15));
  CHECK(idf_weight(50000, 500, IdfMode::Log10) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(idf_weight(7, 7, IdfMode::NaturalLog) == 0.0);
  CHECK(idf_weight(7, 7, IdfMode::Log10) == 0.0);
  CHECK(parse_idf_mode(to_string(IdfMode::RawRatio)) == IdfMode::RawRatio);
}

TEST_CASE("tf-idf products from the worked example") {
  CHECK(0.04 * idf_weight(50000, 500, IdfMode::RawRatio) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(std::abs(0.04 * idf_weight(50000, 500, IdfMode::NaturalLog) - 0.1842068) < 1e-7);
}

TEST_CASE("tf-idf transform") {
  const std::vector<TokenSequence> docs{{"a", "b"}, {"a", "c"}, {"a", "b", "b"}};
  const auto model = fit_idf(build_vocabulary(docs, {1, 1, 1}), IdfMode::NaturalLog);
  // a is in every document, so its weight vanishes and no entry is stored
  const auto row = model.transform({"a", "b", "b", "q"});
  REQUIRE(row.size() == 1);
  CHECK(row[0].index == 1);
  CHECK(row[0].value == doctest::Approx(0.5 * std::log(3.0 / 2.0)).epsilon(1e-15));
  CHECK(model.transform({}).empty());
  const auto counts = model.counts({"a", "b", "b", "q"});
  REQUIRE(counts.size() == 2);
  CHECK(counts[0].value == 1.0);
  CHECK(counts[1].value == 2.0);
}

TEST_CASE("bigram vocabulary") {
  const std::vector<TokenSequence> docs{{"price", "cap", "rise"}, {"price", "cap"}};
  const auto model = fit_idf(build_vocabulary(docs, {2, 2, 1}), IdfMode::NaturalLog);
  CHECK(model.vocabulary().terms() == Terms{"price cap", "cap rise"});
  CHECK(model.transform({"price", "cap", "rise"}).size() == 1);
}

TEST_CASE("transform is independent of worker count") {
  std::vector<TokenSequence> docs;
  for (int i = 0; i < 50; ++i) docs.push_back({"t" + std::to_string(i % 7), "t" + std::to_string(i % 5), "x"});
  const auto model = fit_idf(build_vocabulary(docs, {1, 2, 1}), IdfMode::NaturalLog);
  const auto a = tfidf_transform(docs, model, 1);
  const auto b = tfidf_transform(docs, model, 4);
  CHECK(a.rows == b.rows);
  CHECK(a.n_cols == model.size());
  CHECK(count_transform(docs, model, 1).rows == count_transform(docs, model, 3).rows);
}

TEST_CASE("vectorizer save and load reproduce transforms exactly") {
  const std::vector<TokenSequence> docs{{"a", "b"}, {"a", "c", "d"}, {"c", "b", "b"}};
  const auto model = fit_idf(build_vocabulary(docs, {1, 2, 1}), IdfMode::Log10);
  std::stringstream io;
  model.save(io);
  const auto back = TfidfModel::load(io);
  CHECK(back.vocabulary().terms() == model.vocabulary().terms());
  CHECK(back.idf() == model.idf());
  CHECK(back.mode() == model.mode());
  for (const auto& d : docs) CHECK(back.transform(d) == model.transform(d));
  std::istringstream junk("not a vectorizer\n");
  CHECK_THROWS_AS(TfidfModel::load(junk), Error);
}
