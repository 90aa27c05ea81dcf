#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "tweetsent/corpus.hpp"
#include "tweetsent/csv.hpp"
#include "tweetsent/error.hpp"

using namespace tweetsent;

namespace {

Corpus ingest(const std::string& text, IngestSchema schema = {}) {
  std::istringstream in(text);
  return ingest_csv(in, schema, "fixture");
}

std::string rows_with_country(std::size_t n, const std::string& country, std::size_t start = 0) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    out += "t" + std::to_string(start + i) + ",tweet " + std::to_string(start + i) + ",a,2022-10-01," +
           country + "\n";
  }
  return out;
}

const std::string kHeader = "id,text,author,created_at,country\n";

}  // namespace

TEST_CASE("csv reader handles quoting") {
  std::istringstream in("a,\"b,c\",\"say \"\"hi\"\"\"\n\"multi\nline\",x,\n");
  csv::Reader r(in);
  csv::Row row;
  REQUIRE(r.next(row));
  CHECK(row == csv::Row{"a", "b,c", "say \"hi\""});
  REQUIRE(r.next(row));
  CHECK(row == csv::Row{"multi\nline", "x", ""});
  CHECK_FALSE(r.next(row));
  CHECK_FALSE(r.error());
}

TEST_CASE("csv reader flags malformed records and keeps going") {
  std::istringstream in("ok,1\nbad\"quote,2\nok,3\n");
  csv::Reader r(in);
  csv::Row row;
  REQUIRE(r.next(row));
  CHECK_FALSE(r.error());
  REQUIRE(r.next(row));
  REQUIRE(r.error());
  CHECK(r.error()->line == 2);
  REQUIRE(r.next(row));
  CHECK_FALSE(r.error());
  CHECK(row == csv::Row{"ok", "3"});
}

TEST_CASE("csv escape round trips through the reader") {
  const csv::Row original{"plain", "with,comma", "with \"quote\"", "line\nbreak", ""};
  std::ostringstream out;
  csv::write_row(out, original);
  std::istringstream in(out.str());
  csv::Reader r(in);
  csv::Row back;
  REQUIRE(r.next(back));
  CHECK(back == original);
}

TEST_CASE("invalid utf-8 is replaced") {
  std::string s = "caf\xc3\xa9 \xff ok \xe2\x82";
  CHECK(csv::sanitize_utf8(s) == 2);
  CHECK(s == "caf\xc3\xa9 \xef\xbf\xbd ok \xef\xbf\xbd");
  std::string good = "\xf0\x9f\x94\x8c plug";
  CHECK(csv::sanitize_utf8(good) == 0);
}

TEST_CASE("ingest: all valid rows are kept") {
  const auto c = ingest(kHeader + rows_with_country(5297, "UK"));
  CHECK(c.size() == 5297);
  CHECK(c.stats().dropped_empty == 0);
}

TEST_CASE("ingest: header-only file") {
  const auto c = ingest(kHeader);
  CHECK(c.size() == 0);
  CHECK(c.stats().dropped_empty == 0);
}

TEST_CASE("ingest: rows with empty text are dropped and counted") {
  const auto c = ingest(kHeader +
                        "1,first,a,d,UK\n2,,a,d,UK\n3,third,a,d,UK\n4,   ,a,d,UK\n5,fifth,a,d,UK\n");
  CHECK(c.size() == 3);
  CHECK(c.stats().dropped_empty == 2);
  CHECK(c.records()[1].id == "3");
}

TEST_CASE("ingest: duplicate ids keep the first occurrence") {
  const auto c = ingest(kHeader + "1,first,a,d,UK\n1,again,a,d,UK\n2,second,a,d,UK\n");
  CHECK(c.size() == 2);
  CHECK(c.stats().dropped_duplicate == 1);
  CHECK(c.records()[0].text == "first");
}

TEST_CASE("ingest: column order and extra columns do not matter") {
  const auto c = ingest("country,extra,text,id\nIndia,x,hello,7\n");
  REQUIRE(c.size() == 1);
  CHECK(c.records()[0].id == "7");
  CHECK(c.records()[0].country.code == CountryCode::India);
  CHECK(c.records()[0].author.empty());
}

TEST_CASE("ingest: missing text column is a schema error") {
  try {
    ingest("id,body\n1,hello\n");
    FAIL("expected a schema error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Schema);
  }
}

TEST_CASE("ingest: custom schema and fallback country") {
  IngestSchema s;
  s.id = "tweet_id";
  s.text = "content";
  s.fallback_country = "India";
  const auto c = ingest("tweet_id,content\n9,power cut again\n", s);
  REQUIRE(c.size() == 1);
  CHECK(c.records()[0].id == "9");
  CHECK(c.records()[0].country.code == CountryCode::India);
}

TEST_CASE("ingest: malformed rows are skipped, or fatal in strict mode") {
  const std::string text = kHeader + "1,ok,a,d,UK\n2,bro\"ken,a,d,UK\n3,fine,a,d,UK\n";
  const auto c = ingest(text);
  CHECK(c.size() == 2);
  CHECK(c.stats().row_errors.size() == 1);
  IngestSchema strict;
  strict.strict = true;
  CHECK_THROWS_AS(ingest(text, strict), Error);
}

TEST_CASE("country filter") {
  const auto c = ingest(kHeader + rows_with_country(5297, "UK") + rows_with_country(3434, "India", 5297));
  CHECK(c.size() == 8731);
  CHECK(filter_by_country(c, Country::parse("UK")).size() == 5297);
  CHECK(filter_by_country(c, Country::parse("india")).size() == 3434);
  CHECK(filter_by_country(c, Country::parse("Canada")).empty());
}

TEST_CASE("country filter keeps original relative order") {
  std::string text = kHeader;
  const std::set<int> india{1, 4, 5, 8};
  for (int i = 0; i < 10; ++i) {
    text += std::to_string(i) + ",t" + std::to_string(i) + ",a,d," + (india.count(i) ? "India" : "UK") + "\n";
  }
  const auto only = filter_by_country(ingest(text), Country::parse("India"));
  REQUIRE(only.size() == 4);
  std::vector<std::string> ids;
  for (const auto& r : only.records()) ids.push_back(r.id);
  CHECK(ids == std::vector<std::string>{"1", "4", "5", "8"});
}

TEST_CASE("persist_corpus round trips") {
  const auto c = ingest(kHeader + "1,\"has, comma\",a,d,UK\n2,\"quote \"\"x\"\"\",b,e,India\n");
  std::ostringstream out;
  CHECK(persist_corpus(c, out) == 2);
  const auto back = ingest(out.str());
  CHECK(back.records() == c.records());
}

namespace {

std::vector<LabeledDocument> make_docs(std::size_t n) {
  std::vector<LabeledDocument> docs;
  for (std::size_t i = 0; i < n; ++i) {
    LabeledDocument d;
    d.id = "d" + std::to_string(i);
    d.tokens = {"bill", "price" + std::to_string(i % 3)};
    d.pos_count = i % 2;
    d.neg_count = i % 3 == 0;
    d.score = (static_cast<double>(d.pos_count) - static_cast<double>(d.neg_count)) / 2.0;
    d.label = d.score >= 0.1 ? SentimentLabel::Positive : SentimentLabel::Negative;
    docs.push_back(d);
  }
  return docs;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("persist_labeled writes a header plus one line per document") {
  std::ostringstream out;
  CHECK(persist_labeled(make_docs(2620), out) == 2620);
  CHECK(count_lines(out.str()) == 2621);
  CHECK(out.str().rfind("id,text,pos_count,neg_count,score,label\n", 0) == 0);
}

TEST_CASE("persist_labeled of nothing is a header-only file") {
  std::ostringstream out;
  CHECK(persist_labeled({}, out) == 0);
  CHECK(out.str() == "id,text,pos_count,neg_count,score,label\n");
}

TEST_CASE("labeled documents round trip exactly") {
  auto docs = make_docs(7);
  docs[3].score = 1.0 / 3.0;  // needs full precision to survive
  docs[5].tokens.clear();
  std::ostringstream out;
  persist_labeled(docs, out);
  std::istringstream in(out.str());
  CHECK(read_labeled(in) == docs);
}

TEST_CASE("read_labeled rejects a foreign header") {
  std::istringstream in("id,text\n1,x\n");
  CHECK_THROWS_AS(read_labeled(in), Error);
}

TEST_CASE("split sizes") {
  CHECK(split_test_count(10, 0.3) == 3);
  CHECK(split_test_count(8731, 0.3) == 2619);
  std::vector<int> labels(10, 0);
  labels[0] = 1;
  labels[1] = 1;
  SplitSpec spec{0.3, 7, false};
  const auto s = train_test_split(labels, spec);
  CHECK(s.test.size() == 3);
  CHECK(s.train.size() == 7);
}

TEST_CASE("stratified split rounds per class") {
  std::vector<int> labels(8, 1);
  labels.push_back(0);
  labels.push_back(0);
  const auto s = train_test_split(labels, {0.5, 11, true});
  std::size_t ones = 0, zeros = 0;
  for (auto i : s.test) (labels[i] ? ones : zeros) += 1;
  CHECK(ones == 4);
  CHECK(zeros == 1);
}

TEST_CASE("split is a deterministic partition") {
  std::vector<int> labels;
  for (int i = 0; i < 57; ++i) labels.push_back(i % 4 == 0);
  const SplitSpec spec{0.3, 99, true};
  const auto a = train_test_split(labels, spec);
  const auto b = train_test_split(labels, spec);
  CHECK(a.train == b.train);
  CHECK(a.test == b.test);
  std::vector<std::size_t> all = a.train;
  all.insert(all.end(), a.test.begin(), a.test.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i] == i);
  CHECK(all.size() == labels.size());
  const auto other = train_test_split(labels, {0.3, 100, true});
  CHECK(other.test.size() == a.test.size());
}

TEST_CASE("stratified split needs both classes") {
  const std::vector<int> labels(5, 1);
  CHECK_THROWS_AS(train_test_split(labels, {0.3, 1, true}), Error);
}
