#include "tweetsent/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <sstream>
#include <unordered_set>

#include "tweetsent/error.hpp"
#include "tweetsent/format.hpp"

namespace tweetsent {

namespace {

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_blank(std::string_view s) { return trim(s).empty(); }

std::optional<std::size_t> find_column(const csv::Row& header, const std::string& name) {
  if (name.empty()) return std::nullopt;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == name) return i;
  }
  return std::nullopt;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Country Country::parse(std::string_view raw) {
  const std::string key = ascii_lower(trim(raw));
  if (key == "uk" || key == "gb" || key == "united kingdom" || key == "great britain") {
    return {CountryCode::UK, {}};
  }
  if (key == "india" || key == "in") return {CountryCode::India, {}};
  return {CountryCode::Other, std::string(trim(raw))};
}

std::string Country::to_string() const {
  switch (code) {
    case CountryCode::UK: return "UK";
    case CountryCode::India: return "India";
    case CountryCode::Other: break;
  }
  return name;
}

Corpus::Corpus(std::vector<TweetRecord> records, std::string source_name)
    : records_(std::move(records)), source_name_(std::move(source_name)) {
  stats_.accepted = records_.size();
}

Corpus ingest_csv(std::istream& in, const IngestSchema& schema, std::string source_name) {
  if (!in) fail(ErrorKind::Io, "cannot read corpus stream '" + source_name + "'");

  csv::Reader reader(in);
  csv::Row header;
  if (!reader.next(header)) {
    fail(ErrorKind::Schema, "corpus '" + source_name + "' has no header row");
  }
  if (!header.empty()) {
    // tolerate a UTF-8 byte order mark on the first column name
    if (header[0].rfind("\xEF\xBB\xBF", 0) == 0) header[0].erase(0, 3);
  }

  const auto text_col = find_column(header, schema.text);
  if (!text_col) {
    fail(ErrorKind::Schema, "corpus '" + source_name + "' has no text column '" +
                                schema.text + "'");
  }
  const auto id_col = find_column(header, schema.id);
  const auto author_col = find_column(header, schema.author);
  const auto created_col = find_column(header, schema.created_at);
  const auto country_col = find_column(header, schema.country);

  IngestStats stats;
  std::vector<TweetRecord> records;
  std::unordered_set<std::string> seen_ids;
  std::size_t data_row = 0;

  csv::Row row;
  while (reader.next(row)) {
    if (reader.error()) {
      if (schema.strict) {
        fail(ErrorKind::Data, "malformed CSV at line " +
                                  std::to_string(reader.error()->line) + ": " +
                                  reader.error()->message);
      }
      stats.row_errors.push_back(*reader.error());
      continue;
    }
    if (row.size() == 1 && row[0].empty()) continue;  // blank line
    ++data_row;

    auto field = [&](const std::optional<std::size_t>& col) -> std::string {
      if (!col || *col >= row.size()) return {};
      std::string value = row[*col];
      stats.replaced_bytes += csv::sanitize_utf8(value);
      return value;
    };

    TweetRecord rec;
    rec.text = field(text_col);
    if (is_blank(rec.text)) {
      ++stats.dropped_empty;
      continue;
    }
    rec.id = id_col ? std::string(trim(field(id_col))) : std::to_string(data_row);
    if (rec.id.empty()) rec.id = std::to_string(data_row);
    rec.author = field(author_col);
    rec.created_at = field(created_col);
    rec.country = Country::parse(country_col ? field(country_col) : schema.fallback_country);

    if (!seen_ids.insert(rec.id).second) {
      ++stats.dropped_duplicate;
      continue;
    }
    records.push_back(std::move(rec));
  }

  stats.accepted = records.size();
  Corpus corpus(std::move(records), std::move(source_name));
  corpus.set_stats(std::move(stats));
  return corpus;
}

Corpus filter_by_country(const Corpus& corpus, const Country& country) {
  std::vector<TweetRecord> kept;
  for (const auto& rec : corpus.records()) {
    if (rec.country == country) kept.push_back(rec);
  }
  return Corpus(std::move(kept), corpus.source_name());
}

std::size_t persist_corpus(const Corpus& corpus, std::ostream& out) {
  csv::write_row(out, {"id", "text", "author", "created_at", "country"});
  for (const auto& r : corpus.records()) {
    csv::write_row(out, {r.id, r.text, r.author, r.created_at, r.country.to_string()});
  }
  if (!out) fail(ErrorKind::Io, "failed writing corpus");
  return corpus.size();
}

std::size_t persist_labeled(const std::vector<LabeledDocument>& docs, std::ostream& out) {
  csv::write_row(out, {"id", "text", "pos_count", "neg_count", "score", "label"});
  for (const auto& d : docs) {
    csv::write_row(out, {d.id, join_tokens(d.tokens), std::to_string(d.pos_count),
                         std::to_string(d.neg_count), format_double(d.score),
                         std::to_string(to_int(d.label))});
  }
  if (!out) fail(ErrorKind::Io, "failed writing labeled documents");
  return docs.size();
}

std::vector<LabeledDocument> read_labeled(std::istream& in) {
  if (!in) fail(ErrorKind::Io, "cannot read labeled stream");
  csv::Reader reader(in);
  csv::Row row;
  static const csv::Row kHeader = {"id", "text", "pos_count", "neg_count", "score", "label"};
  if (!reader.next(row) || row != kHeader) {
    fail(ErrorKind::Schema, "labeled file must start with header id,text,pos_count,neg_count,score,label");
  }
  std::vector<LabeledDocument> docs;
  while (reader.next(row)) {
    if (reader.error()) {
      fail(ErrorKind::Data, "malformed labeled row at line " +
                                std::to_string(reader.error()->line));
    }
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() != kHeader.size()) {
      fail(ErrorKind::Data, "labeled row at line " + std::to_string(reader.line()) +
                                " has " + std::to_string(row.size()) + " fields");
    }
    LabeledDocument d;
    d.id = row[0];
    d.tokens = split_tokens(row[1]);
    d.pos_count = parse_int<std::size_t>(row[2], "pos_count");
    d.neg_count = parse_int<std::size_t>(row[3], "neg_count");
    d.score = parse_double(row[4], "score");
    const int label = parse_int<int>(row[5], "label");
    if (label != 0 && label != 1) fail(ErrorKind::Data, "label must be 0 or 1");
    d.label = label_from_int(label);
    docs.push_back(std::move(d));
  }
  return docs;
}

std::size_t split_test_count(std::size_t n, double test_fraction) {
  const double exact = static_cast<double>(n) * test_fraction;
  return static_cast<std::size_t>(std::floor(exact + 0.5 + 1e-9));
}

SplitIndices train_test_split(const std::vector<int>& labels, const SplitSpec& spec) {
  if (!(spec.test_fraction > 0.0 && spec.test_fraction < 1.0)) {
    fail(ErrorKind::Config, "test_fraction must lie strictly between 0 and 1");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<std::vector<std::size_t>> groups;
  if (spec.stratified) {
    groups.resize(2);
    for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i] ? 1 : 0].push_back(i);
    for (int c = 0; c < 2; ++c) {
      if (groups[c].empty()) {
        fail(ErrorKind::Data, "stratified split: class " + std::to_string(c) + " has no members");
      }
    }
  } else {
    groups.emplace_back(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) groups[0][i] = i;
  }

  SplitIndices out;
  for (auto& group : groups) {
    std::shuffle(group.begin(), group.end(), rng);
    const std::size_t n_test = split_test_count(group.size(), spec.test_fraction);
    out.test.insert(out.test.end(), group.begin(), group.begin() + n_test);
    out.train.insert(out.train.end(), group.begin() + n_test, group.end());
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

std::pair<std::vector<LabeledDocument>, std::vector<LabeledDocument>> train_test_split(
    const std::vector<LabeledDocument>& docs, const SplitSpec& spec) {
  std::vector<int> labels;
  labels.reserve(docs.size());
  for (const auto& d : docs) labels.push_back(to_int(d.label));
  const auto idx = train_test_split(labels, spec);
  std::pair<std::vector<LabeledDocument>, std::vector<LabeledDocument>> out;
  for (auto i : idx.train) out.first.push_back(docs[i]);
  for (auto i : idx.test) out.second.push_back(docs[i]);
  return out;
}

}  // namespace tweetsent
