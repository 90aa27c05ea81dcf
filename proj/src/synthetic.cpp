#include "tweetsent/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>

namespace tweetsent {

namespace {

// Complaint posts lean on bills and prices, upbeat ones on schemes and
// renewables. Neither list holds lexicon words; the shared list is neutral.
const std::vector<std::string>& complaint_topics() {
  static const std::vector<std::string> kWords = {
      "bill",    "bills",   "price",     "prices",   "tariff",    "meter",   "supplier",
      "cost",    "costs",   "rate",      "rates",    "payment",   "inflation", "increase",
      "increased", "paying", "paid",     "wholesale", "cap",      "gas",     "heating",
      "winter",  "budget",  "fuel",
  };
  return kWords;
}

const std::vector<std::string>& upbeat_topics() {
  static const std::vector<std::string> kWords = {
      "renewable", "solar",   "wind",     "scheme",   "subsidy",  "grid",    "summer",
      "home",      "family",  "kitchen",  "evening",  "fridge",   "bulb",    "usage",
      "supply",    "plant",   "office",   "hours",    "load",     "market",
  };
  return kWords;
}

const std::vector<std::string>& shared_topics() {
  static const std::vector<std::string> kWords = {
      "electricity", "energy", "power", "unit", "units", "government", "company", "month",
      "household",   "coal",   "minister", "customers", "people", "week", "today", "news",
      "demand",      "pay",
  };
  return kWords;
}

const std::vector<std::string>& filler_words() {
  static const std::vector<std::string> kWords = {
      "the", "is", "my", "this", "are", "to", "for", "of", "and", "our", "it", "so",
      "we", "with", "again", "now", "i", "at", "in", "on", "was", "their",
  };
  return kWords;
}

const std::array<const char*, 8> kHashtags = {
    "#EnergyCrisis", "#electricity", "#PowerCut", "#CostOfLiving",
    "#energybills",  "#UK",          "#India",    "#PriceCap",
};

// Weighted toward the first entries (Zipf-like).
template <typename Rng>
const std::string& pick_zipf(const std::vector<std::string>& words, Rng& rng) {
  std::vector<double> weights(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) weights[i] = 1.0 / static_cast<double>(i + 1);
  std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
  return words[dist(rng)];
}

template <typename Rng>
const std::string& pick_uniform(const std::vector<std::string>& words, Rng& rng) {
  std::uniform_int_distribution<std::size_t> dist(0, words.size() - 1);
  return words[dist(rng)];
}

std::string timestamp(std::size_t i) {
  // spread over a week in 2022, one post every few minutes
  const std::size_t minutes = i * 5;
  const std::size_t day = 10 + (minutes / (24 * 60)) % 7;
  const std::size_t hour = (minutes / 60) % 24;
  const std::size_t minute = minutes % 60;
  char buf[32];
  std::snprintf(buf, sizeof buf, "2022-10-%02zuT%02zu:%02zu:00Z", day, hour, minute);
  return buf;
}

std::string capitalise_some(std::string word, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 9);
  const int c = coin(rng);
  if (c == 0) {
    for (auto& ch : word) ch = static_cast<char>(ch >= 'a' && ch <= 'z' ? ch - 32 : ch);
  } else if (c == 1 && !word.empty() && word[0] >= 'a' && word[0] <= 'z') {
    word[0] = static_cast<char>(word[0] - 32);
  }
  return word;
}

}  // namespace

const std::vector<std::string>& synthetic_positive_words() {
  static const std::vector<std::string> kWords = {
      "good",     "great",    "thanks",   "relief",   "happy",     "affordable", "fair",
      "cheaper",  "love",     "excellent", "helpful", "improved",  "reliable",   "savings",
      "support",  "welcome",  "hopeful",  "stable",   "nice",      "glad",
  };
  return kWords;
}

const std::vector<std::string>& synthetic_negative_words() {
  static const std::vector<std::string> kWords = {
      "expensive", "bad",      "crisis",   "outrageous", "terrible", "struggling", "unfair",
      "worried",   "hike",     "shortage", "blackout",  "angry",    "scam",       "unaffordable",
      "suffering", "horrible", "greedy",   "nightmare", "worse",    "disaster",
  };
  return kWords;
}

Corpus generate_synthetic_corpus(const SyntheticConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::size_t> length_dist(config.min_words, config.max_words);
  std::bernoulli_distribution complaint(config.complaint_share);
  std::bernoulli_distribution on_theme(config.theme_strength);
  // opinion-word counts per mood: complaints carry more negative words
  std::discrete_distribution<int> pos_when_complaint({50, 32, 13, 5});
  std::discrete_distribution<int> neg_when_complaint({15, 35, 30, 15, 5});
  std::discrete_distribution<int> pos_when_upbeat({10, 35, 30, 18, 7});
  std::discrete_distribution<int> neg_when_upbeat({60, 28, 10, 2});
  std::uniform_int_distribution<int> percent(0, 99);

  std::vector<TweetRecord> records;
  records.reserve(config.n_docs);
  for (std::size_t i = 0; i < config.n_docs; ++i) {
    const bool is_complaint = complaint(rng);
    const auto& theme = is_complaint ? complaint_topics() : upbeat_topics();
    const std::size_t content = length_dist(rng);
    const int n_pos = is_complaint ? pos_when_complaint(rng) : pos_when_upbeat(rng);
    const int n_neg = is_complaint ? neg_when_complaint(rng) : neg_when_upbeat(rng);

    std::vector<std::string> words;
    for (std::size_t w = 0; w < content; ++w) {
      words.push_back(pick_uniform(on_theme(rng) ? theme : shared_topics(), rng));
    }
    for (int p = 0; p < n_pos; ++p) words.push_back(pick_zipf(synthetic_positive_words(), rng));
    for (int q = 0; q < n_neg; ++q) words.push_back(pick_zipf(synthetic_negative_words(), rng));
    std::shuffle(words.begin(), words.end(), rng);

    std::string text;
    if (percent(rng) < 25) text += "@user" + std::to_string(percent(rng) * 37 % 1000) + " ";
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (w) text.push_back(' ');
      if (percent(rng) < 30) text += pick_uniform(filler_words(), rng) + " ";
      text += capitalise_some(words[w], rng);
    }
    if (percent(rng) < 20) text += "!!";
    if (percent(rng) < 15) text += " " + std::to_string(percent(rng) + 1) + "%";
    if (percent(rng) < 30) text += std::string(" ") + kHashtags[static_cast<std::size_t>(percent(rng)) % kHashtags.size()];
    if (percent(rng) < 20) text += " https://t.co/" + std::to_string(1000 + i);

    TweetRecord rec;
    rec.id = "syn" + std::to_string(100000 + i);
    rec.text = std::move(text);
    rec.author = "user" + std::to_string(percent(rng) * 13 + i % 7);
    rec.created_at = timestamp(i);
    rec.country = percent(rng) < 60 ? Country{CountryCode::UK, {}} : Country{CountryCode::India, {}};
    records.push_back(std::move(rec));
  }
  return Corpus(std::move(records), "synthetic");
}

}  // namespace tweetsent
