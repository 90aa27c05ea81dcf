// Regenerates the bundled synthetic corpus.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "tweetsent/synthetic.hpp"

int main(int argc, char** argv) {
  tweetsent::SyntheticConfig cfg;
  std::string out_path;
  CLI::App app{"Seeded synthetic tweet corpus", "make_synthetic"};
  app.add_option("output", out_path, "CSV to write")->required();
  app.add_option("--docs", cfg.n_docs, "number of posts");
  app.add_option("--seed", cfg.seed, "generator seed");
  app.add_option("--min-words", cfg.min_words, "fewest topic words per post");
  app.add_option("--max-words", cfg.max_words, "most topic words per post");
  app.add_option("--complaint-share", cfg.complaint_share, "share of complaint posts")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--theme-strength", cfg.theme_strength, "topic words drawn from the mood's theme")
      ->check(CLI::Range(0.0, 1.0));
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (cfg.min_words > cfg.max_words) {
    std::cerr << "--min-words exceeds --max-words\n";
    return 1;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << '\n';
    return 2;
  }
  const auto n = tweetsent::persist_corpus(tweetsent::generate_synthetic_corpus(cfg), out);
  std::cerr << "wrote " << n << " records to " << out_path << '\n';
  return 0;
}
