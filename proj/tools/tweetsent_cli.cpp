// tweetsent <subcommand> --config <path> [--key value ...] [--workers N] [--seed S]
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tweetsent/config.hpp"
#include "tweetsent/pipeline.hpp"

using namespace tweetsent;

namespace {

std::string join_subcommands() {
  std::string out;
  for (const auto& s : subcommands()) out += (out.empty() ? "" : "|") + s;
  return out;
}

// Leftover `--section.key value` pairs override the config file.
void apply_overrides(const std::vector<std::string>& extras, KeyValueConfig& cfg) {
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& flag = extras[i];
    if (flag.rfind("--", 0) != 0 || flag.size() <= 2) {
      fail(ErrorKind::Usage, "unexpected argument '" + flag + "'");
    }
    std::string key = flag.substr(2);
    std::string value;
    if (auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key.resize(eq);
    } else {
      if (i + 1 >= extras.size()) fail(ErrorKind::Usage, "missing value for " + flag);
      value = extras[++i];
    }
    cfg.set(key, value);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexicon-labelled tweet sentiment pipeline", "tweetsent"};
  app.allow_extras();
  std::string subcommand;
  std::string config_path;
  std::string workers;
  std::string seed;
  app.add_option("subcommand", subcommand, join_subcommands())->required();
  app.add_option("--config", config_path, "key = value configuration file")->required();
  app.add_option("--workers", workers, "worker threads");
  app.add_option("--seed", seed, "master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    std::ifstream in(config_path);
    if (!in) fail(ErrorKind::Usage, "cannot read config " + config_path);
    KeyValueConfig settings = KeyValueConfig::parse(in, config_path);
    apply_overrides(app.remaining(), settings);
    if (!workers.empty()) settings.set("workers", workers);
    if (!seed.empty()) settings.set("seed", seed);
    const PipelineConfig config = PipelineConfig::from_settings(settings);
    run_subcommand(subcommand, config, std::cerr);
  } catch (const Error& e) {
    std::cerr << "tweetsent " << subcommand << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "tweetsent " << subcommand << ": " << e.what() << '\n';
    return 2;
  }
  return 0;
}
