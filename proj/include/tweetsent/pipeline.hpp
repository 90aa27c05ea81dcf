#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tweetsent/config.hpp"
#include "tweetsent/error.hpp"

namespace tweetsent {

// Artifact names inside the output directory.
namespace artifact {
inline constexpr const char* kCorpus = "corpus.csv";
inline constexpr const char* kLabeled = "labeled.csv";
inline constexpr const char* kSplit = "split.csv";
inline constexpr const char* kVectorizer = "vectorizer.txt";
inline constexpr const char* kSummary = "cv_summary.csv";
inline constexpr const char* kRocSvg = "roc.svg";
inline constexpr const char* kCompare = "compare_features.csv";
}  // namespace artifact

const std::vector<std::string>& subcommands();

/// Runs one pipeline stage. Progress goes to `log`. Failures throw Error.
void run_subcommand(std::string_view name, const PipelineConfig& config, std::ostream& log);

/// 0 ok, 1 usage/config, 2 data/io, 3 numeric.
int exit_code_for(ErrorKind kind);

/// Writes `content` to `path` through a sibling temp file and a rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace tweetsent
