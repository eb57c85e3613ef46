#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "suites.hpp"

namespace gencliff::cli {

struct RunInfo {
  std::string digest;
  std::string builtin;
  std::vector<std::string> suites;
  SuiteConfig config;
};

/// fail if any suite fails, else inconclusive if any is, else pass.
Verdict overall_status(const std::vector<SuiteResult>& results);

/// Key order is fixed; only the timing_ms fields vary between identical runs.
std::string render_json(const RunInfo& info, const std::vector<SuiteResult>& results, double total_ms);
std::string render_text(const RunInfo& info, const std::vector<SuiteResult>& results, double total_ms);

/// Writes a sibling temporary file and renames it over `path`.
void write_atomically(const std::filesystem::path& path, const std::string& content);

}  // namespace gencliff::cli
