#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "model.hpp"

namespace gencliff::cli {

struct SuiteWitness {
  /// Name of the failing check.
  std::string check;
  std::vector<std::string> inputs;
  std::string value;
};

struct SuiteResult {
  std::string name;
  Verdict status = Verdict::pass;
  std::vector<CheckEntry> checks;
  std::vector<SuiteWitness> witnesses;
  std::vector<std::string> notes;
  double timing_ms = 0;
};

struct SuiteConfig {
  unsigned max_degree = 2;
  /// Sphere points for rotations and tduality when nonzero; sampled mode for
  /// theorem13 when nonzero.
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// Degree bound of the twistor Nijenhuis check.
  unsigned twistor_degree = 0;
};

/// In report order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Never throws for a loaded model; library errors become fail or
/// inconclusive with a note.
SuiteResult run_suite(const std::string& name, const Model& model, const SuiteConfig& cfg);

/// Runs each suite on its own thread; results come back in the order given.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const Model& model, const SuiteConfig& cfg);

}  // namespace gencliff::cli
