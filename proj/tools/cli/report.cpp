#include "report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "json.hpp"

#ifndef GENCLIFF_VERSION
#define GENCLIFF_VERSION "0.0.0"
#endif

namespace gencliff::cli {

Verdict overall_status(const std::vector<SuiteResult>& results) {
  auto any = [&](Verdict v) {
    return std::any_of(results.begin(), results.end(), [v](const SuiteResult& r) { return r.status == v; });
  };
  if (any(Verdict::fail)) return Verdict::fail;
  if (any(Verdict::inconclusive)) return Verdict::inconclusive;
  return Verdict::pass;
}

std::string render_json(const RunInfo& info, const std::vector<SuiteResult>& results, double total_ms) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["tool"] = {{"name", "gencliff"}, {"version", GENCLIFF_VERSION}};
  doc["input"] = {{"digest", info.digest}, {"builtin", info.builtin.empty() ? ordered_json() : ordered_json(info.builtin)}};
  doc["config"] = {{"suites", info.suites},
                   {"max_degree", info.config.max_degree},
                   {"samples", info.config.samples},
                   {"seed", info.config.seed},
                   {"twistor_degree", info.config.twistor_degree}};
  doc["status"] = to_string(overall_status(results));
  ordered_json suites = ordered_json::array();
  for (const auto& r : results) {
    ordered_json s;
    s["name"] = r.name;
    s["status"] = to_string(r.status);
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"holds", c.holds}});
    s["checks"] = std::move(checks);
    ordered_json wit = ordered_json::array();
    for (const auto& w : r.witnesses) wit.push_back({{"check", w.check}, {"inputs", w.inputs}, {"value", w.value}});
    s["witnesses"] = std::move(wit);
    s["notes"] = r.notes;
    s["timing_ms"] = r.timing_ms;
    suites.push_back(std::move(s));
  }
  doc["suites"] = std::move(suites);
  doc["timing_ms"] = total_ms;
  return doc.dump(2) + "\n";
}

std::string render_text(const RunInfo& info, const std::vector<SuiteResult>& results, double total_ms) {
  std::ostringstream os;
  os << "gencliff " << GENCLIFF_VERSION << "\n";
  os << "input " << info.digest;
  if (!info.builtin.empty()) os << " (builtin " << info.builtin << ")";
  os << "\n";
  for (const auto& r : results) {
    std::size_t ok = std::count_if(r.checks.begin(), r.checks.end(), [](const CheckEntry& c) { return c.holds; });
    os << r.name << ": " << to_string(r.status) << " (" << ok << "/" << r.checks.size() << " checks, " << r.timing_ms
       << " ms)\n";
    for (const auto& c : r.checks)
      if (!c.holds) os << "  FAIL " << c.name << "\n";
    for (const auto& w : r.witnesses) {
      os << "  witness for " << w.check << ":";
      for (const auto& in : w.inputs) os << " [" << in << "]";
      if (!w.value.empty()) os << " -> " << w.value;
      os << "\n";
    }
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
  }
  os << "status: " << to_string(overall_status(results)) << " (" << total_ms << " ms)\n";
  return os.str();
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace gencliff::cli
