#include "app.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "gencliff/errors.hpp"
#include "model.hpp"
#include "report.hpp"

namespace gencliff::cli {

namespace {

struct VerifyArgs {
  std::string input;
  std::string builtin;
  std::string suites;
  unsigned max_degree = 2;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  unsigned twistor_degree = 0;
  std::string output;
  std::string format = "json";
};

struct BracketArgs {
  std::string chart;
  std::string a;
  std::string b;
  std::string flux;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> parse_suite_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    std::vector<std::string> add = item == "all" ? suite_names() : std::vector<std::string>{item};
    for (auto& s : add) {
      if (!is_suite(s)) throw UsageError("unknown suite '" + s + "'");
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
  }
  if (out.empty()) throw UsageError("the suite list is empty");
  return out;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

int verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  RunInfo info;
  Model model = [&] {
    if (args.input.empty()) {
      if (args.builtin.empty()) throw UsageError("need --input or --builtin");
      info.digest = "fnv1a64:" + hex64(fnv1a64("builtin:" + args.builtin));
      return builtin_model(args.builtin);
    }
    std::ifstream f(args.input, std::ios::binary);
    if (!f) throw UsageError("cannot read " + args.input);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    std::string hashed = args.builtin.empty() ? text : text + "\n--builtin=" + args.builtin;
    info.digest = "fnv1a64:" + hex64(fnv1a64(hashed));
    try {
      return load_model(text, args.builtin);
    } catch (const InputError& e) {
      throw InputError(args.input + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
    }
  }();
  info.builtin = model.builtin;
  info.suites = parse_suite_list(args.suites);
  info.config = {args.max_degree, args.samples, args.seed, args.twistor_degree};

  auto start = std::chrono::steady_clock::now();
  std::vector<SuiteResult> results = run_suites(info.suites, model, info.config);
  double total = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::string body = args.format == "text" ? render_text(info, results, total) : render_json(info, results, total);
  Verdict status = overall_status(results);
  if (args.output.empty()) {
    out << body;
  } else {
    write_atomically(args.output, body);
    out << "status: " << to_string(status) << " (report written to " << args.output << ")\n";
  }
  (void)err;
  return status == Verdict::pass ? kExitPass : kExitFail;
}

int bracket_eval(const BracketArgs& args, std::ostream& out, std::ostream& err) {
  ChartRef chart = parse_chart_spec(args.chart);
  auto section = [&](const std::string& text, const char* opt) {
    try {
      return parse_section(text, chart);
    } catch (const ParseError& e) {
      throw InputError(std::string(opt) + " at offset " + std::to_string(e.position()), e.what());
    }
  };
  Section a = section(args.a, "--a"), b = section(args.b, "--b");
  if (args.flux.empty()) {
    out << dorfman(a, b).to_string() << "\n";
    return kExitPass;
  }
  FluxForm h = parse_flux_spec(args.flux, chart);
  if (!h.closed()) err << "warning: H is not closed; the twisted bracket fails the Jacobi identity\n";
  out << dorfman_twisted(a, b, h, FluxPolicy::allow).to_string() << "\n";
  return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of rank-3 generalized Clifford structures", "gencliff"};
  app.require_subcommand(1);

  VerifyArgs v;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification suites and write a report");
  verify_cmd->add_option("--input", v.input, "JSON structure specification");
  verify_cmd->add_option("--builtin", v.builtin, "Builtin triple; replaces the triple in --input");
  verify_cmd->add_option("--suite", v.suites, "Comma-separated suites, or 'all'")->required();
  verify_cmd->add_option("--max-degree", v.max_degree, "Monomial degree bound of the probe sections")
      ->check(CLI::Range(0u, 8u));
  verify_cmd->add_option("--samples", v.samples, "Sphere sample points (0: suite default, symbolic twistor check)");
  verify_cmd->add_option("--seed", v.seed, "Seed for sample points and probe subsets");
  verify_cmd->add_option("--twistor-degree", v.twistor_degree, "Degree bound of the twistor Nijenhuis check")
      ->check(CLI::Range(0u, 4u));
  verify_cmd->add_option("--output", v.output, "Report path, written atomically (default: stdout)");
  verify_cmd->add_option("--format", v.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  BracketArgs br;
  CLI::App* bracket_cmd = app.add_subcommand("bracket", "Evaluate a Dorfman bracket; d<k> = d/dx_k, e<k> = dx^k");
  bracket_cmd->add_option("--chart", br.chart, "Dimension, or comma-separated coordinate names")->required();
  bracket_cmd->add_option("--a", br.a, "First section")->required();
  bracket_cmd->add_option("--b", br.b, "Second section")->required();
  bracket_cmd->add_option("--flux", br.flux, "Terms [coeff*]e<i>^e<j>^e<k> separated by ';'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) return verify(v, out, err);
    return bracket_eval(br, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace gencliff::cli
