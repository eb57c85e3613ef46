#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli/app.hpp"
#include "cli/model.hpp"
#include "cli/report.hpp"
#include "gencliff/examples.hpp"
#include "json.hpp"

using namespace gencliff;
using namespace gencliff::cli;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = GENCLIFF_FIXTURES;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "gencliff");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& rel) { return (kFixtures / rel).string(); }

std::string read(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::string without_timing(const std::string& report) {
  static const std::regex timing(R"("timing_ms": [0-9.eE+-]+)");
  return std::regex_replace(report, timing, "\"timing_ms\": 0");
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("gencliff_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

}  // namespace

TEST(Bracket, CalculatorExamples) {
  CliRun r = invoke({"bracket", "--chart", "3", "--a", "d1", "--b", "x1*e2"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "e2\n");
  EXPECT_EQ(invoke({"bracket", "--chart", "3", "--a", "d1 + 2*e3", "--b", "e2"}).out, "0\n");
  r = invoke({"bracket", "--chart", "3", "--a", "d1", "--b", "d2", "--flux", "e1^e2^e3"});
  EXPECT_EQ(r.out, "-e3\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Bracket, FluxSpecOrderAndCoefficients) {
  // e2^e1^e3 = -e1^e2^e3, so the sign of the example flips.
  EXPECT_EQ(invoke({"bracket", "--chart", "3", "--a", "d1", "--b", "d2", "--flux", "e2^e1^e3"}).out, "e3\n");
  EXPECT_EQ(invoke({"bracket", "--chart", "3", "--a", "d1", "--b", "d2", "--flux", "2*e1^e2^e3"}).out, "-2*e3\n");
  CliRun r = invoke({"bracket", "--chart", "4", "--a", "d1", "--b", "d2", "--flux", "x4*e1^e2^e3"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.err.find("not closed"), std::string::npos);
}

TEST(Bracket, NamedCoordinates) {
  EXPECT_EQ(invoke({"bracket", "--chart", "p,q", "--a", "d1", "--b", "p*e2"}).out, "e2\n");
}

TEST(Bracket, ParseErrorsExitTwo) {
  CliRun r = invoke({"bracket", "--chart", "2", "--a", "d1 +", "--b", "e1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--a at offset"), std::string::npos);
  EXPECT_EQ(invoke({"bracket", "--chart", "2", "--a", "d3", "--b", "e1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bracket", "--chart", "2", "--a", "d1", "--b", "e1", "--flux", "e1^e1^e2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bracket", "--chart", "0", "--a", "d1", "--b", "e1"}).code, kExitUsage);
}

TEST(Usage, ExitTwo) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--builtin", "hyperkahler_r4", "--suite", ""}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--builtin", "hyperkahler_r4", "--suite", " , "}).code, kExitUsage);
  CliRun r = invoke({"verify", "--builtin", "hyperkahler_r4", "--suite", "relations,bogus"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("unknown suite 'bogus'"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "--suite", "relations"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--builtin", "nope", "--suite", "relations"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--builtin", "hyperkahler_r4", "--suite", "relations", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--input", "/nonexistent.json", "--suite", "relations"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitPass);
}

TEST(Usage, MalformedInputsReportPositions) {
  CliRun r = invoke({"verify", "--input", fixture("malformed/syntax.json"), "--suite", "relations"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 3, column 32"), std::string::npos) << r.err;
  r = invoke({"verify", "--input", fixture("malformed/bad_expression.json"), "--suite", "relations"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("/triple/I2/1/2"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("unknown identifier 'x3'"), std::string::npos) << r.err;
  r = invoke({"verify", "--input", fixture("malformed/float_entry.json"), "--suite", "relations"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("/triple/I1/0/1"), std::string::npos) << r.err;
  r = invoke({"verify", "--input", fixture("malformed/unknown_builtin.json"), "--suite", "relations"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("/builtin"), std::string::npos) << r.err;
}

TEST(Loader, ExplicitFixtureMatchesBuiltin) {
  Model m = load_model(read(fixture("valid/hyperkahler_explicit.json")));
  CliffordTriple hk = hyperkahler_r4();
  EXPECT_TRUE(same_chart(m.chart, hk.chart()));
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(m.triple[k].matrix(), hk[k].matrix());
  EXPECT_EQ(m.dual_index, std::optional<std::size_t>(0));
  EXPECT_FALSE(m.flux.has_value());
  EXPECT_TRUE(m.builtin.empty());
}

TEST(Loader, FluxIndicesAreSortedWithSign) {
  Model m = load_model(R"({"builtin": "hyperkahler_r4", "flux": [{"indices": [1, 0, 2], "coeff": "3"}]})");
  ASSERT_TRUE(m.flux.has_value());
  EXPECT_EQ(m.flux->h(), ScalarField(-3) * KForm::basis(m.chart, {0, 1, 2}));
  EXPECT_TRUE(m.flux->closed());
  EXPECT_EQ(m.triple.flux(), m.flux);
}

TEST(Loader, RejectsInvalidDocuments) {
  auto where = [](const char* text) {
    try {
      load_model(text);
    } catch (const InputError& e) {
      return e.where();
    }
    return std::string("accepted");
  };
  EXPECT_EQ(where(R"({"builtin": "hyperkahler_r4", "extra": 1})"), "/extra");
  EXPECT_EQ(where(R"({"chart": {"dim": 2}})"), "/");
  EXPECT_EQ(where(R"({"builtin": "hyperkahler_r4", "chart": {"dim": 3}})"), "/chart");
  EXPECT_EQ(where(R"({"builtin": "hyperkahler_r4", "tduality": {"dual_index": 4}})"), "/tduality/dual_index");
  EXPECT_EQ(where(R"({"builtin": "hyperkahler_r4", "flux": [{"indices": [0, 0, 1], "coeff": "1"}]})"), "/flux/0/indices");
  EXPECT_EQ(where(R"({"chart": {"dim": 1, "coords": ["u1"]}, "triple": {}})"), "/chart/coords/0");
  EXPECT_EQ(where(R"({"chart": {"dim": 1, "coords": ["e1"]}, "triple": {}})"), "/chart/coords");
  EXPECT_EQ(where(R"({"chart": {"dim": 1}, "triple": {"I1": [["0"]]}})"), "/triple/I1");
  EXPECT_EQ(where("[1, 2]"), "/");
}

TEST(Loader, BuiltinOverrideReplacesTriple) {
  Model m = load_model(read(fixture("negative/relations_broken.json")), "hyperkahler_r4");
  EXPECT_EQ(m.builtin, "hyperkahler_r4");
  EXPECT_TRUE(check_relations(m.triple).ok());
}

TEST(Digest, Fnv1aVectors) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(Report, OverallStatus) {
  auto of = [](std::vector<Verdict> v) {
    std::vector<SuiteResult> rs;
    for (Verdict x : v) rs.push_back(SuiteResult{"relations", x, {}, {}, {}, 0});
    return overall_status(rs);
  };
  EXPECT_EQ(of({Verdict::pass, Verdict::pass}), Verdict::pass);
  EXPECT_EQ(of({Verdict::pass, Verdict::inconclusive}), Verdict::inconclusive);
  EXPECT_EQ(of({Verdict::inconclusive, Verdict::fail}), Verdict::fail);
}

TEST(Verify, ValidBuiltinPasses) {
  CliRun r = invoke({"verify", "--input", fixture("valid/hyperkahler_builtin.json"), "--suite",
               "relations,induced,twistor,flatness,theorem13,tduality,axioms", "--max-degree", "1"});
  EXPECT_EQ(r.code, kExitPass) << r.out;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["status"], "pass");
  EXPECT_EQ(doc["input"]["builtin"], "hyperkahler_r4");
  ASSERT_EQ(doc["suites"].size(), 7u);
  EXPECT_EQ(doc["suites"][0]["name"], "relations");
  for (const auto& s : doc["suites"]) EXPECT_EQ(s["status"], "pass") << s["name"];
}

TEST(Verify, TextFormat) {
  CliRun r = invoke({"verify", "--builtin", "hyperkahler_r4", "--suite", "relations,induced", "--format", "text"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("relations: pass (6/6 checks"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("G is the flat generalized metric"), std::string::npos);
  EXPECT_NE(r.out.find("status: pass"), std::string::npos);
}

TEST(Verify, TwistedFluxMakesTdualityInconclusive) {
  CliRun r = invoke({"verify", "--input", fixture("valid/product_flip_twisted.json"), "--suite", "relations,tduality"});
  EXPECT_EQ(r.code, kExitFail);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["status"], "inconclusive");
  EXPECT_EQ(doc["suites"][0]["status"], "pass");
  EXPECT_EQ(doc["suites"][1]["status"], "inconclusive");
}

struct NegativeControl {
  std::string suite;
  std::string fixture;
  std::string witness_check;
};

class NegativeControls : public ::testing::TestWithParam<NegativeControl> {};

TEST_P(NegativeControls, SuiteFailsWithWitness) {
  const auto& nc = GetParam();
  CliRun r = invoke({"verify", "--input", fixture(nc.fixture), "--suite", nc.suite, "--max-degree", "0"});
  EXPECT_EQ(r.code, kExitFail);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["status"], "fail");
  const auto& s = doc["suites"][0];
  EXPECT_EQ(s["status"], "fail");
  ASSERT_FALSE(s["witnesses"].empty());
  EXPECT_NE(s["witnesses"][0]["check"].get<std::string>().find(nc.witness_check), std::string::npos)
      << s["witnesses"][0].dump();
}

INSTANTIATE_TEST_SUITE_P(
    EverySuite, NegativeControls,
    ::testing::Values(NegativeControl{"relations", "negative/relations_broken.json", "I1I3 + I3I1 = 0"},
                      NegativeControl{"induced", "negative/relations_broken.json", "I1I3 + I3I1 = 0"},
                      NegativeControl{"theorem11", "negative/relations_broken.json", "I1I3 + I3I1 = 0"},
                      NegativeControl{"rotations", "negative/relations_broken.json", "I1I3 + I3I1 = 0"},
                      NegativeControl{"twistor", "negative/relations_broken.json", "I1I3 + I3I1 = 0"},
                      NegativeControl{"flatness", "negative/relations_broken.json", "I1I3 + I3I1 = 0"},
                      NegativeControl{"theorem13", "negative/relations_broken.json", "I1I3 + I3I1 = 0"},
                      NegativeControl{"tduality", "negative/tduality_dependent.json", "do not depend on x1"},
                      NegativeControl{"axioms", "negative/axioms_nonclosed_flux.json", "H is closed"}),
    [](const auto& info) { return info.param.suite; });

TEST(Verify, RelationsWitnessNamesThePair) {
  CliRun r = invoke({"verify", "--input", fixture("negative/relations_broken.json"), "--suite", "relations"});
  auto w = nlohmann::json::parse(r.out)["suites"][0]["witnesses"][0];
  EXPECT_EQ(w["inputs"], nlohmann::json::array({"I1", "I3"}));
  EXPECT_EQ(w["value"], "entry (1, 3) = 2");
}

TEST(Verify, NonClosedFluxBreaksJacobi) {
  CliRun r = invoke({"verify", "--input", fixture("negative/axioms_nonclosed_flux.json"), "--suite", "axioms",
               "--max-degree", "0"});
  auto s = nlohmann::json::parse(r.out)["suites"][0];
  bool jacobi_failed = false;
  for (const auto& c : s["checks"])
    if (c["name"].get<std::string>().rfind("[a,[b,c]]", 0) == 0) jacobi_failed = !c["holds"].get<bool>();
  EXPECT_TRUE(jacobi_failed);
}

TEST(Verify, ReportIsDeterministicAndAtomic) {
  TempDir tmp;
  std::vector<std::string> base{"verify", "--input", fixture("valid/hyperkahler_builtin.json"), "--suite",
                                "relations,rotations,theorem13,axioms", "--max-degree", "1", "--samples", "3",
                                "--seed", "7"};
  auto run_to = [&](const std::string& name) {
    std::vector<std::string> args = base;
    args.push_back("--output");
    args.push_back((tmp.path() / name).string());
    CliRun r = invoke(args);
    EXPECT_EQ(r.code, kExitPass) << r.err;
    EXPECT_NE(r.out.find("status: pass"), std::string::npos);
    return read(tmp.path() / name);
  };
  std::string a = run_to("a.json"), b = run_to("b.json");
  EXPECT_EQ(without_timing(a), without_timing(b));
  EXPECT_NE(a.find("\"seed\": 7"), std::string::npos);
  // Only the two reports remain; no temporary files.
  EXPECT_EQ(std::distance(fs::directory_iterator(tmp.path()), fs::directory_iterator()), 2);
  // Rewriting replaces the file in place.
  std::string again = run_to("a.json");
  EXPECT_EQ(without_timing(again), without_timing(a));
}

TEST(Verify, SeedChangesSampledPoints) {
  std::vector<std::string> args{"verify", "--builtin", "hyperkahler_r4", "--suite", "theorem13", "--samples", "4"};
  CliRun a = invoke(args);
  args.insert(args.end(), {"--seed", "99"});
  CliRun b = invoke(args);
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(b.code, kExitPass);
  EXPECT_NE(without_timing(a.out), without_timing(b.out));
}
