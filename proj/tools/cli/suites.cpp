#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <random>

#include "gencliff/errors.hpp"
#include "gencliff/tduality.hpp"
#include "gencliff/twistor.hpp"

namespace gencliff::cli {

namespace {

constexpr std::size_t kRotationPoints = 10;
constexpr std::size_t kDualityPoints = 5;
// Jacobi is cubic in the probe count; larger probe sets are subsampled.
constexpr std::size_t kMaxAxiomProbes = 64;
constexpr std::size_t kWitnessesPerTensor = 3;

std::string num(std::size_t k) { return std::to_string(k + 1); }

std::string point_label(const TwistorPoint& p) {
  return "(" + p.zeta1.to_string() + ", " + p.zeta2.to_string() + ")";
}

// First nonzero entry, as "entry (r, c) = value" with 1-based indices.
std::string first_entry(const Matrix& m, const Chart& chart) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero())
        return "entry (" + num(r) + ", " + num(c) + ") = " + m(r, c).to_string(chart);
  return "0";
}

void add_checks(SuiteResult& out, const CheckReport& r, const std::string& prefix = {}) {
  for (const auto& e : r.entries) {
    out.checks.push_back({prefix + e.name, e.holds});
    if (!e.holds) out.witnesses.push_back({prefix + e.name, {}, ""});
  }
}

void add_tensor(SuiteResult& out, const TensorReport& t, const std::string& label) {
  out.checks.push_back({label, t.vanished});
  std::size_t k = 0;
  for (const auto& w : t.witnesses) {
    if (k++ == kWitnessesPerTensor) break;
    out.witnesses.push_back({label, {w.a.to_string(), w.b.to_string()}, w.value.to_string()});
  }
}

std::string tensor_label(const TensorReport& t) {
  return t.name + " = 0 (degree <= " + std::to_string(t.degree_bound) + ", " + std::to_string(t.sample_count) +
         " pairs)";
}

// The anticommutator residual names the failing pair and its first bad entry.
void relation_checks(SuiteResult& out, const CliffordTriple& t) {
  CheckReport r = check_relations(t);
  std::size_t e = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j, ++e) {
      const CheckEntry& entry = r.entries.at(e);
      out.checks.push_back(entry);
      if (entry.holds) continue;
      const Matrix& a = t[i].matrix();
      const Matrix& b = t[j].matrix();
      Matrix residual = a * b + b * a;
      if (i == j) residual += ScalarField(2) * Matrix::identity(a.rows());
      out.witnesses.push_back({entry.name, {"I" + num(i), "I" + num(j)}, first_entry(residual, *t.chart())});
    }
}

// Suites that need an almost Clifford triple fail on broken relations.
bool relations_gate(SuiteResult& out, const CliffordTriple& t) {
  if (check_relations(t).ok()) return true;
  relation_checks(out, t);
  out.notes.push_back("the triple fails the Clifford relations");
  out.status = Verdict::fail;
  return false;
}

Verdict from_checks(const SuiteResult& out) {
  return std::all_of(out.checks.begin(), out.checks.end(), [](const CheckEntry& e) { return e.holds; })
             ? Verdict::pass
             : Verdict::fail;
}

std::vector<TwistorPoint> points_for(const SuiteConfig& cfg, std::size_t fallback) {
  return sample_twistor_points(cfg.samples ? cfg.samples : fallback, cfg.seed);
}

void relations_suite(SuiteResult& out, const Model& m, const SuiteConfig&) {
  relation_checks(out, m.triple);
  out.status = from_checks(out);
}

void induced_suite(SuiteResult& out, const Model& m, const SuiteConfig&) {
  if (!relations_gate(out, m.triple)) return;
  InduceResult ir = induce(m.triple);
  add_checks(out, ir.table);
  out.checks.push_back({"G is almost real", is_almost_real(ir.induced.g)});
  ProjectResult pr = project(ir.induced, m.triple);
  add_checks(out, pr.identities);
  Matrix flat = generalized_metric(m.chart, Matrix::identity(m.chart->dim()), Matrix(m.chart->dim(), m.chart->dim())).matrix();
  out.notes.push_back(ir.induced.g.matrix() == flat ? "G is the flat generalized metric (g = Id, b = 0)"
                                                     : "G is not the flat generalized metric");
  out.status = from_checks(out);
}

void theorem11_suite(SuiteResult& out, const Model& m, const SuiteConfig& cfg) {
  FamilyReport rep = check_clifford_families(m.triple, cfg.max_degree);
  if (!rep.relations.ok()) {
    relations_gate(out, m.triple);
    return;
  }
  add_checks(out, rep.relations);
  for (const auto& t : rep.tensors) add_tensor(out, t, tensor_label(t));
  if (!rep.note.empty()) out.notes.push_back(rep.note);
  out.status = rep.verdict;
}

void rotations_suite(SuiteResult& out, const Model& m, const SuiteConfig& cfg) {
  if (!relations_gate(out, m.triple)) return;
  InducedStructures ind = induce(m.triple).induced;
  CliffordTriple origin = rotate_family(m.triple, {GaussianRational(), GaussianRational()});
  bool same = true;
  for (std::size_t k = 0; k < 3; ++k) same = same && origin[k].matrix() == ind.j[k].matrix();
  out.checks.push_back({"K(0, 0) = (J1, J2, J3)", same});
  if (!same) out.witnesses.push_back({"K(0, 0) = (J1, J2, J3)", {"(0, 0)"}, ""});

  for (const auto& p : points_for(cfg, kRotationPoints)) {
    std::string at = " at " + point_label(p);
    out.checks.push_back({"T(zeta1) is a rotation" + at, check_rotation(rot_T(p.zeta1)).ok()});
    out.checks.push_back({"S(zeta2) is a rotation" + at, check_rotation(rot_S(p.zeta2)).ok()});
    CliffordTriple k = rotate_family(m.triple, p);
    CheckReport rel = check_relations(k);
    for (const auto& e : rel.entries) {
      std::string name = "K: " + e.name + at;
      out.checks.push_back({name, e.holds});
      if (!e.holds) out.witnesses.push_back({name, {point_label(p)}, ""});
    }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) {
        std::string name = "N(K" + num(i) + ",K" + num(j) + ")";
        TensorReport t = vanishes(bind_concomitant(k[i], k[j], name), cfg.max_degree);
        add_tensor(out, t, tensor_label(t) + at);
      }
  }
  out.status = from_checks(out);
}

void twistor_suite(SuiteResult& out, const Model& m, const SuiteConfig&) {
  if (!relations_gate(out, m.triple)) return;
  ConnectionData cd = connection_data(m.triple);
  add_checks(out, check_unit_identity(cd));
  add_checks(out, check_dI_commutator(cd));
  out.status = from_checks(out);
}

void flatness_suite(SuiteResult& out, const Model& m, const SuiteConfig&) {
  if (!relations_gate(out, m.triple)) return;
  add_checks(out, check_flatness(connection_data(m.triple)));
  out.status = from_checks(out);
}

void theorem13_suite(SuiteResult& out, const Model& m, const SuiteConfig& cfg) {
  if (!relations_gate(out, m.triple)) return;
  TwistorOptions opts;
  opts.degree_bound = cfg.twistor_degree;
  opts.samples = cfg.samples;
  opts.seed = cfg.seed;
  TwistorReport rep = check_twistor_integrability(m.triple, opts);
  add_tensor(out, rep.nijenhuis, tensor_label(rep.nijenhuis));
  add_checks(out, rep.mixed);
  std::string note = "mode " + rep.mode;
  if (!rep.sample_points.empty()) {
    note += " at";
    for (const auto& p : rep.sample_points) note += " " + point_label(p);
  }
  out.notes.push_back(note);
  out.status = rep.verdict;
}

void tduality_suite(SuiteResult& out, const Model& m, const SuiteConfig& cfg) {
  std::size_t k = m.dual_index.value_or(0);
  if (!m.dual_index) out.notes.push_back("no tduality.dual_index given; dualizing " + m.chart->name(0));
  if (m.flux && !m.flux->is_zero()) {
    out.notes.push_back("the torus swap is implemented for zero flux only");
    out.status = Verdict::inconclusive;
    return;
  }
  if (!relations_gate(out, m.triple)) return;
  CourantIso phi = make_torus_duality(m.chart, k);
  // Only structures independent of the dualized coordinate can be transported.
  std::string inv = "I1, I2, I3 do not depend on " + m.chart->name(k);
  bool invariant = true;
  for (std::size_t g = 0; g < 3; ++g) {
    const Matrix& mat = m.triple[g].matrix();
    for (std::size_t r = 0; r < mat.rows() && invariant; ++r)
      for (std::size_t c = 0; c < mat.cols(); ++c)
        if (mat(r, c).uses_var(k)) {
          out.witnesses.push_back({inv, {"I" + num(g)}, "entry (" + num(r) + ", " + num(c) + ") = " +
                                                            mat(r, c).to_string(*m.chart)});
          invariant = false;
          break;
        }
  }
  out.checks.push_back({inv, invariant});
  if (!invariant) {
    out.status = Verdict::fail;
    return;
  }
  NaturalityReport rep = check_naturality(phi, m.triple, points_for(cfg, kDualityPoints), cfg.max_degree);
  out.checks.push_back({"Phi preserves the pairing", rep.orthogonal});
  std::string tw = "Phi intertwines the brackets on " + std::to_string(rep.intertwine.pairs_checked) + " invariant pairs";
  out.checks.push_back({tw, rep.intertwine.holds()});
  for (const auto& w : rep.intertwine.witnesses)
    out.witnesses.push_back({tw, {w.a.to_string(), w.b.to_string()}, w.lhs.to_string() + " != " + w.rhs.to_string()});
  add_checks(out, rep.relations, "dual triple: ");
  for (const auto& t : rep.integrability) add_tensor(out, t, "dual triple: " + tensor_label(t));
  add_checks(out, rep.transport);
  add_checks(out, rep.induced);
  add_checks(out, rep.rotations);
  out.status = rep.verdict;
}

// Deterministic subset, kept in probe order.
std::vector<Section> subsample(const std::vector<Section>& probes, std::size_t keep, std::uint64_t seed) {
  std::vector<std::size_t> idx(probes.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng() % i]);
  idx.resize(keep);
  std::sort(idx.begin(), idx.end());
  std::vector<Section> out;
  for (std::size_t i : idx) out.push_back(probes[i]);
  return out;
}

void axioms_suite(SuiteResult& out, const Model& m, const SuiteConfig& cfg) {
  std::vector<Section> probes = probe_sections(m.chart, cfg.max_degree);
  if (probes.size() > kMaxAxiomProbes) {
    out.notes.push_back("Jacobi on a seeded subset of " + std::to_string(kMaxAxiomProbes) + " of " +
                        std::to_string(probes.size()) + " probes");
    probes = subsample(probes, kMaxAxiomProbes, cfg.seed);
  }
  const FluxForm* h = m.flux && !m.flux->is_zero() ? &*m.flux : nullptr;
  if (h) {
    out.checks.push_back({"H is closed", h->closed()});
    if (!h->closed()) out.witnesses.push_back({"H is closed", {h->h().to_string()}, "dH = " + exterior_d(h->h()).to_string()});
  }
  AxiomReport rep = check_courant_axioms(probes, h, 10, FluxPolicy::allow);
  const std::string sym = "[a,a] = D<a,a>", jac = "[a,[b,c]] = [[a,b],c] + [b,[a,c]]";
  std::map<std::string, std::string> label{
      {sym, sym + " on " + std::to_string(rep.symmetric_checked) + " probes"},
      {jac, jac + " on " + std::to_string(rep.jacobi_checked) + " triples"}};
  std::map<std::string, bool> failed;
  for (const auto& f : rep.failures) {
    failed[f.axiom] = true;
    std::vector<std::string> inputs;
    for (const auto& s : f.inputs) inputs.push_back(s.to_string());
    out.witnesses.push_back({label.at(f.axiom), std::move(inputs), ""});
  }
  out.checks.push_back({label.at(sym), !failed.count(sym)});
  out.checks.push_back({label.at(jac), !failed.count(jac)});
  if (!rep.holds()) out.notes.push_back("stopped after " + std::to_string(rep.failures.size()) + " failures");
  out.status = from_checks(out);
}

using SuiteFn = void (*)(SuiteResult&, const Model&, const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"relations", relations_suite}, {"induced", induced_suite},     {"theorem11", theorem11_suite},
      {"rotations", rotations_suite}, {"twistor", twistor_suite},     {"flatness", flatness_suite},
      {"theorem13", theorem13_suite}, {"tduality", tduality_suite},   {"axioms", axioms_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, _] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  return std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

SuiteResult run_suite(const std::string& name, const Model& model, const SuiteConfig& cfg) {
  SuiteResult out;
  out.name = name;
  auto start = std::chrono::steady_clock::now();
  auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& e) { return e.first == name; });
  try {
    if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
    it->second(out, model, cfg);
  } catch (const NonClosedFlux& e) {
    out.status = Verdict::inconclusive;
    out.notes.push_back(std::string("not checked: ") + e.what());
  } catch (const FluxMismatch& e) {
    out.status = Verdict::inconclusive;
    out.notes.push_back(std::string("not checked: ") + e.what());
  } catch (const PreconditionError& e) {
    out.status = Verdict::inconclusive;
    out.notes.push_back(std::string("not checked: ") + e.what());
  } catch (const std::exception& e) {
    out.status = Verdict::fail;
    out.notes.push_back(std::string("error: ") + e.what());
  }
  out.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const Model& model, const SuiteConfig& cfg) {
  std::vector<std::future<SuiteResult>> jobs;
  for (const auto& n : names)
    jobs.push_back(std::async(std::launch::async, [&model, &cfg, n] { return run_suite(n, model, cfg); }));
  std::vector<SuiteResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace gencliff::cli
