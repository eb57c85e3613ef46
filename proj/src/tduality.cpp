#include "gencliff/tduality.hpp"

#include <algorithm>
#include <stdexcept>

#include "gencliff/errors.hpp"

namespace gencliff {

namespace {

std::vector<std::size_t> free_coords(const CourantIso& phi) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < phi.chart()->dim(); ++k)
    if (std::find(phi.invariant_coords().begin(), phi.invariant_coords().end(), k) == phi.invariant_coords().end())
      out.push_back(k);
  return out;
}

std::vector<Section> invariant_probes(const CourantIso& phi, unsigned degree_bound) {
  std::vector<std::size_t> vars = free_coords(phi);
  // probe_sections reads an empty list as "all coordinates".
  if (vars.empty()) degree_bound = 0;
  return probe_sections(phi.chart(), degree_bound, vars);
}

std::vector<std::pair<Section, Section>> all_pairs(const std::vector<Section>& probes) {
  std::vector<std::pair<Section, Section>> out;
  out.reserve(probes.size() * probes.size());
  for (const auto& a : probes)
    for (const auto& b : probes) out.emplace_back(a, b);
  return out;
}

const FluxForm* nonzero(const std::optional<FluxForm>& f) { return f && !f->is_zero() ? &*f : nullptr; }

Matrix conjugate_matrix(const CourantIso& phi, const Matrix& m) { return phi.matrix() * m * phi.inverse(); }

std::string point_label(const TwistorPoint& p) {
  return "(" + p.zeta1.to_string() + ", " + p.zeta2.to_string() + ")";
}

}  // namespace

CourantIso::CourantIso(ChartRef chart, Matrix m, std::optional<FluxForm> source_flux,
                       std::optional<FluxForm> target_flux, std::vector<std::size_t> invariant_coords)
    : chart_(std::move(chart)),
      m_(std::move(m)),
      source_(std::move(source_flux)),
      target_(std::move(target_flux)),
      invariant_(std::move(invariant_coords)) {
  const std::size_t n = chart_->dim();
  if (m_.rows() != 2 * n || m_.cols() != 2 * n) throw std::invalid_argument("Courant isomorphism has the wrong size");
  for (std::size_t k : invariant_)
    if (k >= n) throw std::invalid_argument("invariant coordinate out of range");
  for (const auto* f : {&source_, &target_})
    if (*f) require_same_chart(chart_, (*f)->h().chart(), "Courant isomorphism flux");
  if (!m_.is_constant()) throw PreconditionError("Courant isomorphism must have constant entries");
  auto inv = m_.inverse();
  if (!inv) throw PreconditionError("Courant isomorphism is singular");
  inv_ = std::move(*inv);
  Matrix p = pairing_matrix(*chart_);
  if (!(m_.transpose() * p * m_ == p)) throw PreconditionError("Courant isomorphism does not preserve the pairing");
}

Section CourantIso::operator()(const Section& s) const {
  require_same_chart(chart_, s.chart(), "Courant isomorphism");
  return Section(chart_, m_.apply(s.flat()));
}

bool CourantIso::is_invariant(const ScalarField& f) const {
  return std::none_of(invariant_.begin(), invariant_.end(), [&](std::size_t k) { return f.uses_var(k); });
}

bool CourantIso::is_invariant(const Section& s) const {
  return std::all_of(s.flat().begin(), s.flat().end(), [&](const ScalarField& f) { return is_invariant(f); });
}

bool CourantIso::is_invariant(const Matrix& m) const {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_invariant(m(r, c))) return false;
  return true;
}

CourantIso make_torus_duality(const ChartRef& chart, std::size_t dual_index) {
  const std::size_t n = chart->dim();
  if (dual_index >= n) throw std::out_of_range("dual index " + std::to_string(dual_index) + " out of range");
  Matrix m = Matrix::identity(2 * n);
  m(dual_index, dual_index) = ScalarField(0);
  m(n + dual_index, n + dual_index) = ScalarField(0);
  m(dual_index, n + dual_index) = ScalarField(1);
  m(n + dual_index, dual_index) = ScalarField(1);
  return CourantIso(chart, m, std::nullopt, std::nullopt, {dual_index});
}

bool check_orthogonality(const CourantIso& phi) {
  Matrix p = pairing_matrix(*phi.chart());
  return phi.matrix().transpose() * p * phi.matrix() == p;
}

IntertwineReport check_intertwine(const CourantIso& phi, const std::vector<std::pair<Section, Section>>& pairs,
                                  std::size_t max_witnesses) {
  IntertwineReport rep;
  const FluxForm* h = nonzero(phi.source_flux());
  const FluxForm* ht = nonzero(phi.target_flux());
  for (const auto& [a, b] : pairs) {
    if (!phi.is_invariant(a) || !phi.is_invariant(b)) {
      rep.rejected.push_back("pair (" + a.to_string() + ", " + b.to_string() + ") depends on a dualized coordinate");
      continue;
    }
    ++rep.pairs_checked;
    Section lhs = phi(bracket(a, b, h));
    Section rhs = bracket(phi(a), phi(b), ht);
    if (!(lhs == rhs)) {
      rep.witnesses.push_back({a, b, std::move(lhs), std::move(rhs)});
      if (rep.witnesses.size() >= max_witnesses) break;
    }
  }
  return rep;
}

IntertwineReport check_intertwine(const CourantIso& phi, unsigned degree_bound, std::size_t max_witnesses) {
  return check_intertwine(phi, all_pairs(invariant_probes(phi, degree_bound)), max_witnesses);
}

EndField conjugate(const CourantIso& phi, const EndField& e) {
  require_same_chart(phi.chart(), e.chart(), "conjugate");
  if (!same_flux(e.flux(), phi.source_flux())) throw FluxMismatch("structure flux differs from the source flux");
  if (!phi.is_invariant(e.matrix())) throw PreconditionError("structure depends on a dualized coordinate");
  return EndField(e.chart(), conjugate_matrix(phi, e.matrix()), phi.target_flux());
}

CliffordTriple conjugate(const CourantIso& phi, const CliffordTriple& t) {
  return CliffordTriple(conjugate(phi, t[0]), conjugate(phi, t[1]), conjugate(phi, t[2]));
}

InducedStructures conjugate(const CourantIso& phi, const InducedStructures& ind) {
  return {{conjugate(phi, ind.j[0]), conjugate(phi, ind.j[1]), conjugate(phi, ind.j[2])}, conjugate(phi, ind.g)};
}

CheckReport check_concomitant_transport(const CourantIso& phi, const EndField& i, const EndField& j,
                                        const std::vector<std::pair<Section, Section>>& pairs) {
  EndField it = conjugate(phi, i), jt = conjugate(phi, j);
  CheckReport r;
  std::size_t checked = 0, bad = 0;
  for (const auto& [a, b] : pairs) {
    if (!phi.is_invariant(a) || !phi.is_invariant(b)) continue;
    ++checked;
    if (!(concomitant(it, jt, phi(a), phi(b)) == phi(concomitant(i, j, a, b)))) ++bad;
  }
  r.add("N(I~,J~)(Phi A, Phi B) = Phi N(I,J)(A, B) on " + std::to_string(checked) + " pairs", bad == 0);
  return r;
}

NaturalityReport check_naturality(const CourantIso& phi, const CliffordTriple& t,
                                  const std::vector<TwistorPoint>& points, unsigned degree_bound) {
  if (!check_relations(t).ok()) throw PreconditionError("naturality needs a triple satisfying the relations");
  NaturalityReport rep;
  rep.points = points;
  rep.orthogonal = check_orthogonality(phi);
  rep.intertwine = check_intertwine(phi, degree_bound);

  CliffordTriple ct = conjugate(phi, t);
  rep.relations = check_relations(ct);
  rep.integrability = check_integrability(ct, degree_bound);

  auto pairs = all_pairs(invariant_probes(phi, degree_bound));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a; b < 3; ++b) {
      CheckReport one = check_concomitant_transport(phi, t[a], t[b], pairs);
      for (auto& e : one.entries)
        rep.transport.add("I" + std::to_string(a + 1) + ", I" + std::to_string(b + 1) + ": " + e.name, e.holds);
    }

  if (rep.relations.ok()) {
    InducedStructures ind = induce(t).induced;
    InducedStructures cind = induce(ct).induced;
    InducedStructures moved = conjugate(phi, ind);
    for (std::size_t k = 0; k < 3; ++k)
      rep.induced.add("J~" + std::to_string(k + 1) + " = Phi J" + std::to_string(k + 1) + " Phi^-1",
                      cind.j[k].matrix() == moved.j[k].matrix());
    rep.induced.add("G~ = Phi G Phi^-1", cind.g.matrix() == moved.g.matrix());
    Projections pr = project(ind, t).proj;
    Projections cpr = project(cind, ct).proj;
    bool proj_ok = cpr.g_plus.matrix() == conjugate_matrix(phi, pr.g_plus.matrix()) &&
                   cpr.g_minus.matrix() == conjugate_matrix(phi, pr.g_minus.matrix());
    for (std::size_t k = 0; k < 3; ++k)
      proj_ok = proj_ok && cpr.i_plus[k].matrix() == conjugate_matrix(phi, pr.i_plus[k].matrix()) &&
                cpr.i_minus[k].matrix() == conjugate_matrix(phi, pr.i_minus[k].matrix());
    rep.induced.add("projections commute with Phi", proj_ok);

    for (const auto& p : points) {
      CliffordTriple k = rotate_family(t, p);
      CliffordTriple kt = rotate_family(ct, p);
      bool same = true;
      for (std::size_t i = 0; i < 3; ++i) same = same && kt[i].matrix() == conjugate_matrix(phi, k[i].matrix());
      rep.rotations.add("K~i = Phi K_i Phi^-1 at " + point_label(p), same);
    }
  }

  bool integrable = std::all_of(rep.integrability.begin(), rep.integrability.end(),
                                [](const TensorReport& r) { return r.vanished; });
  bool ok = rep.orthogonal && rep.intertwine.holds() && rep.relations.ok() && integrable && rep.transport.ok() &&
            rep.induced.ok() && rep.rotations.ok();
  rep.verdict = ok ? Verdict::pass : Verdict::fail;
  return rep;
}

}  // namespace gencliff
