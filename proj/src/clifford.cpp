#include "gencliff/clifford.hpp"

#include <algorithm>
#include <stdexcept>

#include "gencliff/errors.hpp"

namespace gencliff {

int levi_civita(std::size_t i, std::size_t j, std::size_t k) {
  if (i > 2 || j > 2 || k > 2) throw std::out_of_range("Levi-Civita index out of range");
  if (i == j || j == k || i == k) return 0;
  // Even permutations of (0,1,2) are the cyclic shifts.
  return ((j + 3 - i) % 3 == 1) ? 1 : -1;
}

bool CheckReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.holds; });
}

std::vector<std::string> CheckReport::failures() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (!e.holds) out.push_back(e.name);
  return out;
}

CliffordTriple::CliffordTriple(EndField i1, EndField i2, EndField i3)
    : gens_{std::move(i1), std::move(i2), std::move(i3)} {
  require_same_flux(gens_[0], gens_[1], "Clifford triple");
  require_same_flux(gens_[0], gens_[2], "Clifford triple");
}

namespace {

std::string idx(std::size_t k) { return std::to_string(k + 1); }

CheckReport relations_report(const CliffordTriple& t) {
  CheckReport r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      const Matrix& a = t[i].matrix();
      const Matrix& b = t[j].matrix();
      Matrix anti = a * b + b * a;
      bool holds = i == j ? (ScalarField(GaussianRational(Rational(-1, 2))) * anti).is_identity() : anti.is_zero();
      r.add("I" + idx(i) + "I" + idx(j) + " + I" + idx(j) + "I" + idx(i) + " = " + (i == j ? "-2Id" : "0"), holds);
    }
  }
  return r;
}

}  // namespace

CheckReport check_relations(CliffordTriple& t) {
  CheckReport r = relations_report(t);
  t.status().relations = r.ok();
  return r;
}

CheckReport check_relations(const CliffordTriple& t) { return relations_report(t); }

InduceResult induce(const CliffordTriple& t) {
  if (!relations_report(t).ok()) throw PreconditionError("induce needs a triple satisfying the Clifford relations");
  const auto& I = t.generators();
  ScalarField half(GaussianRational(Rational(1, 2)));
  auto make_j = [&](std::size_t i) {
    Matrix acc(I[0].size(), I[0].size());
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        int e = levi_civita(i, j, k);
        if (e != 0) acc += ScalarField(e) * (I[j].matrix() * I[k].matrix());
      }
    return I[0].with_matrix(half * acc);
  };
  InduceResult res{{{make_j(0), make_j(1), make_j(2)}, -(I[0] * I[1] * I[2])}, {}};
  const auto& J = res.induced.j;
  const EndField& G = res.induced.g;
  EndField id = EndField::identity(t.chart(), t.flux());

  auto expected = [&](std::size_t i, std::size_t j, const EndField& diag, const std::array<EndField, 3>& basis) {
    Matrix m = i == j ? -diag.matrix() : Matrix(diag.size(), diag.size());
    for (std::size_t k = 0; k < 3; ++k) {
      int e = levi_civita(i, j, k);
      if (e != 0) m += ScalarField(e) * basis[k].matrix();
    }
    return m;
  };
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      res.table.add("I" + idx(i) + "I" + idx(j) + " table", (I[i] * I[j]).matrix() == expected(i, j, id, J));
      res.table.add("J" + idx(i) + "J" + idx(j) + " table", (J[i] * J[j]).matrix() == expected(i, j, id, J));
      res.table.add("I" + idx(i) + "J" + idx(j) + " table", (I[i] * J[j]).matrix() == expected(i, j, G, I));
      res.table.add("J" + idx(i) + "I" + idx(j) + " table", (J[i] * I[j]).matrix() == expected(i, j, G, I));
    }
  }
  res.table.add("G^2 = Id", (G * G).matrix().is_identity());
  return res;
}

ProjectResult project(const InducedStructures& ind, const CliffordTriple& t) {
  ScalarField half(GaussianRational(Rational(1, 2)));
  EndField id = EndField::identity(t.chart(), t.flux());
  const auto& I = t.generators();
  ProjectResult res{{half * (id + ind.g),
                     half * (id - ind.g),
                     {half * (ind.j[0] + I[0]), half * (ind.j[1] + I[1]), half * (ind.j[2] + I[2])},
                     {half * (ind.j[0] - I[0]), half * (ind.j[1] - I[1]), half * (ind.j[2] - I[2])}},
                    {}};
  const Projections& p = res.proj;
  CheckReport& r = res.identities;
  r.add("G+ G+ = G+", (p.g_plus * p.g_plus) == p.g_plus);
  r.add("G- G- = G-", (p.g_minus * p.g_minus) == p.g_minus);
  r.add("G+ G- = 0", (p.g_plus * p.g_minus).matrix().is_zero());
  r.add("G+ + G- = Id", (p.g_plus + p.g_minus).matrix().is_identity());
  auto sector = [&](const std::array<EndField, 3>& s, const EndField& gs, const std::string& tag) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        Matrix m = i == j ? -gs.matrix() : Matrix(gs.size(), gs.size());
        for (std::size_t k = 0; k < 3; ++k) {
          int e = levi_civita(i, j, k);
          if (e != 0) m += ScalarField(e) * s[k].matrix();
        }
        r.add("I" + idx(i) + tag + "I" + idx(j) + tag + " sector table", (s[i] * s[j]).matrix() == m);
      }
    }
  };
  sector(p.i_plus, p.g_plus, "+");
  sector(p.i_minus, p.g_minus, "-");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      r.add("I" + idx(i) + "+I" + idx(j) + "- = 0", (p.i_plus[i] * p.i_minus[j]).matrix().is_zero());
      r.add("I" + idx(i) + "-I" + idx(j) + "+ = 0", (p.i_minus[i] * p.i_plus[j]).matrix().is_zero());
    }
    r.add("G+I" + idx(i) + "- = 0", (p.g_plus * p.i_minus[i]).matrix().is_zero());
    r.add("G-I" + idx(i) + "+ = 0", (p.g_minus * p.i_plus[i]).matrix().is_zero());
  }
  return res;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "fail";
}

std::vector<BoundTensor> clifford_tensor_families(const CliffordTriple& t, const InducedStructures& ind) {
  std::vector<BoundTensor> out;
  const auto& I = t.generators();
  const auto& J = ind.j;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j)
      out.push_back(bind_concomitant(I[i], I[j], "N(I" + idx(i) + ",I" + idx(j) + ")"));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j)
      out.push_back(bind_concomitant(J[i], J[j], "N(J" + idx(i) + ",J" + idx(j) + ")"));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out.push_back(bind_concomitant(I[i], J[j], "N(I" + idx(i) + ",J" + idx(j) + ")"));
  return out;
}

std::array<TensorReport, 3> check_integrability(CliffordTriple& t, unsigned degree_bound) {
  std::array<TensorReport, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = vanishes(bind_nijenhuis(t[i], "N(I" + idx(i) + ",I" + idx(i) + ")"), degree_bound);
    t.status().integrable[i] = out[i].vanished;
  }
  return out;
}

FamilyReport check_clifford_families(const CliffordTriple& t, unsigned degree_bound) {
  FamilyReport rep;
  rep.note = "checks the forward implication only: N(I_i,I_i) = 0 implies all 21 families vanish";
  rep.relations = relations_report(t);
  if (!rep.relations.ok()) {
    rep.verdict = Verdict::fail;
    return rep;
  }
  InduceResult ind = induce(t);
  std::vector<BoundTensor> fams = clifford_tensor_families(t, ind.induced);
  // Families 0, 3, 5 are N(I1,I1), N(I2,I2), N(I3,I3).
  const std::array<std::size_t, 3> diag{0, 3, 5};
  for (std::size_t k : diag) rep.preconditions.push_back(vanishes(fams[k], degree_bound));
  bool pre_ok = std::all_of(rep.preconditions.begin(), rep.preconditions.end(),
                            [](const TensorReport& r) { return r.vanished; });
  if (!pre_ok) {
    rep.verdict = Verdict::inconclusive;
    return rep;
  }
  for (std::size_t k = 0; k < fams.size(); ++k) {
    auto hit = std::find(diag.begin(), diag.end(), k);
    if (hit != diag.end()) {
      rep.tensors.push_back(rep.preconditions[static_cast<std::size_t>(hit - diag.begin())]);
    } else {
      rep.tensors.push_back(vanishes(fams[k], degree_bound));
    }
  }
  bool all = std::all_of(rep.tensors.begin(), rep.tensors.end(), [](const TensorReport& r) { return r.vanished; });
  rep.verdict = all ? Verdict::pass : Verdict::fail;
  return rep;
}

}  // namespace gencliff
