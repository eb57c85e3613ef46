#include "gencliff/twistor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "gencliff/errors.hpp"

namespace gencliff {

namespace {

const std::array<std::string, 4> kSphereNames{"u1", "v1", "u2", "v2"};

GaussianRational half() { return GaussianRational(Rational(1, 2)); }

/// Numerators of the rotation matrix; the common denominator is 1 + z zbar.
/// T is GaussianRational at a point or Poly over a chart.
template <class T>
std::array<std::array<T, 3>, 3> rotation_numerators(const T& z, const T& zb) {
  const T i(GaussianRational::i());
  const T h(half());
  const T one(GaussianRational(1));
  const T sum_sq = z * z + zb * zb;
  const T diff_sq = z * z - zb * zb;
  return {{{one - z * zb, -(i * (z - zb)), -(z + zb)},
           {i * (z - zb), one + h * sum_sq, -(h * i * diff_sq)},
           {z + zb, -(h * i * diff_sq), one - h * sum_sq}}};
}

/// (1 - |z|^2, i(zbar - z), -(z + zbar)), written independently of the rotation rows.
template <class T>
std::array<T, 3> stereo_numerators(const T& z, const T& zb) {
  const T i(GaussianRational::i());
  return {T(GaussianRational(1)) - z * zb, i * (zb - z), -(z + zb)};
}

Rational real_part(const GaussianRational& g) {
  if (!g.is_real()) throw std::logic_error("rotation entry has a nonzero imaginary part");
  return g.re();
}

ScalarField real_field(const Poly& num, const Poly& den) {
  if (!(num.conj() == num)) throw std::logic_error("rotation entry is not a real rational function");
  return ScalarField::ratio(num, den);
}

Poly zeta_poly(std::size_t u, std::size_t v) {
  return Poly::variable(u) + Poly::variable(v).scaled(GaussianRational::i());
}

Matrix dot(const FVec3& a, const std::array<Matrix, 3>& m) {
  Matrix out = a[0] * m[0];
  out += a[1] * m[1];
  out += a[2] * m[2];
  return out;
}

std::array<Matrix, 3> matrices(const std::array<EndField, 3>& e) {
  return {e[0].matrix(), e[1].matrix(), e[2].matrix()};
}

/// 1/2 (d_u + i d_v), the dzeta-bar derivative.
Matrix dbar(const Matrix& m, std::size_t u) {
  return ScalarField(half()) * (m.diff(u) + ScalarField(GaussianRational::i()) * m.diff(u + 1));
}

bool uses_var(const Matrix& m, std::size_t var) { return !m.diff(var).is_zero(); }

KForm d_of(const ChartRef& chart, const ScalarField& f) { return exterior_d(KForm::scalar(chart, f)); }

std::array<KForm, 3> cross_forms(const ChartRef& chart, const FVec3& c) {
  std::array<KForm, 3> dc{d_of(chart, c[0]), d_of(chart, c[1]), d_of(chart, c[2])};
  std::array<KForm, 3> out{KForm(chart, 1), KForm(chart, 1), KForm(chart, 1)};
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t a = (k + 1) % 3, b = (k + 2) % 3;
    out[k] = c[a] * dc[b] - c[b] * dc[a];
  }
  return out;
}

std::optional<FluxForm> lift_flux(const std::optional<FluxForm>& flux, const ChartRef& chart) {
  if (!flux || flux->is_zero()) return std::nullopt;
  KForm h(chart, 3);
  for (const auto& [idx, c] : flux->h().coeffs()) h.add_term(idx, c);
  return FluxForm(h);
}

Projections projections_of(const CliffordTriple& t) { return project(induce(t).induced, t).proj; }

/// Constant matrix of J_S acting on (u1, v1, u2, v2) columns: d_u -> d_v.
Matrix sphere_complex_structure() {
  Matrix js(4, 4);
  for (std::size_t s = 0; s < 4; s += 2) {
    js(s + 1, s) = ScalarField(1);
    js(s, s + 1) = ScalarField(-1);
  }
  return js;
}

/// The 1-jet of m at the sphere point, in the sphere variables starting at offset.
Matrix sphere_jet(const Matrix& m, std::size_t offset, const std::array<GaussianRational, 4>& at) {
  auto at_point = [&](Matrix x) {
    for (std::size_t k = 0; k < 4; ++k) x = x.substitute(offset + k, at[k]);
    return x;
  };
  Matrix jet = at_point(m);
  for (std::size_t k = 0; k < 4; ++k) {
    ScalarField shift = ScalarField(Poly::variable(offset + k)) - ScalarField(at[k]);
    jet += shift * at_point(m.diff(offset + k));
  }
  return jet;
}

Section substitute_sphere(const Section& s, std::size_t offset, const std::array<GaussianRational, 4>& at) {
  std::vector<ScalarField> flat = s.flat();
  for (auto& f : flat)
    for (std::size_t k = 0; k < 4; ++k) f = f.substitute(offset + k, at[k]);
  return Section(s.chart(), std::move(flat));
}

std::array<GaussianRational, 4> sphere_coords(const TwistorPoint& p) {
  return {p.zeta1.re(), p.zeta1.im(), p.zeta2.re(), p.zeta2.im()};
}

std::string sphere_frame_name(std::size_t k, bool covector) {
  return (covector ? "d" : "d/d") + kSphereNames[k];
}

}  // namespace

RVec3 cross(const RVec3& a, const RVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

FVec3 cross(const FVec3& a, const FVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

RVec3 stereo_vec(const GaussianRational& zeta) {
  auto num = stereo_numerators(zeta, zeta.conj());
  GaussianRational den = GaussianRational(1) + zeta * zeta.conj();
  RVec3 out;
  for (std::size_t k = 0; k < 3; ++k) out[k] = real_part(num[k] / den);
  return out;
}

RotationMatrix rot_T(const GaussianRational& zeta) {
  auto num = rotation_numerators(zeta, zeta.conj());
  GaussianRational den = GaussianRational(1) + zeta * zeta.conj();
  RotationMatrix m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m.rows[r][c] = real_part(num[r][c] / den);
  return m;
}

CheckReport check_rotation(const RotationMatrix& m) {
  CheckReport r;
  bool orth = true;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += m(k, i) * m(k, j);
      orth = orth && s == (i == j ? 1 : 0);
    }
  r.add("M^T M = Id", orth);
  Rational det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                 m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                 m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  r.add("det M = 1", det == 1);
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    r.add("tau" + std::to_string(i + 1) + " = tau" + std::to_string(j + 1) + " x tau" + std::to_string(k + 1),
          m.rows[i] == cross(m.rows[j], m.rows[k]));
  }
  return r;
}

ChartRef twistor_chart(const ChartRef& m) {
  std::vector<std::string> names = m->names();
  for (const auto& s : kSphereNames) {
    if (m->index_of(s)) throw std::invalid_argument("chart already has a coordinate named " + s);
    names.push_back(s);
  }
  return make_chart(std::move(names));
}

ChartRef sphere_chart() { return make_chart({kSphereNames.begin(), kSphereNames.end()}); }

FVec3 stereo_field(std::size_t u, std::size_t v) {
  Poly z = zeta_poly(u, v), zb = z.conj();
  Poly den = Poly(1) + z * zb;
  auto num = stereo_numerators(z, zb);
  return {real_field(num[0], den), real_field(num[1], den), real_field(num[2], den)};
}

std::array<FVec3, 3> rot_field(std::size_t u, std::size_t v) {
  Poly z = zeta_poly(u, v), zb = z.conj();
  Poly den = Poly(1) + z * zb;
  auto num = rotation_numerators(z, zb);
  std::array<FVec3, 3> out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) out[r][c] = real_field(num[r][c], den);
  return out;
}

CliffordTriple rotate_family(const CliffordTriple& t, const TwistorPoint& p) {
  Projections pr = projections_of(t);
  RotationMatrix tm = rot_T(p.zeta1), sm = rot_S(p.zeta2);
  auto k = [&](std::size_t i) {
    EndField out = ScalarField(GaussianRational(tm(i, 0))) * pr.i_plus[0];
    for (std::size_t l = 0; l < 3; ++l) {
      if (l > 0) out = out + ScalarField(GaussianRational(tm(i, l))) * pr.i_plus[l];
      out = out + ScalarField(GaussianRational(sm(i, l))) * pr.i_minus[l];
    }
    return out;
  };
  return CliffordTriple(k(0), k(1), k(2));
}

EndField ihat_at(const CliffordTriple& t, const TwistorPoint& p) {
  Projections pr = projections_of(t);
  RVec3 c = stereo_vec(p.zeta1), d = stereo_vec(p.zeta2);
  EndField out = ScalarField(GaussianRational(c[0])) * pr.i_plus[0];
  for (std::size_t l = 0; l < 3; ++l) {
    if (l > 0) out = out + ScalarField(GaussianRational(c[l])) * pr.i_plus[l];
    out = out + ScalarField(GaussianRational(d[l])) * pr.i_minus[l];
  }
  return out;
}

ConnectionData connection_data(const CliffordTriple& t) {
  Projections pr = projections_of(t);
  ChartRef chart = twistor_chart(t.chart());
  const std::size_t o = t.chart()->dim();
  FVec3 c = stereo_field(o, o + 1), d = stereo_field(o + 2, o + 3);
  ConnectionData cd{chart, o, c, d, cross_forms(chart, c), cross_forms(chart, d), {}, {}, {}, {}, {}, {}, {}};
  cd.i_plus = matrices(pr.i_plus);
  cd.i_minus = matrices(pr.i_minus);
  cd.g_plus = pr.g_plus.matrix();
  cd.g_minus = pr.g_minus.matrix();
  cd.ihat = dot(cd.c, cd.i_plus) + dot(cd.d, cd.i_minus);
  for (std::size_t k = 0; k < 4; ++k) {
    FormIndex idx{static_cast<std::uint8_t>(o + k)};
    FVec3 w1{cd.omega1[0].coeff(idx), cd.omega1[1].coeff(idx), cd.omega1[2].coeff(idx)};
    FVec3 w2{cd.omega2[0].coeff(idx), cd.omega2[1].coeff(idx), cd.omega2[2].coeff(idx)};
    cd.omega[k] = dot(w1, cd.i_plus) + dot(w2, cd.i_minus);
  }
  // Omega^{0,1} along dzeta-bar is (Omega_u + i Omega_v) / 2; V^{0,1} takes half of it.
  const ScalarField quarter(GaussianRational(Rational(1, 4)));
  const ScalarField i(GaussianRational::i());
  for (std::size_t s = 0; s < 2; ++s) cd.v01[s] = quarter * (cd.omega[2 * s] + i * cd.omega[2 * s + 1]);
  return cd;
}

CheckReport check_unit_identity(const ConnectionData& cd) {
  CheckReport r;
  auto one_sphere = [&](const FVec3& c, const std::array<KForm, 3>& omega, const std::string& cn) {
    r.add(cn + "." + cn + " = 1", c[0] * c[0] + c[1] * c[1] + c[2] * c[2] == ScalarField(1));
    std::array<KForm, 3> dc{d_of(cd.chart, c[0]), d_of(cd.chart, c[1]), d_of(cd.chart, c[2])};
    r.add(cn + ".d" + cn + " = 0", (c[0] * dc[0] + c[1] * dc[1] + c[2] * dc[2]).is_zero());
    bool holds = true;
    for (std::size_t k = 0; k < 3; ++k) {
      std::size_t a = (k + 1) % 3, b = (k + 2) % 3;
      holds = holds && (c[b] * omega[a] - c[a] * omega[b]) == dc[k];
    }
    r.add("omega x " + cn + " = d" + cn, holds);
  };
  one_sphere(cd.c, cd.omega1, "c");
  one_sphere(cd.d, cd.omega2, "d");
  return r;
}

bool check_cross_commutator(const FVec3& a, const FVec3& b, const Projections& p) {
  auto ip = matrices(p.i_plus), im = matrices(p.i_minus);
  FVec3 axb = cross(a, b);
  const ScalarField two(2);
  return commutator(dot(a, ip), dot(b, ip)) == two * dot(axb, ip) &&
         commutator(dot(a, im), dot(b, im)) == two * dot(axb, im) && commutator(dot(a, ip), dot(b, im)).is_zero();
}

CheckReport check_dI_commutator(const ConnectionData& cd) {
  CheckReport r;
  const ScalarField h(half());
  for (std::size_t k = 0; k < 4; ++k)
    r.add("dIhat/d" + kSphereNames[k] + " = 1/2 [Omega_" + kSphereNames[k] + ", Ihat]",
          cd.ihat.diff(cd.offset + k) == h * commutator(cd.omega[k], cd.ihat));
  for (std::size_t s = 0; s < 2; ++s)
    r.add("dbar_zeta" + std::to_string(s + 1) + " Ihat = [V01_zeta" + std::to_string(s + 1) + ", Ihat]",
          dbar(cd.ihat, cd.offset + 2 * s) == commutator(cd.v01[s], cd.ihat));
  return r;
}

CheckReport check_dI_commutator(const CliffordTriple& t) { return check_dI_commutator(connection_data(t)); }

CheckReport check_flatness(const ConnectionData& cd) {
  CheckReport r;
  const Matrix& a = cd.v01[0];
  const Matrix& b = cd.v01[1];
  const std::size_t o = cd.offset;
  r.add("V01_zeta1 is independent of zeta2", !uses_var(a, o + 2) && !uses_var(a, o + 3));
  r.add("V01_zeta2 is independent of zeta1", !uses_var(b, o) && !uses_var(b, o + 1));
  r.add("V01_zeta1 lies in the + sector", cd.g_plus * a * cd.g_plus == a);
  r.add("V01_zeta2 lies in the - sector", cd.g_minus * b * cd.g_minus == b);
  Matrix ab = commutator(a, b);
  r.add("[V01_zeta1, V01_zeta2] = 0", ab.is_zero());
  // Coefficient of dzeta1-bar ^ dzeta2-bar in dbar V - V ^ V.
  r.add("dbar V - V^V = 0", (dbar(b, o) - dbar(a, o + 2) - ab).is_zero());
  return r;
}

CheckReport check_flatness(const CliffordTriple& t) { return check_flatness(connection_data(t)); }

EndField sphere_gcs(SphereOrientation o) {
  Matrix js = sphere_complex_structure();
  Matrix z(4, 4);
  Matrix m = o == SphereOrientation::standard ? Matrix::from_blocks(js, z, z, -js.transpose())
                                              : Matrix::from_blocks(-js, z, z, js.transpose());
  return EndField(sphere_chart(), m);
}

EndField twistor_structure(const CliffordTriple& t, SphereOrientation o) {
  if (!check_relations(t).ok()) throw PreconditionError("twistor structure needs a triple satisfying the relations");
  for (const auto& g : t.generators())
    if (!g.matrix().is_constant())
      throw PreconditionError("twistor structure needs constant-coefficient generators");
  ConnectionData cd = connection_data(t);
  Matrix m = product_block_sum(cd.ihat, cd.offset, sphere_gcs(o).matrix(), 4);
  return EndField(cd.chart, m, lift_flux(t.flux(), cd.chart));
}

TwistorReport check_twistor_integrability(const CliffordTriple& t, const TwistorOptions& opts) {
  TwistorReport rep;
  EndField big = twistor_structure(t, opts.orientation);
  const ChartRef& chart = big.chart();
  const std::size_t o = t.chart()->dim();
  const std::size_t dim = chart->dim();
  const VanishOptions vopts{opts.degree_bound, 10, {}};
  const std::string name = "N(Ihat+J)";

  if (opts.samples == 0) {
    rep.mode = "symbolic";
    rep.nijenhuis = vanishes(bind_nijenhuis(big, name), vopts);
  } else {
    rep.mode = "sampled";
    rep.sample_points = sample_twistor_points(opts.samples, opts.seed);
    rep.nijenhuis.name = name;
    rep.nijenhuis.degree_bound = opts.degree_bound;
    for (const auto& p : rep.sample_points) {
      auto at = sphere_coords(p);
      EndField jet = big.with_matrix(sphere_jet(big.matrix(), o, at));
      BoundTensor bt{name, chart, [jet, o, at](const Section& a, const Section& b) {
                       return substitute_sphere(nijenhuis(jet, a, b), o, at);
                     }};
      TensorReport tr = vanishes(bt, vopts);
      rep.nijenhuis.sample_count += tr.sample_count;
      if (!tr.vanished) rep.nijenhuis.vanished = false;
      for (auto& w : tr.witnesses)
        if (rep.nijenhuis.witnesses.size() < vopts.max_witnesses) rep.nijenhuis.witnesses.push_back(std::move(w));
    }
  }

  // Mixed brackets: sphere frame alpha against v = Ihat e_a, extended by zero.
  const Matrix& m = big.matrix();
  for (std::size_t k = 0; k < 4; ++k)
    for (bool covector : {false, true}) {
      Section alpha = Section::frame(chart, (covector ? dim : 0) + o + k);
      VectorField y = anchor(alpha);
      bool lie = true, coeff = true;
      for (std::size_t a = 0; a < 2 * o; ++a) {
        std::size_t col = a < o ? a : dim + (a - o);
        std::vector<ScalarField> flat(2 * dim);
        for (std::size_t r = 0; r < 2 * dim; ++r) flat[r] = m(r, col);
        Section v(chart, flat);
        Section lhs = bracket(alpha, v, big.flux_ptr());
        lie = lie && lhs == Section::from_parts(lie_bracket(y, v.vec()), lie_derivative(y, v.cov()));
        // L_{d/du} differentiates the coefficients; a sphere one-form has no anchor.
        if (!covector)
          for (auto& f : flat) f = f.diff(o + k);
        coeff = coeff && lhs == (covector ? Section::zero(chart) : Section(chart, flat));
      }
      std::string an = sphere_frame_name(k, covector);
      rep.mixed.add("[" + an + ", Ihat e_a]_D = L_rho(" + an + ") Ihat e_a", lie);
      rep.mixed.add(covector ? "[" + an + ", Ihat e_a]_D = 0" : "[" + an + ", Ihat e_a]_D = d/d" + kSphereNames[k] + " (Ihat e_a)",
                    coeff);
    }

  rep.verdict = rep.nijenhuis.vanished && rep.mixed.ok() ? Verdict::pass : Verdict::fail;
  return rep;
}

std::vector<TwistorPoint> sample_twistor_points(std::size_t count, std::uint64_t seed) {
  std::vector<TwistorPoint> out;
  const GaussianRational i = GaussianRational::i();
  const std::array<TwistorPoint, 3> fixed{
      TwistorPoint{GaussianRational(0), GaussianRational(0)}, TwistorPoint{GaussianRational(1), i},
      TwistorPoint{i, GaussianRational(1)}};
  for (std::size_t k = 0; k < std::min(count, fixed.size()); ++k) out.push_back(fixed[k]);
  // Raw engine output keeps the sequence identical across standard libraries.
  std::mt19937_64 rng(seed);
  auto coord = [&] {
    long num = static_cast<long>(rng() % 9) - 4;
    long den = static_cast<long>(rng() % 4) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
  };
  while (out.size() < count) {
    Rational a = coord(), b = coord(), c = coord(), d = coord();
    out.push_back({GaussianRational(a, b), GaussianRational(c, d)});
  }
  return out;
}

}  // namespace gencliff
