#include <gtest/gtest.h>

#include "gencliff/errors.hpp"
#include "gencliff/examples.hpp"
#include "gencliff/twistor.hpp"

using namespace gencliff;

namespace {

GaussianRational gq(long re, long im = 0) { return GaussianRational(Rational(re), Rational(im)); }

/// The rotation written in real coordinates zeta = u + iv, expanded by hand.
RotationMatrix real_form_oracle(const GaussianRational& zeta) {
  const Rational u = zeta.re(), v = zeta.im();
  const Rational n = 1 + u * u + v * v;
  RotationMatrix m;
  m.rows[0] = {(1 - u * u - v * v) / n, 2 * v / n, -2 * u / n};
  m.rows[1] = {-2 * v / n, (1 + u * u - v * v) / n, 2 * u * v / n};
  m.rows[2] = {2 * u / n, 2 * u * v / n, (1 - u * u + v * v) / n};
  return m;
}

RotationMatrix from_ints(std::array<std::array<long, 3>, 3> rows) {
  RotationMatrix m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m.rows[r][c] = rows[r][c];
  return m;
}

Matrix eval_sphere(const Matrix& m, std::size_t offset, const TwistorPoint& p) {
  Matrix out = m;
  const std::array<GaussianRational, 4> at{p.zeta1.re(), p.zeta1.im(), p.zeta2.re(), p.zeta2.im()};
  for (std::size_t k = 0; k < 4; ++k) out = out.substitute(offset + k, at[k]);
  return out;
}

FVec3 unit(std::size_t k) {
  FVec3 e{ScalarField(0), ScalarField(0), ScalarField(0)};
  e[k] = ScalarField(1);
  return e;
}

}  // namespace

TEST(Stereo, Examples) {
  EXPECT_EQ(stereo_vec(gq(0)), (RVec3{1, 0, 0}));
  EXPECT_EQ(stereo_vec(gq(1)), (RVec3{0, 0, -1}));
  EXPECT_EQ(stereo_vec(gq(0, 1)), (RVec3{0, 1, 0}));
}

TEST(Rotation, DerivedMatrices) {
  EXPECT_EQ(rot_T(gq(0)), from_ints({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}));
  EXPECT_EQ(rot_T(gq(1)), from_ints({{{0, 0, -1}, {0, 1, 0}, {1, 0, 0}}}));
  EXPECT_EQ(rot_T(gq(0, 1)), from_ints({{{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}}));
  EXPECT_EQ(rot_S(gq(1)), rot_T(gq(1)));
}

TEST(Rotation, SampledPointsAreSpecialOrthogonal) {
  auto pts = sample_twistor_points(25, 7);
  ASSERT_EQ(pts.size(), 25u);
  for (const auto& p : pts)
    for (const auto& z : {p.zeta1, p.zeta2}) {
      RotationMatrix m = rot_T(z);
      CheckReport r = check_rotation(m);
      EXPECT_TRUE(r.ok()) << z.to_string();
      EXPECT_EQ(r.entries.size(), 5u);
      EXPECT_EQ(m.rows[0], stereo_vec(z));
      EXPECT_EQ(m, real_form_oracle(z)) << z.to_string();
      RVec3 c = stereo_vec(z);
      EXPECT_EQ(c[0] * c[0] + c[1] * c[1] + c[2] * c[2], 1);
    }
}

TEST(Rotation, CheckDetectsReflection) {
  RotationMatrix m = rot_T(gq(2, -1));
  for (auto& x : m.rows[2]) x = -x;
  CheckReport r = check_rotation(m);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failures(), (std::vector<std::string>{"det M = 1", "tau1 = tau2 x tau3", "tau2 = tau3 x tau1", "tau3 = tau1 x tau2"}));
}

TEST(SamplePoints, DeterministicWithFixedHead) {
  auto a = sample_twistor_points(12, 3), b = sample_twistor_points(12, 3), c = sample_twistor_points(12, 4);
  ASSERT_EQ(a.size(), 12u);
  EXPECT_TRUE(a[0].zeta1.is_zero() && a[0].zeta2.is_zero());
  EXPECT_EQ(a[1].zeta1, gq(1));
  EXPECT_EQ(a[2].zeta1, gq(0, 1));
  bool differs = false;
  for (std::size_t k = 0; k < 12; ++k) {
    EXPECT_EQ(a[k].zeta1, b[k].zeta1);
    EXPECT_EQ(a[k].zeta2, b[k].zeta2);
    differs = differs || !(a[k].zeta1 == c[k].zeta1) || !(a[k].zeta2 == c[k].zeta2);
  }
  EXPECT_TRUE(differs);
  EXPECT_EQ(sample_twistor_points(2, 0).size(), 2u);
}

TEST(RotationField, AgreesWithPointwise) {
  auto chart = sphere_chart();
  auto rot = rot_field(0, 1);
  FVec3 c = stereo_field(0, 1);
  for (const auto& p : sample_twistor_points(6, 11)) {
    std::vector<GaussianRational> at{p.zeta1.re(), p.zeta1.im(), 0, 0};
    RotationMatrix m = rot_T(p.zeta1);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(rot[r][k].eval(at), GaussianRational(m(r, k)));
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(c[k], rot[0][k]);
  }
}

TEST(Charts, TwistorChartAppendsSphere) {
  auto c = twistor_chart(standard_chart(4));
  ASSERT_EQ(c->dim(), 8u);
  EXPECT_EQ(c->name(4), "u1");
  EXPECT_EQ(c->name(7), "v2");
  EXPECT_THROW(twistor_chart(make_chart({"x", "u1"})), std::invalid_argument);
  EXPECT_EQ(sphere_chart()->dim(), 4u);
}

TEST(RotateFamily, OriginGivesInducedTriple) {
  auto hk = hyperkahler_r4();
  InducedStructures ind = induce(hk).induced;
  CliffordTriple k = rotate_family(hk, {gq(0), gq(0)});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(k[i].matrix(), ind.j[i].matrix());
}

TEST(RotateFamily, RelationsAndOrthogonalityAtPoints) {
  for (const auto& name : builtin_names()) {
    CliffordTriple t = builtin(name);
    for (const auto& p : sample_twistor_points(4, 5)) {
      CliffordTriple k = rotate_family(t, p);
      EXPECT_TRUE(check_relations(k).ok()) << name;
      for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(is_orthogonal(k[i])) << name;
    }
  }
  CliffordTriple k = rotate_family(hyperkahler_r4(), {gq(1), gq(0, 1)});
  EXPECT_TRUE(check_relations(k).ok());
}

TEST(RotateFamily, FirstMemberIsIhat) {
  auto hk = hyperkahler_r4();
  auto cd = connection_data(hk);
  for (const auto& p : sample_twistor_points(6, 9)) {
    Matrix k1 = rotate_family(hk, p)[0].matrix();
    EXPECT_EQ(k1, ihat_at(hk, p).matrix());
    EXPECT_EQ(k1, eval_sphere(cd.ihat, cd.offset, p));
  }
}

TEST(RotateFamily, Integrable) {
  auto hk = hyperkahler_r4();
  CliffordTriple k = rotate_family(hk, {GaussianRational(Rational(1, 2), Rational(-3)), gq(2, 1)});
  for (const auto& r : check_integrability(k, 1)) EXPECT_TRUE(r.vanished) << r.name;
}

TEST(RotateFamily, RejectsBrokenRelations) {
  auto hk = hyperkahler_r4();
  EXPECT_THROW(rotate_family(CliffordTriple(hk[0], hk[1], hk[0]), {gq(0), gq(0)}), PreconditionError);
}

TEST(CrossCommutator, Examples) {
  auto hk = hyperkahler_r4();
  Projections p = project(induce(hk).induced, hk).proj;
  EXPECT_TRUE(check_cross_commutator(unit(0), unit(1), p));
  EXPECT_EQ(commutator(p.i_plus[0].matrix(), p.i_plus[1].matrix()), ScalarField(2) * p.i_plus[2].matrix());
  EXPECT_TRUE(check_cross_commutator(unit(2), unit(2), p));
  EXPECT_TRUE(commutator(p.i_plus[0].matrix(), p.i_minus[1].matrix()).is_zero());
  EXPECT_TRUE(check_cross_commutator(stereo_field(0, 1), stereo_field(2, 3), p));
  // Swapping the sectors breaks the rule.
  Projections swapped = p;
  std::swap(swapped.i_plus[0], swapped.i_plus[1]);
  EXPECT_FALSE(check_cross_commutator(unit(0), unit(1), swapped));
}

TEST(Connection, UnitIdentity) {
  auto cd = connection_data(hyperkahler_r4());
  CheckReport r = check_unit_identity(cd);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.entries.size(), 6u);
  EXPECT_EQ(cd.offset, 4u);
  EXPECT_EQ(cd.chart->dim(), 8u);
  // omega_1 only involves the first sphere.
  for (const auto& w : cd.omega1) {
    EXPECT_TRUE(w.coeff({6}).is_zero());
    EXPECT_TRUE(w.coeff({7}).is_zero());
  }
}

TEST(Connection, DICommutatorForBuiltins) {
  for (const auto& name : builtin_names()) {
    CheckReport r = check_dI_commutator(builtin(name));
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_EQ(r.entries.size(), 6u);
  }
}

TEST(Connection, DICommutatorAtOrigin) {
  auto cd = connection_data(hyperkahler_r4());
  TwistorPoint o{gq(0), gq(0)};
  for (std::size_t k = 0; k < 4; ++k) {
    Matrix lhs = eval_sphere(cd.ihat.diff(cd.offset + k), cd.offset, o);
    Matrix rhs = ScalarField(GaussianRational(Rational(1, 2))) *
                 commutator(eval_sphere(cd.omega[k], cd.offset, o), eval_sphere(cd.ihat, cd.offset, o));
    EXPECT_EQ(lhs, rhs);
    EXPECT_FALSE(lhs.is_zero());
  }
}

TEST(Connection, DICommutatorDetectsWrongFactor) {
  auto cd = connection_data(hyperkahler_r4());
  cd.omega[0] = ScalarField(2) * cd.omega[0];
  EXPECT_EQ(check_dI_commutator(cd).failures(), std::vector<std::string>{"dIhat/du1 = 1/2 [Omega_u1, Ihat]"});
}

TEST(Connection, FlatnessForBuiltins) {
  for (const auto& name : builtin_names()) {
    CheckReport r = check_flatness(builtin(name));
    EXPECT_TRUE(r.ok()) << name;
  }
}

TEST(Connection, FlatnessDetectsMixedSectors) {
  auto cd = connection_data(hyperkahler_r4());
  cd.v01[1] = cd.v01[1] + cd.v01[0];
  CheckReport r = check_flatness(cd);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.entries[1].holds);
}

TEST(SphereGcs, Orientations) {
  for (auto o : {SphereOrientation::standard, SphereOrientation::anti}) {
    EndField j = sphere_gcs(o);
    EXPECT_TRUE((-(j * j).matrix()).is_identity());
    EXPECT_TRUE(is_almost_gcs(j));
    EXPECT_TRUE(vanishes(bind_nijenhuis(j), 1).vanished);
  }
  // anti: d/dzeta1-bar = (d_u1 + i d_v1)/2 and dzeta1 = du1 + i dv1 span +i directions.
  auto c = sphere_chart();
  const GaussianRational i = GaussianRational::i();
  std::vector<ScalarField> zbar_vec(8), zeta_form(8);
  zbar_vec[0] = ScalarField(1);
  zbar_vec[1] = ScalarField(i);
  zeta_form[4] = ScalarField(1);
  zeta_form[5] = ScalarField(i);
  EndField anti = sphere_gcs(SphereOrientation::anti), standard = sphere_gcs(SphereOrientation::standard);
  for (const auto& flat : {zbar_vec, zeta_form}) {
    Section s(c, flat);
    EXPECT_EQ(anti(s), ScalarField(i) * s);
    EXPECT_EQ(standard(s), ScalarField(-i) * s);
  }
}

TEST(TwistorStructure, Blocks) {
  auto hk = hyperkahler_r4();
  EndField big = twistor_structure(hk);
  ASSERT_EQ(big.size(), 16u);
  EXPECT_TRUE(is_almost_gcs(big));
  EXPECT_TRUE((-(big * big).matrix()).is_identity());
  // M-block at the origin is J1.
  Matrix at0 = eval_sphere(big.matrix(), 4, {gq(0), gq(0)});
  Matrix m_block = Matrix::from_blocks(at0.block(0, 0, 4, 4), at0.block(0, 8, 4, 4), at0.block(8, 0, 4, 4),
                                       at0.block(8, 8, 4, 4));
  EXPECT_EQ(m_block, induce(hk).induced.j[0].matrix());
  Matrix s_block = Matrix::from_blocks(at0.block(4, 4, 4, 4), at0.block(4, 12, 4, 4), at0.block(12, 4, 4, 4),
                                       at0.block(12, 12, 4, 4));
  EXPECT_EQ(s_block, sphere_gcs().matrix());
}

TEST(TwistorStructure, Preconditions) {
  auto hk = hyperkahler_r4();
  EXPECT_THROW(twistor_structure(CliffordTriple(hk[0], hk[1], hk[0])), PreconditionError);
  EXPECT_THROW(twistor_structure(product_flip_twisted()), PreconditionError);
}

TEST(TwistorIntegrability, SymbolicHyperkahler) {
  TwistorReport rep = check_twistor_integrability(hyperkahler_r4(), {});
  EXPECT_EQ(rep.verdict, Verdict::pass);
  EXPECT_EQ(rep.mode, "symbolic");
  EXPECT_TRUE(rep.nijenhuis.vanished);
  EXPECT_EQ(rep.nijenhuis.sample_count, 256u);
  EXPECT_TRUE(rep.mixed.ok());
  EXPECT_EQ(rep.mixed.entries.size(), 16u);
}

TEST(TwistorIntegrability, SampledHyperkahler) {
  TwistorOptions opts;
  opts.samples = 3;
  opts.seed = 1;
  TwistorReport rep = check_twistor_integrability(hyperkahler_r4(), opts);
  EXPECT_EQ(rep.verdict, Verdict::pass);
  EXPECT_EQ(rep.mode, "sampled");
  EXPECT_EQ(rep.sample_points.size(), 3u);
  EXPECT_EQ(rep.nijenhuis.sample_count, 3u * 256u);
}

TEST(TwistorIntegrability, AntiOrientationHasWitness) {
  TwistorOptions opts;
  opts.orientation = SphereOrientation::anti;
  opts.samples = 1;
  TwistorReport rep = check_twistor_integrability(hyperkahler_r4(), opts);
  EXPECT_EQ(rep.verdict, Verdict::fail);
  ASSERT_FALSE(rep.nijenhuis.witnesses.empty());
  EXPECT_FALSE(rep.nijenhuis.witnesses[0].value.is_zero());
  EXPECT_TRUE(rep.mixed.ok());
}

TEST(TwistorIntegrability, ProductFlipSampled) {
  TwistorOptions opts;
  opts.samples = 1;
  TwistorReport rep = check_twistor_integrability(product_flip(), opts);
  EXPECT_EQ(rep.verdict, Verdict::pass);
}
