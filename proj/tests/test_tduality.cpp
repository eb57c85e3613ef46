#include <gtest/gtest.h>

#include "gencliff/errors.hpp"
#include "gencliff/examples.hpp"
#include "gencliff/tduality.hpp"
#include "support.hpp"

using namespace gencliff;
using gencliff::testing::P;
using gencliff::testing::S;

namespace {

GaussianRational gq(long re, long im = 0) { return GaussianRational(Rational(re), Rational(im)); }

CourantIso identity_iso(const ChartRef& c) {
  return CourantIso(c, Matrix::identity(2 * c->dim()), std::nullopt, std::nullopt, {});
}

}  // namespace

TEST(TorusDuality, OneDimensionalSwap) {
  auto c = standard_chart(1);
  CourantIso phi = make_torus_duality(c, 0);
  Matrix expected = Matrix::from_rows({{ScalarField(0), ScalarField(1)}, {ScalarField(1), ScalarField(0)}});
  EXPECT_EQ(phi.matrix(), expected);
  EXPECT_TRUE(check_orthogonality(phi));
  EXPECT_TRUE((phi.matrix() * phi.matrix()).is_identity());
  EXPECT_EQ(phi.invariant_coords(), std::vector<std::size_t>{0});
  EXPECT_THROW(make_torus_duality(c, 1), std::out_of_range);
}

TEST(TorusDuality, OrthogonalForEveryIndex) {
  auto c = standard_chart(4);
  for (std::size_t k = 0; k < 4; ++k) {
    CourantIso phi = make_torus_duality(c, k);
    EXPECT_TRUE(check_orthogonality(phi));
    EXPECT_EQ(phi(Section::frame(c, k)), Section::frame(c, 4 + k));
    EXPECT_EQ(phi(Section::frame(c, (k + 1) % 4)), Section::frame(c, (k + 1) % 4));
  }
}

TEST(CourantIsoCtor, RejectsBadMatrices) {
  auto c = standard_chart(2);
  Matrix scale = Matrix::identity(4);
  scale(0, 0) = ScalarField(2);
  EXPECT_THROW(CourantIso(c, scale, std::nullopt, std::nullopt, {}), PreconditionError);
  EXPECT_THROW(CourantIso(c, Matrix(4, 4), std::nullopt, std::nullopt, {}), PreconditionError);
  Matrix var = Matrix::identity(4);
  var(0, 1) = P("x1", c);
  EXPECT_THROW(CourantIso(c, var, std::nullopt, std::nullopt, {}), PreconditionError);
  EXPECT_THROW(CourantIso(c, Matrix::identity(2), std::nullopt, std::nullopt, {}), std::invalid_argument);
  EXPECT_THROW(CourantIso(c, Matrix::identity(4), std::nullopt, std::nullopt, {2}), std::invalid_argument);
}

TEST(Intertwine, InvariantProbes) {
  auto c = standard_chart(3);
  CourantIso phi = make_torus_duality(c, 0);
  IntertwineReport rep = check_intertwine(phi, 2);
  EXPECT_TRUE(rep.holds());
  // 6 frames times the 6 monomials of degree <= 2 in x2, x3.
  EXPECT_EQ(rep.pairs_checked, 36u * 36u);
}

TEST(Intertwine, HandExamples) {
  auto c = standard_chart(3);
  CourantIso phi = make_torus_duality(c, 0);
  Section a = S("d2", c), b = S("x2*e3", c);
  EXPECT_EQ(dorfman(a, b), S("e3", c));
  EXPECT_EQ(phi(dorfman(a, b)), S("e3", c));
  EXPECT_EQ(dorfman(phi(a), phi(b)), S("e3", c));
  // A fixed by Phi, B = x2 d1 sent to x2 dx1; both brackets vanish.
  Section fixed = S("d1 + e1", c), moving = S("x2*d1", c);
  EXPECT_EQ(phi(fixed), fixed);
  EXPECT_EQ(phi(moving), S("x2*e1", c));
  EXPECT_TRUE(dorfman(fixed, moving).is_zero());
  EXPECT_TRUE(dorfman(fixed, phi(moving)).is_zero());
  IntertwineReport rep = check_intertwine(phi, {{a, b}, {fixed, moving}});
  EXPECT_TRUE(rep.holds());
  EXPECT_EQ(rep.pairs_checked, 2u);
}

TEST(Intertwine, NonInvariantPairsAreRejected) {
  auto c = standard_chart(2);
  CourantIso phi = make_torus_duality(c, 0);
  // Off the invariant set the swap does not intertwine: [d1, x1 d2] = d2 while
  // [dx1, x1 d2] = 0. Such pairs are rejected, not reported as witnesses.
  Section a = S("d1", c), b = S("x1*d2", c);
  EXPECT_FALSE(phi(dorfman(a, b)) == dorfman(phi(a), phi(b)));
  IntertwineReport rep = check_intertwine(phi, {{a, b}});
  EXPECT_EQ(rep.pairs_checked, 0u);
  ASSERT_EQ(rep.rejected.size(), 1u);
  EXPECT_NE(rep.rejected[0].find("dualized"), std::string::npos);
  EXPECT_TRUE(rep.holds());
}

TEST(Conjugate, IdentityLeavesStructure) {
  auto hk = hyperkahler_r4();
  CourantIso id = identity_iso(hk.chart());
  EXPECT_EQ(conjugate(id, hk[0]), hk[0]);
}

TEST(Conjugate, ComplexTypeBecomesSymplecticType) {
  auto c = standard_chart(2);
  Matrix q = Matrix::from_rows({{ScalarField(0), ScalarField(-1)}, {ScalarField(1), ScalarField(0)}});
  EndField j(c, diag_type(q));
  EndField jt = conjugate(make_torus_duality(c, 0), j);
  Matrix m = jt.matrix();
  EXPECT_TRUE(is_almost_gcs(jt));
  // Original: diagonal blocks only. Dual: off-diagonal blocks only.
  EXPECT_TRUE(j.matrix().block(0, 2, 2, 2).is_zero());
  EXPECT_TRUE(m.block(0, 0, 2, 2).is_zero());
  EXPECT_TRUE(m.block(2, 2, 2, 2).is_zero());
  EXPECT_TRUE(m.block(0, 2, 2, 2).inverse().has_value());
  EXPECT_TRUE(m.block(2, 0, 2, 2).inverse().has_value());
}

TEST(Conjugate, Preconditions) {
  auto c = standard_chart(4);
  CourantIso phi = make_torus_duality(c, 0);
  EndField twisted = EndField::identity(c, FluxForm(KForm::basis(c, {1, 2, 3})));
  EXPECT_THROW(conjugate(phi, twisted), FluxMismatch);
  Matrix m = Matrix::identity(8);
  m(1, 1) = P("1 + x1", c);
  EXPECT_THROW(conjugate(phi, EndField(c, m)), PreconditionError);
  m(1, 1) = P("1 + x2", c);
  EXPECT_NO_THROW(conjugate(phi, EndField(c, m)));
}

TEST(Conjugate, ConcomitantTransport) {
  auto hk = hyperkahler_r4();
  CourantIso phi = make_torus_duality(hk.chart(), 0);
  auto c = hk.chart();
  std::vector<std::pair<Section, Section>> pairs{{S("x2*d1", c), S("e3 + x4*d2", c)},
                                                {S("x3^2*e1", c), S("x2*d4", c)},
                                                {S("d1", c), S("x1*d2", c)}};
  CheckReport r = check_concomitant_transport(phi, hk[0], hk[1], pairs);
  EXPECT_TRUE(r.ok());
  EXPECT_NE(r.entries[0].name.find("on 2 pairs"), std::string::npos);
}

TEST(Naturality, HyperkahlerDualizingX1) {
  auto hk = hyperkahler_r4();
  CourantIso phi = make_torus_duality(hk.chart(), 0);
  auto pts = sample_twistor_points(5, 2);
  NaturalityReport rep = check_naturality(phi, hk, pts, 1);
  EXPECT_EQ(rep.verdict, Verdict::pass);
  EXPECT_TRUE(rep.orthogonal);
  EXPECT_TRUE(rep.intertwine.holds());
  EXPECT_TRUE(rep.relations.ok());
  EXPECT_TRUE(rep.transport.ok());
  EXPECT_EQ(rep.transport.entries.size(), 6u);
  EXPECT_TRUE(rep.induced.ok());
  EXPECT_EQ(rep.rotations.entries.size(), 5u);
  EXPECT_TRUE(rep.rotations.ok());
  // The dual triple is a different structure.
  EXPECT_NE(conjugate(phi, hk[0]).matrix(), hk[0].matrix());
}

TEST(Naturality, RotationAtOneI) {
  auto hk = hyperkahler_r4();
  CourantIso phi = make_torus_duality(hk.chart(), 2);
  TwistorPoint p{gq(1), gq(0, 1)};
  CliffordTriple k = rotate_family(hk, p), kt = rotate_family(conjugate(phi, hk), p);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(kt[i], conjugate(phi, k[i]));
}

TEST(Naturality, IdentityIsoTriviallyHolds) {
  auto t = product_flip();
  NaturalityReport rep = check_naturality(identity_iso(t.chart()), t, {{gq(0), gq(0)}}, 0);
  EXPECT_EQ(rep.verdict, Verdict::pass);
}

TEST(Naturality, RejectsBrokenTriple) {
  auto hk = hyperkahler_r4();
  EXPECT_THROW(check_naturality(make_torus_duality(hk.chart(), 0), CliffordTriple(hk[0], hk[1], hk[0]), {}, 0),
               PreconditionError);
}
