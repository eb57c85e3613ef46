#include <gtest/gtest.h>

#include <random>

#include "gencliff/cartan.hpp"
#include "gencliff/parse.hpp"
#include "random_data.hpp"

using namespace gencliff;
using gencliff::testing::random_poly;

namespace {

ChartRef R(std::size_t n) { return standard_chart(n); }

ScalarField P(const std::string& s, const ChartRef& c) { return parse_expr(s, *c); }

VectorField vf(const ChartRef& c, std::vector<std::string> comps) {
  std::vector<ScalarField> out;
  for (auto& s : comps) out.push_back(P(s, c));
  return VectorField(c, out);
}

KForm dx(const ChartRef& c, FormIndex idx) { return KForm::basis(c, std::move(idx)); }

VectorField random_vf(std::mt19937_64& rng, const ChartRef& c, unsigned deg) {
  std::vector<ScalarField> comps;
  for (std::size_t k = 0; k < c->dim(); ++k) comps.emplace_back(random_poly(rng, c->dim(), deg, 3));
  return VectorField(c, comps);
}

KForm random_form(std::mt19937_64& rng, const ChartRef& c, unsigned degree, unsigned coeff_deg) {
  KForm w(c, degree);
  std::uniform_int_distribution<int> coord(0, static_cast<int>(c->dim()) - 1);
  for (int t = 0; t < 3; ++t) {
    FormIndex idx;
    for (unsigned k = 0; k < degree; ++k) idx.push_back(static_cast<std::uint8_t>(coord(rng)));
    w.add_term(idx, random_poly(rng, c->dim(), coeff_deg, 3));
  }
  return w;
}

}  // namespace

TEST(PermutationSign, Basics) {
  FormIndex a{2, 0, 1};
  EXPECT_EQ(permutation_sign(a), 1);
  EXPECT_EQ(a, (FormIndex{0, 1, 2}));
  FormIndex b{1, 0};
  EXPECT_EQ(permutation_sign(b), -1);
  FormIndex c{1, 2, 1};
  EXPECT_EQ(permutation_sign(c), 0);
}

TEST(ExteriorD, SpecExamples) {
  auto c = R(3);
  EXPECT_EQ(exterior_d(P("x1", c) * dx(c, {1})), dx(c, {0, 1}));
  EXPECT_TRUE(exterior_d(dx(c, {0, 1})).is_zero());
  EXPECT_EQ(exterior_d(P("x1", c) * dx(c, {1, 2})), dx(c, {0, 1, 2}));
}

TEST(Interior, SpecExamples) {
  auto c = R(3);
  auto d1 = VectorField::coordinate(c, 0), d2 = VectorField::coordinate(c, 1);
  EXPECT_EQ(interior(d1, dx(c, {0, 1})), dx(c, {1}));
  EXPECT_EQ(interior(d2, dx(c, {0, 1})), -dx(c, {0}));
  EXPECT_EQ(interior(d2, interior(d1, dx(c, {0, 1, 2}))), dx(c, {2}));
  EXPECT_THROW(interior(d1, KForm::scalar(c, P("x1", c))), std::invalid_argument);
}

TEST(LieBracket, SpecExamples) {
  auto c = R(2);
  auto d1 = VectorField::coordinate(c, 0), d2 = VectorField::coordinate(c, 1);
  EXPECT_TRUE(lie_bracket(d1, d2).is_zero());
  EXPECT_EQ(lie_bracket(d1, vf(c, {"0", "x1"})), d2);
  EXPECT_EQ(lie_bracket(vf(c, {"0", "x1"}), vf(c, {"x2", "0"})), vf(c, {"x1", "-x2"}));
  EXPECT_THROW(lie_bracket(d1, VectorField::coordinate(R(3), 0)), std::invalid_argument);
}

TEST(LieDerivative, SpecExamples) {
  auto c = R(2);
  auto d1 = VectorField::coordinate(c, 0);
  EXPECT_EQ(lie_derivative(d1, P("x1", c) * dx(c, {1})), dx(c, {1}));
  EXPECT_TRUE(lie_derivative(d1, dx(c, {0})).is_zero());
  EXPECT_EQ(lie_derivative(vf(c, {"x1", "0"}), dx(c, {0})), dx(c, {0}));
}

TEST(IsClosed, SpecExamples) {
  auto c3 = R(3), c4 = R(4);
  EXPECT_TRUE(is_closed(dx(c3, {0, 1, 2})));
  EXPECT_FALSE(is_closed(P("x1", c4) * dx(c4, {1, 2, 3})));
  EXPECT_EQ(exterior_d(P("x1", c4) * dx(c4, {1, 2, 3})), dx(c4, {0, 1, 2, 3}));
  KForm b = P("x1*x3", c4) * dx(c4, {1, 3}) + P("x2^2", c4) * dx(c4, {0, 2});
  EXPECT_TRUE(is_closed(exterior_d(b)));
}

TEST(CartanProperties, DSquaredIsZero) {
  std::mt19937_64 rng(3);
  auto c = R(4);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned deg = static_cast<unsigned>(trial % 4);
    KForm w = random_form(rng, c, deg, 3);
    ASSERT_TRUE(exterior_d(exterior_d(w)).is_zero()) << w.to_string();
  }
}

TEST(CartanProperties, LieDerivativeTwoPathsAgree) {
  std::mt19937_64 rng(5);
  auto c = R(3);
  for (int trial = 0; trial < 120; ++trial) {
    VectorField x = random_vf(rng, c, 2);
    KForm w = random_form(rng, c, static_cast<unsigned>(trial % 4), 2);
    ASSERT_EQ(lie_derivative(x, w), lie_derivative_cartan(x, w));
  }
}

TEST(CartanProperties, JacobiIdentity) {
  std::mt19937_64 rng(7);
  auto c = R(3);
  for (int trial = 0; trial < 60; ++trial) {
    VectorField x = random_vf(rng, c, 2), y = random_vf(rng, c, 2), z = random_vf(rng, c, 2);
    VectorField sum = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                      lie_bracket(z, lie_bracket(x, y));
    ASSERT_TRUE(sum.is_zero());
    ASSERT_EQ(lie_bracket(x, y), -lie_bracket(y, x));
  }
}

TEST(CartanProperties, ContractionIsTensorialAndNilpotent) {
  std::mt19937_64 rng(9);
  auto c = R(4);
  for (int trial = 0; trial < 60; ++trial) {
    VectorField x = random_vf(rng, c, 1);
    ScalarField f(random_poly(rng, 4, 2, 3));
    KForm w = random_form(rng, c, 1 + static_cast<unsigned>(trial % 3), 2);
    ASSERT_EQ(interior(f * x, w), f * interior(x, w));
    if (w.degree() >= 2) ASSERT_TRUE(interior(x, interior(x, w)).is_zero());
  }
}

TEST(KForm, WedgeAndEmbedding) {
  auto c = R(3);
  EXPECT_EQ(wedge(dx(c, {1}), dx(c, {0})), -dx(c, {0, 1}));
  EXPECT_TRUE(wedge(dx(c, {0}), dx(c, {0})).is_zero());
  EXPECT_EQ(KForm::scalar(c, P("x2", c)).as_scalar(), P("x2", c));
}

TEST(KForm, Printing) {
  auto c = R(3);
  KForm w = P("x1", c) * dx(c, {0, 2}) - P("2", c) * dx(c, {1, 2});
  EXPECT_EQ(w.to_string(), "x1*e1^e3 - 2*e2^e3");
  EXPECT_EQ(vf(c, {"x2", "-1", "x1 + 1"}).to_string(), "x2*d1 - d2 + (x1 + 1)*d3");
}
