#include <gtest/gtest.h>

#include <random>

#include "bfmlift/grammar.hpp"
#include "bfmlift/groebner.hpp"
#include "bfmlift/laurent.hpp"
#include "test_support.hpp"

using namespace bfmlift;
using bfmlift::testing::random_point;
using bfmlift::testing::random_poly;

namespace {

using QPoly = Polynomial<Rational>;

QPoly Q(const std::string& s, const RingPtr& r) {
  return map_coefficients<Rational>(parse_polynomial(s, r), [](const NovCoeff& c) {
    if (!c.is_constant() || !c.is_real()) throw Error("test polynomial must have rational coefficients");
    return c.constant_part().re;
  });
}

std::string F(const QPoly& p) {
  return format(map_coefficients<NovCoeff>(p, [](const Rational& c) { return NovCoeff(c); }));
}

std::complex<double> eval(const QPoly& p, const std::vector<std::complex<double>>& x) {
  return evaluate_with(p, x, [](const Rational& c) { return std::complex<double>(c.get_d()); });
}

RingPtr zh() { return cotangent_ring(1); }
RingPtr wh() { return moduli_ring(1, 1); }
RingPtr wzh() { return moduli_ring(1, 1, true); }

PolyIdeal<Rational> example1() { return {zh(), {Q("h - z + z^-1", zh())}}; }
PolyIdeal<Rational> example2() { return {wzh(), {Q("z - w^2", wzh()), Q("2*h - w + w^-1", wzh())}}; }

// Generators of two ideals agree when each basis lies in the other.
bool same_ideal(const GroebnerBasis<Rational>& a, const GroebnerBasis<Rational>& b) {
  for (const auto& g : a.elements())
    if (!b.contains(g)) return false;
  for (const auto& g : b.elements())
    if (!a.contains(g)) return false;
  return true;
}

}  // namespace

TEST(Groebner, LaurentCurveBasis) {
  auto g = groebner<Rational>({wh(), {Q("h - w + w^-1", wh())}});
  EXPECT_TRUE(g.is_reduced());
  EXPECT_TRUE(g.s_pairs_reduce_to_zero());
  // The reduced basis in (u, w, h) is {u - w + h, w^2 - w*h - 1}.
  auto enc = g.encoded_elements();
  std::vector<std::string> shown;
  for (const auto& p : enc) shown.push_back(F(p));
  EXPECT_EQ(shown, (std::vector<std::string>{"u_w - w + h", "w^2 - w*h - 1"}));
  // Same ideal as {h*w - w^2 + 1, u*w - 1} in the plain polynomial ring (u, w, h).
  Ring plain;
  plain.names = {"u_w", "w", "h"};
  plain.laurent = {false, false, false};
  RingPtr pr = make_ring(plain);
  auto hand = groebner<Rational>({pr, {Q("h*w - w^2 + 1", pr), Q("u_w*w - 1", pr)}});
  auto mine = groebner<Rational>({pr, {embed(enc[0], pr), embed(enc[1], pr)}});
  EXPECT_TRUE(same_ideal(hand, mine));
}

TEST(Groebner, UnitAndRedundantGenerators) {
  RingPtr r = base_ring(1);
  auto unit = groebner<Rational>({r, {Q("1", r)}});
  EXPECT_TRUE(unit.is_unit());
  EXPECT_FALSE(dimension(unit).has_value());
  auto g = groebner<Rational>({r, {Q("w^2 - 1", r), Q("w - 1", r)}});
  auto el = g.elements();
  auto line = groebner<Rational>({r, {Q("w - 1", r)}});
  EXPECT_EQ(F(g.encoded_elements().front()), "w - 1");
  for (const auto& p : el) EXPECT_TRUE(line.contains(p)) << F(p);
  // w is a unit: (w) is the whole ring
  EXPECT_TRUE(groebner<Rational>({r, {Q("w", r)}}).is_unit());
}

TEST(Groebner, BudgetExceededIsExplicit) {
  RingPtr r = base_ring(3);
  PolyIdeal<Rational> hard{r, {Q("w1^3 + w2^2*w3 - 1", r), Q("w2^3 - w1*w3 + 2", r), Q("w3^3 - w1^2 + w2", r)}};
  EXPECT_THROW(groebner(hard, MonomialOrder::grevlex(), Budget{3}), BudgetExceeded);
}

TEST(NormalForm, GeneratorsAndLinearity) {
  auto I = example1();
  auto g = groebner(I);
  for (const auto& gen : I.generators) EXPECT_TRUE(normal_form(gen, g).is_zero());
  std::mt19937 rng(2);
  for (int k = 0; k < 20; ++k) {
    QPoly p = random_poly<Rational>(zh(), rng, 4, 3), q = random_poly<Rational>(zh(), rng, 4, 3);
    EXPECT_EQ(normal_form(p + q, g), normal_form(normal_form(p, g) + normal_form(q, g), g));
  }
  EXPECT_TRUE(normal_form(Q("z^2 - 1 - z*h", zh()), g).is_zero());
  EXPECT_THROW(normal_form(Q("w", wh()), g), Error);
}

TEST(NormalForm, MembershipMatchesSubstitutionOracle) {
  // p(z,h) lies in (h - z + z^-1) iff p(z, z - z^-1) = 0 identically.
  auto g = groebner(example1());
  RingPtr r = zh();
  RingPtr zr = base_ring(1);
  std::vector<QPoly> images = {Q("w", zr), Q("w - w^-1", zr)};
  std::mt19937 rng(31);
  int members = 0;
  for (int k = 0; k < 60; ++k) {
    QPoly p = random_poly<Rational>(r, rng, 3, 2);
    if (k % 2 == 0) p = random_poly<Rational>(r, rng, 3, 2) * example1().generators[0];
    if (k % 6 == 0) p += random_poly<Rational>(r, rng, 1, 0);
    bool oracle = substitute(p, images, zr).is_zero();
    EXPECT_EQ(g.contains(p), oracle) << F(p);
    members += oracle;
  }
  EXPECT_GT(members, 10);
}

TEST(NormalForm, RandomCombinationsAreMembers) {
  std::mt19937 rng(17);
  RingPtr r = moduli_ring(2, 1);
  for (int t = 0; t < 5; ++t) {
    PolyIdeal<Rational> I{r, {random_poly<Rational>(r, rng, 3, 1), random_poly<Rational>(r, rng, 3, 1)}};
    auto g = groebner(I);
    for (int k = 0; k < 10; ++k) {
      QPoly p = random_poly<Rational>(r, rng, 3, 1) * I.generators[0] + random_poly<Rational>(r, rng, 3, 1) * I.generators[1];
      EXPECT_TRUE(g.contains(p));
    }
  }
}

TEST(NormalForm, OrderIndependentMembership) {
  std::mt19937 rng(5);
  RingPtr r = moduli_ring(1, 1, true);
  auto I = example2();
  auto a = groebner(I, MonomialOrder::grevlex());
  auto b = groebner(I, MonomialOrder::lex());
  auto c = groebner(I, MonomialOrder::elimination({"w"}));
  for (int k = 0; k < 20; ++k) {
    QPoly p = random_poly<Rational>(r, rng, 3, 2);
    if (k % 2) p = p * I.generators[k % 4 == 1 ? 0 : 1] + (k % 3 == 0 ? QPoly::constant(r, Rational(1)) : QPoly(r));
    bool in = a.contains(p);
    EXPECT_EQ(in, b.contains(p)) << F(p);
    EXPECT_EQ(in, c.contains(p)) << F(p);
  }
}

TEST(NormalForm, NumericConsistencyOnVariety) {
  auto I = example2();
  auto g = groebner(I);
  std::mt19937 rng(44);
  std::vector<std::vector<std::complex<double>>> pts;
  for (int k = 0; k < 10; ++k) {
    auto w = random_point(1, rng)[0];
    pts.push_back({w, w * w, 0.5 * (w - 1.0 / w)});
  }
  for (int k = 0; k < 20; ++k) {
    QPoly p = random_poly<Rational>(wzh(), rng, 3, 2) * I.generators[k % 2];
    ASSERT_TRUE(g.contains(p));
    for (const auto& x : pts) EXPECT_LT(std::abs(eval(p, x)), 1e-8);
  }
}

TEST(Eliminate, ExampleTwoImage) {
  auto out = eliminate(example2(), {"z", "h"});
  ASSERT_EQ(out.generators.size(), 1u);
  EXPECT_EQ(F(out.generators[0]), "4*z*h^2 - z^2 + 2*z - 1");
  // Resultant oracle: the relation vanishes on the parametrization.
  RingPtr wr = base_ring(1);
  QPoly res = substitute(out.generators[0], {Q("w^2", wr), Q("1/2*w - 1/2*w^-1", wr)}, wr);
  EXPECT_TRUE(res.is_zero());
}

TEST(Eliminate, TrivialCases) {
  auto I = example1();
  auto same = eliminate(I, {"z", "h"});
  auto g1 = groebner(I), g2 = groebner(same);
  EXPECT_TRUE(same_ideal(g1, g2));
  RingPtr r = cotangent_ring(1);
  auto none = eliminate(PolyIdeal<Rational>{r, {Q("h - 1", r)}}, {});
  EXPECT_TRUE(none.generators.empty());
  EXPECT_THROW(eliminate(I, {"x"}), Error);
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension<Rational>({wh(), {Q("h - w + w^-1", wh())}}), 1);
  EXPECT_EQ(dimension<Rational>({wh(), {}}), 2);
  auto I = example1();
  I.generators.push_back(Q("h", zh()));
  EXPECT_EQ(dimension(I), 0);
  RingPtr r = base_ring(1);
  EXPECT_FALSE(dimension<Rational>({r, {Q("w - 1", r), Q("w + 1", r)}}).has_value());
}

TEST(Cofactor, PaperExamples) {
  auto g1 = groebner(example1());
  auto x1 = cofactor(Q("z^2 - 1", zh()), Q("h", zh()), g1);
  ASSERT_TRUE(x1.has_value());
  EXPECT_EQ(F(*x1), "z");

  auto g2 = groebner(example2());
  auto x2 = cofactor(Q("z - 1", wzh()), Q("h", wzh()), g2);
  ASSERT_TRUE(x2.has_value());
  EXPECT_EQ(F(*x2), "2*w");

  QPoly d = Q("z + h^2", zh());
  auto x3 = cofactor(d, d, g1);
  ASSERT_TRUE(x3.has_value());
  EXPECT_EQ(F(*x3), "1");
}

TEST(Cofactor, NoneWhenNotContained) {
  RingPtr r = zh();
  auto g = groebner<Rational>({r, {Q("h - z + 2", r)}});
  EXPECT_FALSE(cofactor(Q("z^2 - 1", r), Q("h", r), g).has_value());
}

TEST(Cofactor, RandomIdentityReverified) {
  std::mt19937 rng(9);
  auto I = example2();
  auto g = groebner(I);
  QPoly d = Q("h", wzh());
  for (int k = 0; k < 10; ++k) {
    QPoly x = random_poly<Rational>(wzh(), rng, 2, 1);
    QPoly p = x * d + random_poly<Rational>(wzh(), rng, 2, 1) * I.generators[k % 2];
    auto got = cofactor(p, d, g);
    ASSERT_TRUE(got.has_value());
    EXPECT_TRUE(g.contains(*got * d - p));
    EXPECT_EQ(*got, g.normal_form(*got));
  }
}
