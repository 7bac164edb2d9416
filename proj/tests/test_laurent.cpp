#include <gtest/gtest.h>

#include <random>

#include "bfmlift/grammar.hpp"
#include "bfmlift/laurent.hpp"
#include "test_support.hpp"

using namespace bfmlift;
using bfmlift::testing::random_point;
using bfmlift::testing::random_poly;

namespace {

RingPtr w1() { return base_ring(1); }
LaurentPoly P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

}  // namespace

TEST(Ring, Operations) {
  RingPtr r = w1();
  LaurentPoly w = LaurentPoly::variable(r, 0);
  EXPECT_EQ((w + w.pow(-1)) * w, P("w^2 + 1", r));
  LaurentPoly p = P("3*w^2 - 1/2*w^-1 + q", r);
  EXPECT_TRUE((p + (-p)).is_zero());
  LaurentPoly one = LaurentPoly::constant(r, 1);
  LaurentPoly c = w + one;
  EXPECT_EQ(c.pow(3), c * c * c);
  EXPECT_EQ(c.pow(3), P("w^3 + 3*w^2 + 3*w + 1", r));
}

TEST(Ring, IncompatibleUniversesRejected) {
  LaurentPoly a = P("w", base_ring(1));
  LaurentPoly b = P("w1", base_ring(2));
  EXPECT_THROW(a + b, Error);
  EXPECT_THROW(a * b, Error);
  EXPECT_THROW(P("h^-1", cotangent_ring(1)), ParseError);
  EXPECT_THROW(LaurentPoly::variable(cotangent_ring(1), 1).pow(-1), Error);
}

TEST(LogDerivative, Examples) {
  RingPtr r = w1();
  EXPECT_EQ(log_derivative(P("w + w^-1", r), 0), P("w - w^-1", r));
  EXPECT_TRUE(log_derivative(P("5", r), 0).is_zero());
  EXPECT_THROW(log_derivative(P("h", cotangent_ring(1)), 1), Error);
}

TEST(LogDerivative, FiniteDifferenceOracle) {
  RingPtr r = base_ring(2);
  LaurentPoly p = P("w1*w2 + w1^-2", r);
  LaurentPoly d = log_derivative(p, 0);
  EXPECT_EQ(d, P("w1*w2 - 2*w1^-2", r));
  std::mt19937 rng(3);
  for (int k = 0; k < 5; ++k) {
    auto x = random_point(2, rng);
    const double t = 1e-6;
    auto plus = x, minus = x;
    plus[0] *= std::exp(t);
    minus[0] *= std::exp(-t);
    std::complex<double> fd = (evaluate(p, plus) - evaluate(p, minus)) / (2 * t);
    EXPECT_LT(std::abs(fd - evaluate(d, x)), 1e-8);
  }
}

TEST(LogDerivative, LeibnizExact) {
  std::mt19937 rng(21);
  RingPtr r = base_ring(3);
  for (int k = 0; k < 100; ++k) {
    LaurentPoly p = random_poly(r, rng, 4, 3, true), q = random_poly(r, rng, 4, 3, true);
    std::size_t i = static_cast<std::size_t>(k % 3);
    EXPECT_EQ(log_derivative(p * q, i), log_derivative(p, i) * q + p * log_derivative(q, i));
  }
}

TEST(Pullback, Examples) {
  MonomialMap sq{IntMatrix::from_rows({{2}}, 1)};
  EXPECT_EQ(pullback(sq, P("z", cotangent_ring(1))), P("w^2", moduli_ring(1, 1)));
  MonomialMap id{IntMatrix::identity(2)};
  LaurentPoly p = P("z1*h2 - 3*z2^-1 + h1^2", cotangent_ring(2));
  EXPECT_EQ(format(pullback(id, p)), "w1*h2 + h1^2 - 3*w2^-1");

  MonomialMap row{IntMatrix::from_rows({{1, 1}}, 2)};
  LaurentPoly f = P("z - 1", cotangent_ring(1));
  LaurentPoly g = pullback(row, f);
  EXPECT_EQ(g, P("w1*w2 - 1", moduli_ring(2, 1)));
  std::mt19937 rng(8);
  for (int k = 0; k < 5; ++k) {
    auto w = random_point(2, rng);
    std::complex<double> h(0.3, -0.2);
    auto z = row.apply(w);
    EXPECT_LT(std::abs(evaluate(g, {w[0], w[1], h}) - evaluate(f, {z[0], h})), 1e-10);
  }
  EXPECT_THROW(pullback(row, P("z1", cotangent_ring(2))), Error);
}

TEST(Pullback, RingHomomorphismAndEvaluationCompatibility) {
  std::mt19937 rng(99);
  MonomialMap m{IntMatrix::from_rows({{1, -2, 0}, {3, 1, 1}}, 3)};
  RingPtr src = cotangent_ring(2);
  for (int k = 0; k < 100; ++k) {
    LaurentPoly p = random_poly(src, rng, 3, 2, true), q = random_poly(src, rng, 3, 2);
    EXPECT_EQ(pullback(m, p * q), pullback(m, p) * pullback(m, q));
    if (k < 10) {
      auto w = random_point(3, rng);
      auto z = m.apply(w);
      std::vector<std::complex<double>> h = {{0.4, 0.1}, {-0.7, 0.2}};
      std::complex<double> lhs = evaluate(pullback(m, p), {w[0], w[1], w[2], h[0], h[1]});
      std::complex<double> rhs = evaluate(p, {z[0], z[1], h[0], h[1]});
      EXPECT_LT(std::abs(lhs - rhs), 1e-9 * (1 + std::abs(rhs)));
    }
  }
}

TEST(Poisson, GeneratorRules) {
  RootDatum psu2 = preset("PSU2");
  RingPtr r = cotangent_ring(1);
  EXPECT_EQ(poisson(P("z^2", r), P("h", r), psu2), P("2*z^2", r));
  EXPECT_TRUE(poisson(P("z", r), P("z^-1", r), psu2).is_zero());
  EXPECT_TRUE(poisson(P("h", r), P("h^3", r), psu2).is_zero());

  RootDatum a2 = preset("SU3");
  RingPtr r2 = cotangent_ring(2);
  // {z^a, <v,h>} = <v,a> z^a
  EXPECT_EQ(poisson(P("z1*z2^-1", r2), P("2*h1 - h2", r2), a2), P("3*z1*z2^-1", r2));
}

TEST(Poisson, AntisymmetryLeibnizJacobi) {
  std::mt19937 rng(1234);
  RootDatum d = preset("U2");
  RingPtr r = cotangent_ring(2);
  for (int k = 0; k < 20; ++k) {
    LaurentPoly p = random_poly(r, rng, 3, 1), q = random_poly(r, rng, 3, 1), s = random_poly(r, rng, 3, 1);
    EXPECT_EQ(poisson(p, q, d), -poisson(q, p, d));
    EXPECT_EQ(poisson(p * q, s, d), poisson(p, s, d) * q + p * poisson(q, s, d));
    LaurentPoly jac = poisson(p, poisson(q, s, d), d) + poisson(q, poisson(s, p, d), d) +
                      poisson(s, poisson(p, q, d), d);
    EXPECT_TRUE(jac.is_zero()) << format(jac);
  }
}

TEST(Evaluate, Examples) {
  RingPtr r = w1();
  LaurentPoly p = P("w + w^-1", r);
  EXPECT_EQ(evaluate(p, {1.0}), std::complex<double>(2.0));
  EXPECT_EQ(evaluate(p, {-1.0}), std::complex<double>(-2.0));
  EXPECT_THROW(evaluate(p, {0.0}), Error);
  EXPECT_THROW(evaluate(p, {1.0}, 0.0), Error);
  EXPECT_NEAR(std::abs(evaluate(P("q", r), {1.0}) - std::exp(-1.0)), 0.0, 1e-15);
}

TEST(Evaluate, RingHomomorphismAtRandomPoints) {
  std::mt19937 rng(77);
  RingPtr r = moduli_ring(2, 1);
  LaurentPoly p = random_poly(r, rng, 5, 2, true);
  for (int k = 0; k < 10; ++k) {
    auto x = random_point(3, rng);
    std::complex<double> v = evaluate(p, x);
    EXPECT_LT(std::abs(evaluate(p * p, x) - v * v), 1e-10 * (1 + std::norm(v)));
  }
}

TEST(Grammar, CanonicalRendering) {
  RingPtr r = moduli_ring(1, 1, true);
  EXPECT_EQ(format(P("2*w", r)), "2*w");
  EXPECT_EQ(format(P("0", r)), "0");
  EXPECT_EQ(format(P("-1", r)), "-1");
  EXPECT_EQ(format(P("z^-1 - z + h", r)), "-z + h + z^-1");
  EXPECT_EQ(format(P("z^(-1) + 1/2*i*q^(3/2)*w", r)), "1/2*i*q^(3/2)*w + z^-1");
  EXPECT_EQ(format(P("q^2 + 3*q*w*w", r)), "3*q*w^2 + q^2");
  EXPECT_THROW(P("w +", r), ParseError);
  EXPECT_THROW(P("x", r), ParseError);
  EXPECT_THROW(P("w w", r), ParseError);
  EXPECT_THROW(P("1/0", r), ParseError);
}

TEST(Grammar, RoundTripProperty) {
  std::mt19937 rng(4242);
  RingPtr r = moduli_ring(2, 2, true);
  for (int k = 0; k < 100; ++k) {
    LaurentPoly p = random_poly(r, rng, 5, 3, true);
    if (k % 3 == 0) p = p * LaurentPoly::constant(r, NovCoeff(GaussRational(make_rational(1, 2), make_rational(-3))));
    std::string s = format(p);
    LaurentPoly back = parse_polynomial(s, r);
    EXPECT_EQ(back, p) << s;
    EXPECT_EQ(format(back), s);
  }
}
