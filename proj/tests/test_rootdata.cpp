#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bfmlift/rootdata.hpp"

using namespace bfmlift;

namespace {

std::vector<Rational> rvec(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Closure of the full reflection set under multiplication, independent of
// the simple-root breadth-first search used by weyl_enumerate.
std::set<IntMatrix> brute_force_group(const RootDatum& d) {
  std::set<IntMatrix> group{IntMatrix::identity(d.rank())};
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < d.size(); ++i) gens.push_back(d.reflection_matrix(i));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IntMatrix> current(group.begin(), group.end());
    for (const auto& a : current)
      for (const auto& g : gens)
        if (group.insert(a * g).second) grew = true;
  }
  return group;
}

}  // namespace

TEST(Reflect, RankOneScaling) {
  RootDatum d(1, {{2}, {-2}}, {{1}, {-1}});
  EXPECT_EQ(reflect(d, 0, rvec({5})), rvec({-5}));
  EXPECT_EQ(reflect(d, 0, rvec({0})), rvec({0}));
}

TEST(Reflect, A2AgainstBruteForceMatrix) {
  RootDatum d = preset("SU3");
  std::size_t idx = *d.find_root({1, 0});
  const IntVector& a = d.root(idx);
  const IntVector& av = d.coroot(idx);
  // Search all small integer matrices with S^2 = 1, S a = -a and S fixing ker(av).
  IntVector fixed = integer_kernel(IntMatrix::from_rows({av}, 2)).at(0);
  std::vector<IntMatrix> found;
  for (long p = -3; p <= 3; ++p)
    for (long q = -3; q <= 3; ++q)
      for (long r = -3; r <= 3; ++r)
        for (long s = -3; s <= 3; ++s) {
          IntMatrix m = IntMatrix::from_rows({{p, q}, {r, s}}, 2);
          if (m * m != IntMatrix::identity(2)) continue;
          if (m.apply(a) != negated(a)) continue;
          if (m.apply(fixed) != fixed) continue;
          found.push_back(m);
        }
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0], d.reflection_matrix(idx));
  std::vector<Rational> h = {Rational(7, 3), Rational(-5, 2)};
  auto got = reflect(d, idx, h);
  EXPECT_EQ(got[0], found[0](0, 0) * h[0] + found[0](0, 1) * h[1]);
  EXPECT_EQ(got[1], found[0](1, 0) * h[0] + found[0](1, 1) * h[1]);
}

TEST(Reflect, IndexOutOfRange) {
  RootDatum d = preset("SU2");
  EXPECT_THROW(reflect(d, 2, rvec({1})), Error);
}

TEST(Reflect, InvolutionAndHyperplaneOnRandomVectors) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> coord(-50, 50), den(1, 9);
  for (const char* name : {"SU3", "PSU3", "U2", "PSU2xSU2"}) {
    RootDatum d = preset(name);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> h;
      for (std::size_t k = 0; k < d.rank(); ++k) h.push_back(make_rational(coord(rng), den(rng)));
      for (std::size_t i = 0; i < d.size(); ++i) {
        EXPECT_EQ(reflect(d, i, reflect(d, i, h)), h);
        std::vector<Rational> a(d.root(i).begin(), d.root(i).end());
        auto ra = reflect(d, i, a);
        for (std::size_t k = 0; k < d.rank(); ++k) EXPECT_EQ(ra[k], -a[k]);
      }
    }
    // points of the hyperplane <av, .> = 0 are fixed
    for (std::size_t i = 0; i < d.size(); ++i)
      for (const auto& v : integer_kernel(IntMatrix::from_rows({d.coroot(i)}, d.rank()))) {
        std::vector<Rational> h(v.begin(), v.end());
        EXPECT_EQ(reflect(d, i, h), h);
      }
  }
}

TEST(Weyl, GroupOrders) {
  EXPECT_EQ(weyl_enumerate(preset("SU2")).size(), 2u);
  EXPECT_EQ(weyl_enumerate(preset("SU3")).size(), 6u);
  EXPECT_EQ(weyl_enumerate(preset("PSU3")).size(), 6u);
  EXPECT_EQ(weyl_enumerate(preset("SU2xSU2")).size(), 4u);
  EXPECT_EQ(weyl_enumerate(preset("T^3")).size(), 1u);
}

TEST(Weyl, MatchesBruteForceClosure) {
  for (const char* name : {"SU2", "SU3", "PSU3", "U2", "SU2xPSU2"}) {
    RootDatum d = preset(name);
    auto elems = weyl_enumerate(d);
    std::set<IntMatrix> mine;
    for (const auto& w : elems) mine.insert(w.matrix);
    EXPECT_EQ(mine.size(), elems.size()) << name;
    EXPECT_EQ(mine, brute_force_group(d)) << name;
  }
}

TEST(Weyl, DeterministicOrderAndWords) {
  RootDatum d = preset("SU3");
  auto elems = weyl_enumerate(d);
  EXPECT_TRUE(elems.front().word.empty());
  for (std::size_t k = 1; k < elems.size(); ++k) {
    const auto& a = elems[k - 1].word;
    const auto& b = elems[k].word;
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }
  for (const auto& w : elems) {
    IntMatrix m = IntMatrix::identity(2);
    for (std::size_t s : w.word) m = m * d.reflection_matrix(s);
    EXPECT_EQ(m, w.matrix);
  }
  EXPECT_EQ(elems.back().word.size(), 3u);
}

TEST(Weyl, ClosedUnderCompositionAndInverseAndPreservesRoots) {
  RootDatum d = preset("PSU3");
  auto elems = weyl_enumerate(d);
  std::set<IntMatrix> group;
  for (const auto& w : elems) group.insert(w.matrix);
  for (const auto& a : elems) {
    EXPECT_TRUE(group.count(a.matrix.inverse()));
    for (const auto& b : elems) EXPECT_TRUE(group.count(a.matrix * b.matrix));
    for (const auto& r : d.roots()) EXPECT_TRUE(d.find_root(a.matrix.apply(r)).has_value());
  }
}

TEST(Weyl, BoundExceeded) {
  EXPECT_THROW(weyl_enumerate(preset("SU3"), 3), Error);
  EXPECT_THROW(weyl_enumerate(preset("SU3"), 0), Error);
  EXPECT_NO_THROW(weyl_enumerate(preset("SU3"), 6));
}

TEST(Dual, InvolutionAndPresets) {
  RootDatum su2 = preset("SU2");
  EXPECT_EQ(langlands_dual(langlands_dual(su2)), su2);
  RootDatum dual = langlands_dual(su2);
  EXPECT_EQ(dual.roots(), (std::vector<IntVector>{{2}, {-2}}));
  EXPECT_EQ(dual.coroots(), (std::vector<IntVector>{{1}, {-1}}));
  EXPECT_EQ(dual, preset("PSU2"));
  EXPECT_EQ(dual.name(), "PSU2");
}

TEST(Dual, PairingMatrixTransposes) {
  RootDatum d = preset("SU3");
  RootDatum dd = langlands_dual(d);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      EXPECT_EQ(dot(dd.coroot(i), dd.root(j)), dot(d.coroot(j), d.root(i)));
}

TEST(Center, RankOneExamples) {
  RootDatum psu2 = preset("PSU2");
  EXPECT_TRUE(in_center(psu2, std::vector<std::complex<double>>{{-1.0, 0.0}}));
  EXPECT_FALSE(in_center(psu2, std::vector<std::complex<double>>{{0.0, 1.0}}));
  EXPECT_TRUE(in_center(psu2, std::vector<GaussRational>{GaussRational(-1)}));
  EXPECT_FALSE(in_center(psu2, std::vector<GaussRational>{GaussRational::i_unit()}));
  for (const char* name : {"SU2", "PSU2", "SU3", "PSU3", "U2", "T^2"}) {
    RootDatum d = preset(name);
    EXPECT_TRUE(in_center(d, std::vector<GaussRational>(d.rank(), GaussRational(1)))) << name;
  }
  EXPECT_THROW(in_center(psu2, std::vector<std::complex<double>>{{0.0, 0.0}}), Error);
}

TEST(Center, OrderThreeCenterOfPSU3Datum) {
  RootDatum d = preset("PSU3");
  const double pi = std::acos(-1.0);
  std::complex<double> zeta = std::polar(1.0, 2 * pi / 3);
  EXPECT_TRUE(in_center(d, {zeta, zeta}));
  EXPECT_FALSE(in_center(d, {zeta, zeta * zeta}));
  // the SU3 datum has trivial center
  EXPECT_FALSE(in_center(preset("SU3"), {zeta, zeta}));
}

TEST(Center, WeylStable) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> phase(0, 6.283185307179586);
  for (const char* name : {"PSU3", "SU3", "U2"}) {
    RootDatum d = preset(name);
    auto elems = weyl_enumerate(d);
    std::vector<std::vector<std::complex<double>>> points;
    const double pi = std::acos(-1.0);
    points.push_back({std::polar(1.0, 2 * pi / 3), std::polar(1.0, 2 * pi / 3)});
    for (int t = 0; t < 10; ++t) points.push_back({std::polar(1.3, phase(rng)), std::polar(0.7, phase(rng))});
    for (const auto& z : points)
      for (const auto& w : elems) EXPECT_EQ(in_center(d, z), in_center(d, act_on_point(w.matrix, z))) << name;
  }
}

TEST(Datum, EagerValidation) {
  EXPECT_THROW(RootDatum(1, {{1}, {-1}}, {{1}, {-1}}), Error);     // pairing 1
  EXPECT_THROW(RootDatum(1, {{1}}, {{2}}), Error);                 // missing -alpha
  EXPECT_THROW(RootDatum(2, {{1, 0}, {-1, 0}}, {{2}, {-2}}), Error);  // coroot length
  EXPECT_THROW(RootDatum(1, {{1}, {-1}}, {{2}, {2}}), Error);      // (-alpha)^v != -alpha^v
  EXPECT_THROW(preset("E8"), Error);
}

TEST(Datum, SimpleAndPositiveRoots) {
  RootDatum d = preset("PSU3");
  EXPECT_EQ(d.positive_roots().size(), 3u);
  auto simple = d.simple_roots();
  ASSERT_EQ(simple.size(), 2u);
  EXPECT_EQ(d.root(simple[0]), (IntVector{1, 2}));
  EXPECT_EQ(d.root(simple[1]), (IntVector{1, -1}));
  EXPECT_EQ(preset("T^2").size(), 0u);
  EXPECT_EQ(preset("T2").rank(), 2u);
}
