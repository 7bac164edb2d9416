#pragma once

#include <complex>
#include <random>
#include <vector>

#include "bfmlift/polynomial.hpp"

namespace bfmlift::testing {

/// Random polynomial with small rational coefficients. Torus variables get
/// exponents in [-max_exp, max_exp], polynomial variables in [0, max_exp].
template <class C = NovCoeff>
Polynomial<C> random_poly(const RingPtr& ring, std::mt19937& rng, int terms, int max_exp, bool with_q = false) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4), coin(0, 3);
  Polynomial<C> p(ring);
  for (int t = 0; t < terms; ++t) {
    Exponent e(ring->size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      int lo = ring->laurent[i] ? -max_exp : 0;
      e[i] = std::uniform_int_distribution<int>(lo, max_exp)(rng);
    }
    Rational c = make_rational(num(rng), den(rng));
    if constexpr (std::is_same_v<C, NovCoeff>) {
      if (with_q && coin(rng) == 0) {
        p.add_term(e, NovCoeff::q_power(make_rational(coin(rng) + 1, 2), GaussRational(c)));
        continue;
      }
      p.add_term(e, NovCoeff(c));
    } else {
      p.add_term(e, C(c));
    }
  }
  return p;
}

inline std::vector<std::complex<double>> random_point(std::size_t n, std::mt19937& rng) {
  std::uniform_real_distribution<double> mod(0.5, 1.5), phase(0.0, 6.283185307179586);
  std::vector<std::complex<double>> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(std::polar(mod(rng), phase(rng)));
  return x;
}

}  // namespace bfmlift::testing
