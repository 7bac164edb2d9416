#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <utility>

#include "bfmlift/field.hpp"

namespace bfmlift {

/// Finite Novikov sum  sum_i a_i q^{lambda_i}  with exact Gaussian-rational
/// a_i and rational exponents. Terms are keyed by exponent, so they stay
/// sorted by increasing lambda and zero coefficients are never stored.
class NovCoeff {
 public:
  using Terms = std::map<Rational, GaussRational>;

  NovCoeff() = default;
  NovCoeff(int v) : NovCoeff(GaussRational(v)) {}  // NOLINT(google-explicit-constructor)
  NovCoeff(const Rational& v) : NovCoeff(GaussRational(v)) {}  // NOLINT(google-explicit-constructor)
  NovCoeff(const GaussRational& v) {  // NOLINT(google-explicit-constructor)
    if (!bfmlift::is_zero(v)) terms_.emplace(Rational(0), v);
  }

  static NovCoeff q_power(const Rational& lambda, const GaussRational& a = GaussRational(1)) {
    NovCoeff c;
    if (!bfmlift::is_zero(a)) c.terms_.emplace(lambda, a);
    return c;
  }

  const Terms& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && sgn(terms_.begin()->first) == 0); }
  bool is_real() const {
    for (const auto& [l, a] : terms_)
      if (!a.is_real()) return false;
    return true;
  }
  /// Coefficient of q^0.
  GaussRational constant_part() const {
    auto it = terms_.find(Rational(0));
    return it == terms_.end() ? GaussRational(0) : it->second;
  }
  /// Sum of the coefficients: the specialization q = 1.
  GaussRational at_unit() const {
    GaussRational s;
    for (const auto& [l, a] : terms_) s += a;
    return s;
  }

  std::complex<double> evaluate(double q) const {
    std::complex<double> s = 0.0;
    for (const auto& [l, a] : terms_) s += to_complex(a) * std::pow(q, l.get_d());
    return s;
  }

  NovCoeff operator-() const {
    NovCoeff r = *this;
    for (auto& [l, a] : r.terms_) a = -a;
    return r;
  }
  NovCoeff& operator+=(const NovCoeff& o) {
    for (const auto& [l, a] : o.terms_) accumulate(l, a);
    return *this;
  }
  NovCoeff& operator-=(const NovCoeff& o) {
    for (const auto& [l, a] : o.terms_) accumulate(l, -a);
    return *this;
  }
  friend NovCoeff operator+(NovCoeff a, const NovCoeff& b) { return a += b; }
  friend NovCoeff operator-(NovCoeff a, const NovCoeff& b) { return a -= b; }
  friend NovCoeff operator*(const NovCoeff& a, const NovCoeff& b) {
    NovCoeff r;
    for (const auto& [la, ca] : a.terms_)
      for (const auto& [lb, cb] : b.terms_) r.accumulate(Rational(la + lb), ca * cb);
    return r;
  }
  NovCoeff& operator*=(const NovCoeff& o) { return *this = *this * o; }
  friend bool operator==(const NovCoeff& a, const NovCoeff& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NovCoeff& a, const NovCoeff& b) { return !(a == b); }

  /// Inverse of a single-term sum; other sums have no finite inverse.
  NovCoeff inverse() const {
    if (terms_.size() != 1) throw Error("only single-term Novikov coefficients are invertible here");
    const auto& [l, a] = *terms_.begin();
    return q_power(Rational(-l), GaussRational(1) / a);
  }

  /// Least common denominator of the q exponents.
  long exponent_denominator() const {
    long d = 1;
    for (const auto& [l, a] : terms_) d = std::lcm(d, static_cast<long>(l.get_den().get_si()));
    return d;
  }

 private:
  void accumulate(const Rational& l, const GaussRational& a) {
    if (bfmlift::is_zero(a)) return;
    auto [it, inserted] = terms_.emplace(l, a);
    if (!inserted) {
      it->second += a;
      if (bfmlift::is_zero(it->second)) terms_.erase(it);
    }
  }

  Terms terms_;
};

inline bool is_zero(const NovCoeff& c) { return c.zero(); }

}  // namespace bfmlift
