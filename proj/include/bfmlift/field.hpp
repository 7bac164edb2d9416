#pragma once

// Exact coefficient fields: rationals, Gaussian rationals, and univariate
// rational functions over either (used when the Novikov parameter is kept
// formal).

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bfmlift/error.hpp"

namespace bfmlift {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::complex<double> to_complex(const Rational& r) { return {r.get_d(), 0.0}; }

/// Parses "3", "-7/2", "+1/3". Throws ParseError on anything else.
inline Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw ParseError("empty rational", 0);
  std::size_t start = (s.front() == '-') ? 1 : 0;
  bool slash = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (slash || i == start || i + 1 == s.size()) throw ParseError("malformed rational '" + text + "'", i);
      slash = true;
    } else if (s[i] < '0' || s[i] > '9') {
      throw ParseError("malformed rational '" + text + "'", i);
    }
  }
  if (start == s.size()) throw ParseError("malformed rational '" + text + "'", 0);
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("malformed rational '" + text + "'", 0);
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'", 0);
  r.canonicalize();
  return r;
}

/// a + b*i with a, b exact rationals.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() : re(0), im(0) {}
  GaussRational(int v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i_unit() { return {Rational(0), Rational(1)}; }

  bool is_real() const { return sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussRational operator-() const { return {-re, -im}; }
  GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
  GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    Rational n = o.norm();
    if (sgn(n) == 0) throw Error("division by zero in Q(i)");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
  }
  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

inline bool is_zero(const GaussRational& g) { return sgn(g.re) == 0 && sgn(g.im) == 0; }
inline std::complex<double> to_complex(const GaussRational& g) { return {g.re.get_d(), g.im.get_d()}; }
inline std::string to_string(const GaussRational& g) {
  if (g.is_real()) return to_string(g.re);
  if (sgn(g.re) == 0) return to_string(g.im) + "*i";
  return "(" + to_string(g.re) + (sgn(g.im) > 0 ? "+" : "") + to_string(g.im) + "*i)";
}

/// Dense univariate polynomial over a field, low degree first, no trailing zeros.
template <class K>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(K constant) {
    if (!is_zero(constant)) c_.push_back(std::move(constant));
  }
  static UniPoly monomial(K coeff, std::size_t degree) {
    UniPoly p;
    if (is_zero(coeff)) return p;
    p.c_.assign(degree + 1, K(0));
    p.c_[degree] = std::move(coeff);
    return p;
  }

  bool zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<K>& coeffs() const { return c_; }
  const K& lead() const { return c_.back(); }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    if (a.zero() || b.zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; returns (quotient, remainder).
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.zero()) throw Error("polynomial division by zero");
    UniPoly q, r = a;
    if (a.degree() >= b.degree()) q.c_.assign(a.c_.size() - b.c_.size() + 1, K(0));
    while (!r.zero() && r.degree() >= b.degree()) {
      std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
      K f = r.lead() / b.lead();
      q.c_[shift] = f;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[j + shift] -= f * b.c_[j];
      r.trim();
    }
    q.trim();
    return {q, r};
  }

  UniPoly monic() const {
    if (zero()) return *this;
    UniPoly r = *this;
    K inv = K(1) / lead();
    for (auto& x : r.c_) x *= inv;
    return r;
  }

  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.zero()) {
      UniPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// True when the polynomial is c*X^k for some k.
  bool is_monomial() const {
    if (zero()) return false;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
      if (!is_zero(c_[i])) return false;
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

/// Element of K(Q): reduced fraction with monic denominator.
template <class K>
class RatFunc {
 public:
  using Poly = UniPoly<K>;

  RatFunc() : num_(), den_(K(1)) {}
  RatFunc(int v) : num_(K(v)), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(K v) : num_(std::move(v)), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc variable_power(long k) {
    if (k >= 0) return RatFunc(Poly::monomial(K(1), static_cast<std::size_t>(k)), Poly(K(1)));
    return RatFunc(Poly(K(1)), Poly::monomial(K(1), static_cast<std::size_t>(-k)));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  RatFunc operator-() const { return RatFunc(-num_, den_, Raw{}); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.zero()) throw Error("division by zero in K(q)");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  struct Raw {};
  RatFunc(Poly num, Poly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.zero()) throw Error("rational function with zero denominator");
    if (num_.zero()) {
      den_ = Poly(K(1));
      return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
    K lc = den_.lead();
    if (!(lc == K(1))) {
      Poly inv(K(1) / lc);
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly num_;
  Poly den_;
};

template <class K>
bool is_zero(const RatFunc<K>& f) {
  return f.num().zero();
}

template <class K>
std::complex<double> to_complex(const UniPoly<K>& p, std::complex<double> x) {
  std::complex<double> acc = 0.0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + to_complex(*it);
  return acc;
}

/// Numeric value of a rational function at the given value of its variable.
template <class K>
std::complex<double> to_complex(const RatFunc<K>& f, double variable_value) {
  return to_complex(f.num(), variable_value) / to_complex(f.den(), variable_value);
}

template <class K>
std::string to_string(const RatFunc<K>& f) {
  auto render = [](const UniPoly<K>& p) {
    if (p.zero()) return std::string("0");
    std::string s;
    for (long d = p.degree(); d >= 0; --d) {
      const K& c = p.coeffs()[static_cast<std::size_t>(d)];
      if (is_zero(c)) continue;
      if (!s.empty()) s += " + ";
      s += "(" + to_string(c) + ")";
      if (d > 0) s += "*Q^" + std::to_string(d);
    }
    return s;
  };
  if (f.den().degree() == 0) return render(f.num());
  return "(" + render(f.num()) + ")/(" + render(f.den()) + ")";
}

}  // namespace bfmlift
