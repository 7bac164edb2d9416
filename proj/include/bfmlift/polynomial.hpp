#pragma once

// Sparse multivariate Laurent polynomials over a variable universe in which
// some variables are invertible (torus coordinates w, z) and the rest are
// ordinary polynomial variables (fiber coordinates h).

#include <algorithm>
#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bfmlift/error.hpp"
#include "bfmlift/novikov.hpp"

namespace bfmlift {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

/// Ordered variable universe. `laurent[i]` marks variables that may carry
/// negative exponents.
struct Ring {
  std::vector<std::string> names;
  std::vector<bool> laurent;

  std::size_t size() const { return names.size(); }

  std::optional<std::size_t> find(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    return std::nullopt;
  }
  std::size_t index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw Error("unknown variable '" + name + "'");
    return *i;
  }

  friend bool operator==(const Ring& a, const Ring& b) { return a.names == b.names && a.laurent == b.laurent; }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(Ring r) {
  for (std::size_t i = 0; i < r.names.size(); ++i)
    for (std::size_t j = i + 1; j < r.names.size(); ++j)
      if (r.names[i] == r.names[j]) throw Error("duplicate variable '" + r.names[i] + "'");
  if (r.laurent.size() != r.names.size()) throw Error("ring kind list does not match variable list");
  return std::make_shared<const Ring>(std::move(r));
}

/// Names a family of n coordinates: "w" when n == 1, otherwise "w1".."wn".
inline std::vector<std::string> coordinate_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  if (n == 1) {
    out.push_back(stem);
    return out;
  }
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

template <class C>
class Polynomial {
 public:
  using Coeff = C;
  using Terms = std::map<Exponent, C>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const C& c) {
    Polynomial p(std::move(ring));
    p.add_term(Exponent(p.ring_->size(), 0), c);
    return p;
  }
  static Polynomial variable(RingPtr ring, std::size_t i) {
    Polynomial p(std::move(ring));
    Exponent e(p.ring_->size(), 0);
    e.at(i) = 1;
    p.add_term(e, C(1));
    return p;
  }
  static Polynomial monomial(RingPtr ring, Exponent e, const C& c = C(1)) {
    Polynomial p(std::move(ring));
    p.add_term(e, c);
    return p;
  }

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                                                terms_.begin()->first.end(),
                                                                [](int x) { return x == 0; }));
  }

  void add_term(const Exponent& e, const C& c) {
    check_exponent(e);
    if (bfmlift::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (bfmlift::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.ring_);
    Exponent e(a.ring_->size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const C& s) const {
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }
  /// Multiplies by the monomial x^shift (shift may be negative on Laurent variables).
  Polynomial shifted(const Exponent& shift) const {
    Polynomial r(ring_);
    Exponent e(ring_->size());
    for (const auto& [ea, c] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + shift[i];
      r.add_term(e, c);
    }
    return r;
  }

  /// p^k; negative k only for monomials with invertible coefficient.
  Polynomial pow(int k) const {
    if (k < 0) {
      if (terms_.size() != 1) throw Error("negative power of a non-monomial");
      const auto& [e, c] = *terms_.begin();
      Exponent ne(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
      return monomial(ring_, ne, invert(c)).pow(-k);
    }
    Polynomial result = constant(ring_, C(1));
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    bool same_ring = a.ring_ == b.ring_ || (a.ring_ && b.ring_ && *a.ring_ == *b.ring_);
    return same_ring && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  void check_compatible(const Polynomial& o) const {
    if (ring_ == o.ring_) return;
    if (!ring_ || !o.ring_ || *ring_ != *o.ring_) throw Error("polynomials live in incompatible variable universes");
  }

 private:
  static C invert(const C& c) {
    if constexpr (std::is_same_v<C, NovCoeff>) {
      return c.inverse();
    } else {
      return C(1) / c;
    }
  }

  void check_exponent(const Exponent& e) const {
    if (!ring_) throw Error("polynomial has no ring");
    if (e.size() != ring_->size()) throw Error("exponent length does not match ring");
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0 && !ring_->laurent[i])
        throw Error("negative exponent on polynomial variable '" + ring_->names[i] + "'");
  }

  RingPtr ring_;
  Terms terms_;
};

using LaurentPoly = Polynomial<NovCoeff>;

/// Ordinary partial derivative d/dx_i.
template <class C>
Polynomial<C> derivative(const Polynomial<C>& p, std::size_t i) {
  Polynomial<C> r(p.ring_ptr());
  for (const auto& [e, c] : p.terms()) {
    if (e.at(i) == 0) continue;
    Exponent ne = e;
    ne[i] -= 1;
    r.add_term(ne, c * C(e[i]));
  }
  return r;
}

/// Invariant derivative x_i d/dx_i on a torus coordinate; scales each term by
/// its i-th exponent.
template <class C>
Polynomial<C> log_derivative(const Polynomial<C>& p, std::size_t i) {
  if (i >= p.ring().size()) throw Error("variable index out of range");
  if (!p.ring().laurent[i])
    throw Error("log_derivative needs a torus variable, got '" + p.ring().names[i] + "'");
  Polynomial<C> r(p.ring_ptr());
  for (const auto& [e, c] : p.terms())
    if (e[i] != 0) r.add_term(e, c * C(e[i]));
  return r;
}

/// Substitutes x_i -> images[i] (all images in `target`). Negative powers are
/// allowed only where the image is a monomial.
template <class C>
Polynomial<C> substitute(const Polynomial<C>& p, const std::vector<Polynomial<C>>& images, const RingPtr& target) {
  if (images.size() != p.ring().size()) throw Error("substitution arity mismatch");
  std::vector<std::map<int, Polynomial<C>>> cache(images.size());
  auto power = [&](std::size_t i, int k) -> const Polynomial<C>& {
    auto it = cache[i].find(k);
    if (it != cache[i].end()) return it->second;
    return cache[i].emplace(k, images[i].pow(k)).first->second;
  };
  Polynomial<C> r(target);
  for (const auto& [e, c] : p.terms()) {
    Polynomial<C> term = Polynomial<C>::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= power(i, e[i]);
    r += term;
  }
  return r;
}

/// Re-expresses p in `target`, matching variables by name.
template <class C>
Polynomial<C> embed(const Polynomial<C>& p, const RingPtr& target) {
  std::vector<std::size_t> map(p.ring().size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    auto j = target->find(p.ring().names[i]);
    bool used = std::any_of(p.terms().begin(), p.terms().end(), [&](const auto& t) { return t.first[i] != 0; });
    if (!j) {
      if (used) throw Error("variable '" + p.ring().names[i] + "' missing from target ring");
      map[i] = target->size();
    } else {
      map[i] = *j;
    }
  }
  Polynomial<C> r(target);
  for (const auto& [e, c] : p.terms()) {
    Exponent ne(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (map[i] < target->size()) ne[map[i]] += e[i];
    r.add_term(ne, c);
  }
  return r;
}

template <class D, class C, class F>
Polynomial<D> map_coefficients(const Polynomial<C>& p, F&& f) {
  Polynomial<D> r(p.ring_ptr());
  for (const auto& [e, c] : p.terms()) r.add_term(e, f(c));
  return r;
}

/// Numeric evaluation; `coeff` maps a coefficient to a complex number.
template <class C, class F>
std::complex<double> evaluate_with(const Polynomial<C>& p, const std::vector<std::complex<double>>& point, F&& coeff) {
  if (point.size() != p.ring().size()) throw Error("evaluation point has wrong dimension");
  std::complex<double> s = 0.0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> t = coeff(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && point[i] == std::complex<double>(0.0))
        throw Error("zero value for inverted variable '" + p.ring().names[i] + "'");
      t *= std::pow(point[i], e[i]);
    }
    s += t;
  }
  return s;
}

/// Default numeric specialization of the Novikov parameter.
inline double default_q() { return std::exp(-1.0); }

inline std::complex<double> evaluate(const LaurentPoly& p, const std::vector<std::complex<double>>& point,
                                     double q = default_q()) {
  if (!(q > 0)) throw Error("Novikov specialization must be positive");
  return evaluate_with(p, point, [q](const NovCoeff& c) { return c.evaluate(q); });
}

/// Exact evaluation at a Gaussian-rational point; q stays formal.
inline NovCoeff evaluate_exact(const LaurentPoly& p, const std::vector<GaussRational>& point) {
  if (point.size() != p.ring().size()) throw Error("evaluation point has wrong dimension");
  NovCoeff s;
  for (const auto& [e, c] : p.terms()) {
    GaussRational m(1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && is_zero(point[i])) throw Error("zero value for inverted variable '" + p.ring().names[i] + "'");
      GaussRational base = e[i] > 0 ? point[i] : GaussRational(1) / point[i];
      for (int k = 0; k < std::abs(e[i]); ++k) m *= base;
    }
    s += c * NovCoeff(m);
  }
  return s;
}

}  // namespace bfmlift
