#pragma once

// Buchberger's algorithm over an exact field K for ideals in mixed
// Laurent/polynomial rings. Each invertible variable x gets an auxiliary
// variable u_x together with the relation u_x*x - 1, so the computation runs
// in an ordinary polynomial ring and normal forms decode back to Laurent
// polynomials. The encoded variable order is (u..., x...) in ring order, with
// an optional elimination block placed first.
//
// Pair selection follows the normal strategy (smallest lcm first) with sugar
// and then pair indices breaking ties; pairs are pruned with the
// Gebauer-Moeller criteria.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <type_traits>
#include <vector>

#include "bfmlift/error.hpp"
#include "bfmlift/field.hpp"
#include "bfmlift/polynomial.hpp"

namespace bfmlift {

enum class OrderKind { DegRevLex, Lex };

struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  /// Ring variables (by name) placed in a block above all others.
  std::vector<std::string> eliminate;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
  static MonomialOrder elimination(std::vector<std::string> vars, OrderKind kind = OrderKind::DegRevLex) {
    return {kind, std::move(vars)};
  }
};

inline constexpr std::size_t kDefaultBudget = 2000000;

/// Step bound for a single Groebner computation.
struct Budget {
  std::size_t max_steps = kDefaultBudget;
};

template <class K>
struct PolyIdeal {
  RingPtr ring;
  std::vector<Polynomial<K>> generators;
};

namespace detail {

using Mono = std::vector<int>;

inline bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
inline Mono lcm(const Mono& a, const Mono& b) {
  Mono m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}
inline Mono quotient(const Mono& a, const Mono& b) {
  Mono m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}
inline bool coprime(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}
inline int degree(const Mono& a) {
  int d = 0;
  for (int x : a) d += x;
  return d;
}

/// Layout of the encoded polynomial ring and its monomial order.
struct Encoding {
  std::size_t nvars = 0;
  std::vector<std::size_t> ring_var;
  std::vector<bool> inverse;
  std::vector<std::size_t> x_pos;
  std::vector<std::size_t> u_pos;
  std::size_t top = 0;
  OrderKind kind = OrderKind::DegRevLex;
  std::vector<std::string> names;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Encoding(const Ring& ring, const MonomialOrder& order) : kind(order.kind) {
    std::vector<bool> in_top(ring.size(), false);
    for (const auto& n : order.eliminate) in_top[ring.index_of(n)] = true;
    x_pos.assign(ring.size(), npos);
    u_pos.assign(ring.size(), npos);
    auto add_block = [&](bool top_block) {
      for (std::size_t i = 0; i < ring.size(); ++i)
        if (in_top[i] == top_block && ring.laurent[i]) push(i, true, "u_" + ring.names[i]);
      for (std::size_t i = 0; i < ring.size(); ++i)
        if (in_top[i] == top_block) push(i, false, ring.names[i]);
    };
    add_block(true);
    top = nvars;
    add_block(false);
    if (top == nvars) top = 0;
  }

  int block_compare(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) const {
    if (kind == OrderKind::Lex) {
      for (std::size_t j = lo; j < hi; ++j)
        if (a[j] != b[j]) return a[j] > b[j] ? 1 : -1;
      return 0;
    }
    int da = 0, db = 0;
    for (std::size_t j = lo; j < hi; ++j) {
      da += a[j];
      db += b[j];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t j = hi; j-- > lo;)
      if (a[j] != b[j]) return a[j] < b[j] ? 1 : -1;
    return 0;
  }
  int compare(const Mono& a, const Mono& b) const {
    if (top > 0) {
      int c = block_compare(a, b, 0, top);
      if (c != 0) return c;
      return block_compare(a, b, top, nvars);
    }
    return block_compare(a, b, 0, nvars);
  }

 private:
  void push(std::size_t ring_index, bool inv, std::string name) {
    (inv ? u_pos : x_pos)[ring_index] = nvars;
    ring_var.push_back(ring_index);
    inverse.push_back(inv);
    names.push_back(std::move(name));
    ++nvars;
  }
};

/// Encoded polynomial; terms ascending in the monomial order, lead at back().
template <class K>
struct EPoly {
  std::vector<std::pair<Mono, K>> terms;
  int sugar = 0;

  bool zero() const { return terms.empty(); }
  const Mono& lm() const { return terms.back().first; }
  const K& lc() const { return terms.back().second; }
};

/// p + c * x^m * g.
template <class K>
EPoly<K> axpy(const EPoly<K>& p, const std::type_identity_t<K>& c, const Mono& m, const EPoly<K>& g, const Encoding& enc) {
  EPoly<K> out;
  out.sugar = p.sugar;
  out.terms.reserve(p.terms.size() + g.terms.size());
  std::size_t i = 0, j = 0;
  Mono shifted(m.size());
  auto shift = [&](const Mono& a) {
    for (std::size_t k = 0; k < a.size(); ++k) shifted[k] = a[k] + m[k];
  };
  if (j < g.terms.size()) shift(g.terms[j].first);
  while (i < p.terms.size() || j < g.terms.size()) {
    int cmp;
    if (i == p.terms.size()) cmp = 1;
    else if (j == g.terms.size()) cmp = -1;
    else cmp = enc.compare(p.terms[i].first, shifted);
    if (cmp < 0) {
      out.terms.push_back(p.terms[i++]);
    } else if (cmp > 0) {
      K v = c * g.terms[j].second;
      if (!is_zero(v)) out.terms.emplace_back(shifted, std::move(v));
      if (++j < g.terms.size()) shift(g.terms[j].first);
    } else {
      K v = p.terms[i].second + c * g.terms[j].second;
      if (!is_zero(v)) out.terms.emplace_back(shifted, std::move(v));
      ++i;
      if (++j < g.terms.size()) shift(g.terms[j].first);
    }
  }
  return out;
}

template <class K>
void scale(EPoly<K>& p, const std::type_identity_t<K>& c) {
  for (auto& t : p.terms) t.second *= c;
}

template <class K>
EPoly<K> encode(const Polynomial<K>& p, const Encoding& enc) {
  EPoly<K> out;
  for (const auto& [e, c] : p.terms()) {
    Mono m(enc.nvars, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= 0) m[enc.x_pos[i]] = e[i];
      else m[enc.u_pos[i]] = -e[i];
    }
    out.terms.emplace_back(std::move(m), c);
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [&](const auto& a, const auto& b) { return enc.compare(a.first, b.first) < 0; });
  // x^a u^b may collide after sorting only if the input had duplicates; it cannot.
  for (const auto& t : out.terms) out.sugar = std::max(out.sugar, degree(t.first));
  return out;
}

template <class K>
Polynomial<K> decode(const EPoly<K>& p, const Encoding& enc, const RingPtr& ring) {
  Polynomial<K> out(ring);
  Exponent e(ring->size());
  for (const auto& [m, c] : p.terms) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t j = 0; j < m.size(); ++j) e[enc.ring_var[j]] += enc.inverse[j] ? -m[j] : m[j];
    out.add_term(e, c);
  }
  return out;
}

template <class K>
struct Tracked {
  EPoly<K> poly;
  EPoly<K> track;
};

/// Buchberger engine, optionally carrying a cofactor "track" per polynomial.
template <class K>
class Buchberger {
 public:
  Buchberger(const Encoding& enc, Budget budget, bool tracking)
      : enc_(enc), budget_(budget), tracking_(tracking) {}

  std::size_t steps() const { return steps_; }

  /// Full reduction of f by the given polynomials.
  Tracked<K> reduce(Tracked<K> f, const std::vector<const Tracked<K>*>& by) {
    std::vector<std::pair<Mono, K>> rem;
    while (!f.poly.zero()) {
      const Tracked<K>* red = nullptr;
      for (const auto* g : by)
        if (divides(g->poly.lm(), f.poly.lm())) {
          red = g;
          break;
        }
      if (!red) {
        rem.push_back(std::move(f.poly.terms.back()));
        f.poly.terms.pop_back();
        continue;
      }
      tick();
      K c = -(f.poly.lc() / red->poly.lc());
      Mono m = quotient(f.poly.lm(), red->poly.lm());
      f.poly.sugar = std::max(f.poly.sugar, red->poly.sugar + degree(m));
      f.poly = axpy(f.poly, c, m, red->poly, enc_);
      if (tracking_) f.track = axpy(f.track, c, m, red->track, enc_);
    }
    std::reverse(rem.begin(), rem.end());
    f.poly.terms = std::move(rem);
    return f;
  }

  /// Returns the reduced Groebner basis, monic, sorted by ascending lead.
  std::vector<Tracked<K>> run(std::vector<Tracked<K>> input) {
    std::stable_sort(input.begin(), input.end(), [&](const Tracked<K>& a, const Tracked<K>& b) {
      if (a.poly.zero() || b.poly.zero()) return !a.poly.zero() && b.poly.zero();
      int da = degree(a.poly.lm()), db = degree(b.poly.lm());
      if (da != db) return da < db;
      return enc_.compare(a.poly.lm(), b.poly.lm()) < 0;
    });
    for (auto& f : input) {
      if (f.poly.zero()) continue;
      Tracked<K> r = reduce(std::move(f), active_list());
      if (!r.poly.zero()) insert(std::move(r));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_before(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<long>(best));
      Tracked<K> s = spoly(p);
      Tracked<K> r = reduce(std::move(s), active_list());
      if (!r.poly.zero()) insert(std::move(r));
    }
    return finalize();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Mono lcm;
    int sugar;
  };

  void tick() {
    if (++steps_ > budget_.max_steps) throw BudgetExceeded(steps_);
  }

  bool pair_before(const Pair& a, const Pair& b) const {
    int c = enc_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  std::vector<const Tracked<K>*> active_list() const {
    std::vector<const Tracked<K>*> out;
    for (std::size_t k = 0; k < g_.size(); ++k)
      if (active_[k]) out.push_back(&g_[k]);
    return out;
  }

  void make_monic(Tracked<K>& f) {
    K inv = K(1) / f.poly.lc();
    scale(f.poly, inv);
    if (tracking_) scale(f.track, inv);
  }

  Tracked<K> spoly(const Pair& p) {
    tick();
    const Tracked<K>& a = g_[p.i];
    const Tracked<K>& b = g_[p.j];
    Mono ma = quotient(p.lcm, a.poly.lm()), mb = quotient(p.lcm, b.poly.lm());
    Tracked<K> s;
    s.poly = axpy(EPoly<K>{}, K(1) / a.poly.lc(), ma, a.poly, enc_);
    s.poly = axpy(s.poly, -(K(1) / b.poly.lc()), mb, b.poly, enc_);
    s.poly.sugar = p.sugar;
    if (tracking_) {
      s.track = axpy(EPoly<K>{}, K(1) / a.poly.lc(), ma, a.track, enc_);
      s.track = axpy(s.track, -(K(1) / b.poly.lc()), mb, b.track, enc_);
    }
    return s;
  }

  int pair_sugar(std::size_t i, std::size_t j, const Mono& l) const {
    int si = g_[i].poly.sugar - degree(g_[i].poly.lm());
    int sj = g_[j].poly.sugar - degree(g_[j].poly.lm());
    return std::max(si, sj) + degree(l);
  }

  void insert(Tracked<K> h) {
    make_monic(h);
    std::size_t hi = g_.size();
    const Mono hl = h.poly.lm();
    g_.push_back(std::move(h));
    active_.push_back(true);

    std::vector<Pair> cands;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) {
        Mono l = lcm(g_[k].poly.lm(), hl);
        cands.push_back({k, hi, l, pair_sugar(k, hi, l)});
      }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const Pair& p = cands[a];
      bool keep = coprime(g_[p.i].poly.lm(), hl);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b)
          if (divides(cands[b].lcm, p.lcm)) keep = false;
        for (const auto& q : kept)
          if (keep && divides(q.lcm, p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      bool drop = divides(hl, p.lcm) && lcm(g_[p.i].poly.lm(), hl) != p.lcm && lcm(g_[p.j].poly.lm(), hl) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (const auto& p : kept)
      if (!coprime(g_[p.i].poly.lm(), hl)) next.push_back(p);
    pairs_ = std::move(next);
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && divides(hl, g_[k].poly.lm())) active_[k] = false;
  }

  std::vector<Tracked<K>> finalize() {
    std::vector<Tracked<K>> basis;
    for (std::size_t k = 0; k < g_.size(); ++k)
      if (active_[k]) basis.push_back(g_[k]);
    std::sort(basis.begin(), basis.end(),
              [&](const Tracked<K>& a, const Tracked<K>& b) { return enc_.compare(a.poly.lm(), b.poly.lm()) < 0; });
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const Tracked<K>*> others;
      for (std::size_t o = 0; o < basis.size(); ++o)
        if (o != k) others.push_back(&basis[o]);
      basis[k] = reduce(basis[k], others);
      make_monic(basis[k]);
    }
    return basis;
  }

  const Encoding& enc_;
  Budget budget_;
  bool tracking_;
  std::size_t steps_ = 0;
  std::vector<Tracked<K>> g_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// Reduced Groebner basis of an ideal in a mixed Laurent/polynomial ring.
template <class K>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<detail::EPoly<K>> basis, std::size_t steps)
      : ring_(std::move(ring)), order_(std::move(order)), enc_(*ring_, order_), basis_(std::move(basis)),
        steps_(steps) {}

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const MonomialOrder& order() const { return order_; }
  const detail::Encoding& encoding() const { return enc_; }
  const std::vector<detail::EPoly<K>>& encoded() const { return basis_; }
  std::size_t steps() const { return steps_; }
  std::size_t size() const { return basis_.size(); }

  bool is_unit() const {
    return basis_.size() == 1 && detail::degree(basis_[0].lm()) == 0;
  }

  /// Polynomial ring (u_x..., x...) in which the basis is computed.
  RingPtr encoded_ring() const {
    Ring r;
    r.names = enc_.names;
    r.laurent.assign(enc_.nvars, false);
    return make_ring(std::move(r));
  }

  /// Basis elements in the encoded polynomial ring.
  std::vector<Polynomial<K>> encoded_elements() const {
    RingPtr er = encoded_ring();
    std::vector<Polynomial<K>> out;
    for (const auto& g : basis_) {
      Polynomial<K> p(er);
      for (const auto& [m, c] : g.terms) p.add_term(m, c);
      out.push_back(std::move(p));
    }
    return out;
  }

  /// Basis elements read back as Laurent polynomials (unit relations drop out).
  std::vector<Polynomial<K>> elements() const {
    std::vector<Polynomial<K>> out;
    for (const auto& g : basis_) {
      Polynomial<K> p = detail::decode(g, enc_, ring_);
      if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
  }

  Polynomial<K> normal_form(const Polynomial<K>& p) const {
    return detail::decode(reduce_encoded(detail::encode(check(p), enc_)), enc_, ring_);
  }

  bool contains(const Polynomial<K>& p) const {
    return reduce_encoded(detail::encode(check(p), enc_)).zero();
  }

  /// Lead terms pairwise non-divisible and no basis term reducible by another lead.
  bool is_reduced() const {
    for (std::size_t a = 0; a < basis_.size(); ++a)
      for (std::size_t b = 0; b < basis_.size(); ++b) {
        if (a == b) continue;
        for (const auto& t : basis_[a].terms)
          if (detail::divides(basis_[b].lm(), t.first)) return false;
      }
    return true;
  }

  /// Every S-polynomial reduces to zero (Buchberger's criterion), checked directly.
  bool s_pairs_reduce_to_zero() const {
    for (std::size_t a = 0; a < basis_.size(); ++a)
      for (std::size_t b = a + 1; b < basis_.size(); ++b) {
        detail::Mono l = detail::lcm(basis_[a].lm(), basis_[b].lm());
        detail::EPoly<K> s = detail::axpy(detail::EPoly<K>{}, K(1) / basis_[a].lc(),
                                          detail::quotient(l, basis_[a].lm()), basis_[a], enc_);
        s = detail::axpy(s, -(K(1) / basis_[b].lc()), detail::quotient(l, basis_[b].lm()), basis_[b], enc_);
        if (!reduce_encoded(std::move(s)).zero()) return false;
      }
    return true;
  }

  /// Lead monomials in encoded coordinates.
  std::vector<detail::Mono> lead_monomials() const {
    std::vector<detail::Mono> out;
    for (const auto& g : basis_) out.push_back(g.lm());
    return out;
  }

  detail::EPoly<K> reduce_encoded(detail::EPoly<K> p) const {
    detail::Buchberger<K> engine(enc_, Budget{static_cast<std::size_t>(-1)}, false);
    std::vector<detail::Tracked<K>> tracked;
    tracked.reserve(basis_.size());
    for (const auto& g : basis_) tracked.push_back({g, {}});
    std::vector<const detail::Tracked<K>*> by;
    for (const auto& t : tracked) by.push_back(&t);
    return engine.reduce({std::move(p), {}}, by).poly;
  }

 private:
  const Polynomial<K>& check(const Polynomial<K>& p) const {
    if (p.ring() != *ring_) throw Error("polynomial ring does not match the Groebner basis ring");
    return p;
  }

  RingPtr ring_;
  MonomialOrder order_;
  detail::Encoding enc_;
  std::vector<detail::EPoly<K>> basis_;
  std::size_t steps_;
};

template <class K>
GroebnerBasis<K> groebner(const PolyIdeal<K>& ideal, const MonomialOrder& order = {}, Budget budget = {}) {
  detail::Encoding enc(*ideal.ring, order);
  std::vector<detail::Tracked<K>> input;
  for (const auto& g : ideal.generators) {
    if (g.ring() != *ideal.ring) throw Error("ideal generator lives in a different ring");
    if (!g.is_zero()) input.push_back({detail::encode(g, enc), {}});
  }
  for (std::size_t i = 0; i < ideal.ring->size(); ++i)
    if (ideal.ring->laurent[i]) {
      detail::EPoly<K> rel;
      detail::Mono one(enc.nvars, 0), ux(enc.nvars, 0);
      ux[enc.x_pos[i]] = 1;
      ux[enc.u_pos[i]] = 1;
      rel.terms = {{one, K(-1)}, {ux, K(1)}};
      rel.sugar = 2;
      input.push_back({std::move(rel), {}});
    }
  detail::Buchberger<K> engine(enc, budget, false);
  auto basis = engine.run(std::move(input));
  std::vector<detail::EPoly<K>> polys;
  for (auto& t : basis) polys.push_back(std::move(t.poly));
  return GroebnerBasis<K>(ideal.ring, order, std::move(polys), engine.steps());
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const GroebnerBasis<K>& g) {
  return g.normal_form(p);
}

/// Krull dimension of the quotient from the lead-term staircase: the size of
/// the largest variable set containing the support of no lead monomial.
/// std::nullopt for the unit ideal.
template <class K>
std::optional<int> dimension(const GroebnerBasis<K>& g) {
  if (g.is_unit()) return std::nullopt;
  const auto leads = g.lead_monomials();
  const std::size_t n = g.encoding().nvars;
  std::vector<bool> chosen(n, false);
  int best = 0;
  auto independent = [&]() {
    for (const auto& m : leads) {
      bool inside = true;
      for (std::size_t j = 0; j < n && inside; ++j)
        if (m[j] > 0 && !chosen[j]) inside = false;
      if (inside) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t j, int size) -> void {
    if (size + static_cast<int>(n - j) <= best) return;
    if (j == n) {
      best = size;
      return;
    }
    chosen[j] = true;
    if (independent()) self(self, j + 1, size + 1);
    chosen[j] = false;
    self(self, j + 1, size);
  };
  search(search, 0, 0);
  return best;
}

template <class K>
std::optional<int> dimension(const PolyIdeal<K>& ideal, Budget budget = {}) {
  return dimension(groebner(ideal, MonomialOrder::grevlex(), budget));
}

/// Multiplies by a unit monomial so each torus variable has minimum exponent
/// zero, then fixes the scalar: primitive integer coefficients over Q, monic
/// otherwise, with positive leading coefficient in display order.
namespace detail {

/// The rational number r as an element of K.
template <class K>
struct RationalLift {
  static K apply(const Rational& r) { return K(r); }
};
template <class F>
struct RationalLift<RatFunc<F>> {
  static RatFunc<F> apply(const Rational& r) { return RatFunc<F>(F(r)); }
};
template <class K>
K lift_rational(const Rational& r) {
  return RationalLift<K>::apply(r);
}

inline std::optional<Rational> as_rational(const Rational& c) { return c; }
inline std::optional<Rational> as_rational(const GaussRational& c) {
  if (!c.is_real()) return std::nullopt;
  return c.re;
}
template <class F>
std::optional<Rational> as_rational(const RatFunc<F>& c) {
  if (c.num().degree() > 0 || c.den().degree() != 0) return std::nullopt;
  if (c.num().zero()) return Rational(0);
  return as_rational(F(c.num().lead() / c.den().lead()));
}

}  // namespace detail

template <class K>
Polynomial<K> normalize_generator(const Polynomial<K>& p) {
  if (p.is_zero()) return p;
  const Ring& ring = p.ring();
  Exponent shift(ring.size(), 0);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (!ring.laurent[i]) continue;
    int lo = p.terms().begin()->first[i];
    for (const auto& [e, c] : p.terms()) lo = std::min(lo, e[i]);
    shift[i] = -lo;
  }
  Polynomial<K> q = p.shifted(shift);
  const Exponent* lead = nullptr;
  for (const auto& [e, c] : q.terms()) {
    if (!lead) {
      lead = &e;
      continue;
    }
    int de = total_degree(e), dl = total_degree(*lead);
    if (de > dl || (de == dl && e > *lead)) lead = &e;
  }
  const K lc = q.terms().at(*lead);
  q = q.scaled(K(1) / lc);
  std::vector<Rational> rc;
  for (const auto& [e, c] : q.terms()) {
    auto r = detail::as_rational(c);
    if (!r) return q;
    rc.push_back(*r);
  }
  mpz_class den = 1, num = 0;
  for (const auto& c : rc) {
    den = lcm(den, mpz_class(c.get_den()));
    num = gcd(num, mpz_class(c.get_num()));
  }
  Rational s(den, num);
  s.canonicalize();
  return q.scaled(detail::lift_rational<K>(s));
}

/// I ∩ K[keep], computed with a block order that places every other variable
/// (and its inverse) above the kept ones.
template <class K>
PolyIdeal<K> eliminate(const PolyIdeal<K>& ideal, const std::vector<std::string>& keep, Budget budget = {},
                       std::size_t* steps = nullptr) {
  std::vector<std::string> drop;
  Ring sub;
  for (std::size_t i = 0; i < ideal.ring->size(); ++i) {
    const auto& n = ideal.ring->names[i];
    if (std::find(keep.begin(), keep.end(), n) == keep.end()) {
      drop.push_back(n);
    } else {
      sub.names.push_back(n);
      sub.laurent.push_back(ideal.ring->laurent[i]);
    }
  }
  for (const auto& k : keep) ideal.ring->index_of(k);
  RingPtr sub_ring = make_ring(std::move(sub));
  if (sub_ring->size() == 0) {
    PolyIdeal<K> out{sub_ring, {}};
    auto g = groebner(ideal, MonomialOrder::grevlex(), budget);
    if (steps) *steps += g.steps();
    if (g.is_unit()) out.generators.push_back(Polynomial<K>::constant(sub_ring, K(1)));
    return out;
  }
  auto gb = groebner(ideal, MonomialOrder::elimination(drop), budget);
  if (steps) *steps += gb.steps();
  const auto& enc = gb.encoding();
  PolyIdeal<K> out{sub_ring, {}};
  for (const auto& g : gb.encoded()) {
    bool inside = true;
    for (const auto& t : g.terms)
      for (std::size_t j = 0; j < enc.top && inside; ++j)
        if (t.first[j] > 0) inside = false;
    if (!inside) continue;
    Polynomial<K> p = detail::decode(g, enc, ideal.ring);
    if (p.is_zero()) continue;
    Polynomial<K> q = normalize_generator(embed(p, sub_ring));
    if (std::find(out.generators.begin(), out.generators.end(), q) == out.generators.end())
      out.generators.push_back(std::move(q));
  }
  return out;
}

/// Finds x with x*d ≡ p modulo the ideal of `g`, reduced to normal form, or
/// std::nullopt when p is not in (I + (d)). The representation is recovered
/// by running Buchberger on I + (d) while tracking the coefficient of d.
template <class K>
std::optional<Polynomial<K>> cofactor(const Polynomial<K>& p, const Polynomial<K>& d, const GroebnerBasis<K>& g,
                                      Budget budget = {}) {
  const auto& enc = g.encoding();
  detail::Mono one(enc.nvars, 0);
  std::vector<detail::Tracked<K>> input;
  for (const auto& b : g.encoded()) input.push_back({b, {}});
  if (!d.is_zero()) {
    detail::EPoly<K> unit;
    unit.terms = {{one, K(1)}};
    input.push_back({detail::encode(d, enc), unit});
  }
  detail::Buchberger<K> engine(enc, budget, true);
  auto basis = engine.run(std::move(input));
  std::vector<const detail::Tracked<K>*> by;
  for (const auto& t : basis) by.push_back(&t);
  auto r = engine.reduce({detail::encode(p, enc), {}}, by);
  if (!r.poly.zero()) return std::nullopt;
  detail::EPoly<K> x = r.track;
  detail::scale(x, K(-1));
  Polynomial<K> result = g.normal_form(detail::decode(x, enc, g.ring_ptr()));
  if (!g.contains(result * d - p)) throw Error("internal: tracked cofactor failed re-verification");
  return result;
}

}  // namespace bfmlift
