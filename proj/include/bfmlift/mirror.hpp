#pragma once

// Toric Hori-Vafa mirror data: superpotential, Teleman monomial map, the
// Lagrangian ideal {df = M^T dh} in (w, h) and its image in (z, h).

#include <set>
#include <string>
#include <vector>

#include "bfmlift/coefficients.hpp"
#include "bfmlift/groebner.hpp"
#include "bfmlift/intmatrix.hpp"
#include "bfmlift/laurent.hpp"
#include "bfmlift/rootdata.hpp"

namespace bfmlift {

/// Fan rays with disc areas, optional unit holonomies, and the r x n action
/// matrix of T on the big torus.
struct ToricInput {
  std::size_t n = 0;
  std::vector<IntVector> rays;
  std::vector<Rational> areas;
  std::vector<GaussRational> holonomy;  // empty means all 1
  IntMatrix action;

  std::size_t rank() const { return action.rows(); }
};

inline void validate(const ToricInput& t) {
  if (t.n == 0) throw Error("toric.n must be positive");
  std::set<IntVector> seen;
  for (std::size_t j = 0; j < t.rays.size(); ++j) {
    const auto& v = t.rays[j];
    std::string where = "toric.rays[" + std::to_string(j) + "]";
    if (v.size() != t.n) throw Error(where + " has length " + std::to_string(v.size()) + " but toric.n is " + std::to_string(t.n));
    if (content(v) != 1) throw Error(where + " is not primitive");
    if (!seen.insert(v).second) throw Error(where + " repeats an earlier ray");
  }
  if (t.areas.size() != t.rays.size())
    throw Error("toric.areas has " + std::to_string(t.areas.size()) + " entries but toric.rays has " +
                std::to_string(t.rays.size()));
  for (std::size_t j = 0; j < t.areas.size(); ++j)
    if (sgn(t.areas[j]) < 0) throw Error("toric.areas[" + std::to_string(j) + "] is negative");
  if (!t.holonomy.empty()) {
    if (t.holonomy.size() != t.rays.size())
      throw Error("toric.holonomy has " + std::to_string(t.holonomy.size()) + " entries but toric.rays has " +
                  std::to_string(t.rays.size()));
    for (std::size_t j = 0; j < t.holonomy.size(); ++j)
      if (t.holonomy[j].norm() != 1) throw Error("toric.holonomy[" + std::to_string(j) + "] does not have modulus 1");
  }
  if (t.action.rows() == 0) throw Error("toric.action must have at least one row");
  if (t.action.cols() != t.n)
    throw Error("toric.action has " + std::to_string(t.action.cols()) + " columns but toric.n is " + std::to_string(t.n));
}

/// f = sum_j hol_j q^{lambda_j} w^{v_j}; q = 1 in unit mode.
inline LaurentPoly hori_vafa(const ToricInput& t, NovikovMode mode = NovikovMode::Unit) {
  RingPtr ring = base_ring(t.n);
  LaurentPoly f(ring);
  for (std::size_t j = 0; j < t.rays.size(); ++j) {
    Exponent e(t.rays[j].begin(), t.rays[j].end());
    GaussRational hol = t.holonomy.empty() ? GaussRational(1) : t.holonomy[j];
    Rational lambda = mode == NovikovMode::Unit ? Rational(0) : t.areas.at(j);
    f.add_term(e, NovCoeff::q_power(lambda, hol));
  }
  return f;
}

inline MonomialMap teleman_map(const ToricInput& t) { return MonomialMap{t.action}; }

/// F_i = theta_i(f) - sum_k M_ki h_k in moduli_ring(n, r).
inline PolyIdeal<NovCoeff> lagrangian_ideal(const LaurentPoly& f, const MonomialMap& m) {
  std::size_t n = m.source_dim(), r = m.target_dim();
  if (f.ring() != *base_ring(n))
    throw Error("lagrangian_ideal: superpotential must live in " + std::to_string(n) + " base variables");
  RingPtr ring = moduli_ring(n, r);
  LaurentPoly fe = embed(f, ring);
  PolyIdeal<NovCoeff> out{ring, {}};
  for (std::size_t i = 0; i < n; ++i) {
    LaurentPoly g = log_derivative(fe, i);
    for (std::size_t k = 0; k < r; ++k)
      if (m.matrix(k, i) != 0) g -= LaurentPoly::variable(ring, n + k).scaled(NovCoeff(static_cast<int>(m.matrix(k, i))));
    out.generators.push_back(std::move(g));
  }
  return out;
}

/// The Lagrangian ideal with z_k - w^{M_k} adjoined, in moduli_ring(n, r, true).
inline PolyIdeal<NovCoeff> parametrized_ideal(const LaurentPoly& f, const MonomialMap& m) {
  std::size_t n = m.source_dim(), r = m.target_dim();
  RingPtr ring = moduli_ring(n, r, true);
  PolyIdeal<NovCoeff> base = lagrangian_ideal(f, m);
  PolyIdeal<NovCoeff> out{ring, {}};
  for (std::size_t k = 0; k < r; ++k) {
    Exponent e(ring->size(), 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<int>(m.matrix(k, i));
    out.generators.push_back(LaurentPoly::variable(ring, n + k) - LaurentPoly::monomial(ring, e));
  }
  for (const auto& g : base.generators) out.generators.push_back(embed(g, ring));
  return out;
}

/// h = M^{-T} theta(f) when M is square and invertible over Q; empty otherwise.
inline std::vector<LaurentPoly> fiber_solution(const LaurentPoly& f, const MonomialMap& m) {
  std::size_t n = m.source_dim(), r = m.target_dim();
  if (n != r || rank(m.matrix) != n) return {};
  // Solve M^T h = theta f over Q by Gauss-Jordan on rational entries.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) a[i][k] = Rational(m.matrix(k, i));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (sgn(a[p][c]) == 0) ++p;
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i)
      if (i != c && sgn(a[i][c]) != 0) {
        Rational s = a[i][c];
        for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= s * a[c][j];
      }
  }
  std::vector<LaurentPoly> out;
  for (std::size_t k = 0; k < n; ++k) {
    LaurentPoly h(f.ring_ptr());
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(a[k][n + i]) != 0) h += log_derivative(f, i).scaled(NovCoeff(Rational(a[k][n + i])));
    out.push_back(std::move(h));
  }
  return out;
}

/// Image ideal in (z, h): eliminate the moduli variables from the parametrized ideal.
template <class K>
PolyIdeal<K> image_ideal(const PolyIdeal<K>& parametrized, std::size_t r, Budget budget = {},
                         std::size_t* steps = nullptr) {
  std::vector<std::string> keep = coordinate_names("z", r);
  for (auto& s : coordinate_names("h", r)) keep.push_back(s);
  return eliminate(parametrized, keep, budget, steps);
}

template <class K>
PolyIdeal<K> to_field(const PolyIdeal<NovCoeff>& ideal, const CoeffContext& ctx) {
  PolyIdeal<K> out{ideal.ring, {}};
  for (const auto& g : ideal.generators) out.generators.push_back(to_field<K>(g, ctx));
  return out;
}

/// Lattice automorphism W acting on a polynomial in z, h (other variables
/// fixed): z^lambda -> z^{W lambda}, h_k -> sum_j (W^-T)_jk h_j.
template <class C>
Polynomial<C> weyl_action(const IntMatrix& w, const Polynomial<C>& p) {
  std::size_t r = w.rows();
  const RingPtr& ring = p.ring_ptr();
  auto zi = detail::indices_of(*ring, "z", r);
  auto hi = detail::indices_of(*ring, "h", r);
  IntMatrix winv = w.inverse();
  std::vector<Polynomial<C>> images;
  for (std::size_t v = 0; v < ring->size(); ++v) images.push_back(Polynomial<C>::variable(ring, v));
  for (std::size_t k = 0; k < r; ++k) {
    images[zi[k]] = character<C>(ring, zi, w.col(k));
    images[hi[k]] = linear_form<C>(ring, hi, winv.row(k));
  }
  return substitute(p, images, ring);
}

template <class C>
Polynomial<C> weyl_action_on_image(const RootDatum& datum, const WeylElement& w, const Polynomial<C>& p) {
  if (w.matrix.rows() != datum.rank()) throw Error("Weyl element does not match the datum rank");
  return weyl_action(w.matrix, p);
}

}  // namespace bfmlift
