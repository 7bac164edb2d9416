#pragma once

// Torus homomorphisms, pullbacks and the standard Poisson bracket on
// T*T^v = T^v x t, in the coordinates (z_1..z_r, h_1..h_r).

#include <complex>
#include <string>
#include <vector>

#include "bfmlift/intmatrix.hpp"
#include "bfmlift/polynomial.hpp"
#include "bfmlift/rootdata.hpp"

namespace bfmlift {

/// Ring (z_1..z_r, h_1..h_r): z Laurent, h polynomial.
inline RingPtr cotangent_ring(std::size_t r) {
  Ring ring;
  for (auto& n : coordinate_names("z", r)) {
    ring.names.push_back(n);
    ring.laurent.push_back(true);
  }
  for (auto& n : coordinate_names("h", r)) {
    ring.names.push_back(n);
    ring.laurent.push_back(false);
  }
  return make_ring(std::move(ring));
}

/// Ring (w_1..w_n [, z_1..z_r], h_1..h_r).
inline RingPtr moduli_ring(std::size_t n, std::size_t r, bool with_z = false) {
  Ring ring;
  for (auto& s : coordinate_names("w", n)) {
    ring.names.push_back(s);
    ring.laurent.push_back(true);
  }
  if (with_z)
    for (auto& s : coordinate_names("z", r)) {
      ring.names.push_back(s);
      ring.laurent.push_back(true);
    }
  for (auto& s : coordinate_names("h", r)) {
    ring.names.push_back(s);
    ring.laurent.push_back(false);
  }
  return make_ring(std::move(ring));
}

/// Ring (w_1..w_n): the moduli torus alone.
inline RingPtr base_ring(std::size_t n) {
  Ring ring;
  for (auto& s : coordinate_names("w", n)) {
    ring.names.push_back(s);
    ring.laurent.push_back(true);
  }
  return make_ring(std::move(ring));
}

/// Torus homomorphism (C*)^n -> (C*)^r,  z_k = prod_i w_i^{M_ki}.
struct MonomialMap {
  IntMatrix matrix;

  std::size_t source_dim() const { return matrix.cols(); }
  std::size_t target_dim() const { return matrix.rows(); }

  std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& w) const {
    if (w.size() != matrix.cols()) throw Error("point dimension does not match monomial map");
    std::vector<std::complex<double>> z(matrix.rows(), 1.0);
    for (std::size_t k = 0; k < matrix.rows(); ++k)
      for (std::size_t i = 0; i < matrix.cols(); ++i)
        if (matrix(k, i) != 0) z[k] *= std::pow(w[i], static_cast<int>(matrix(k, i)));
    return z;
  }

  friend bool operator==(const MonomialMap& a, const MonomialMap& b) { return a.matrix == b.matrix; }
};

namespace detail {

inline std::vector<std::size_t> indices_of(const Ring& ring, const std::string& stem, std::size_t count) {
  std::vector<std::size_t> out;
  for (const auto& n : coordinate_names(stem, count)) {
    auto i = ring.find(n);
    if (!i) throw Error("ring lacks coordinate '" + n + "'");
    out.push_back(*i);
  }
  return out;
}

}  // namespace detail

/// Substitutes z_k -> w^{M_k.}; h passes through. `p` lives in the cotangent
/// ring of rank M.rows(); the result lives in moduli_ring(M.cols(), M.rows()).
template <class C>
Polynomial<C> pullback(const MonomialMap& m, const Polynomial<C>& p) {
  std::size_t r = m.target_dim(), n = m.source_dim();
  if (p.ring() != *cotangent_ring(r))
    throw Error("pullback: polynomial ring does not match a rank-" + std::to_string(r) + " cotangent ring");
  RingPtr target = moduli_ring(n, r);
  std::vector<Polynomial<C>> images;
  for (std::size_t k = 0; k < r; ++k) {
    Exponent e(target->size(), 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<int>(m.matrix(k, i));
    images.push_back(Polynomial<C>::monomial(target, e));
  }
  for (std::size_t k = 0; k < r; ++k) images.push_back(Polynomial<C>::variable(target, n + k));
  return substitute(p, images, target);
}

/// Standard bracket: {z^a, z^b} = 0, {h_u, h_v} = 0, {z^a, <v,h>} = <v,a> z^a,
/// extended by Leibniz. Both arguments live in cotangent_ring(datum.rank()).
template <class C>
Polynomial<C> poisson(const Polynomial<C>& p, const Polynomial<C>& q, const RootDatum& datum) {
  std::size_t r = datum.rank();
  p.check_compatible(q);
  if (p.ring() != *cotangent_ring(r)) throw Error("poisson: arguments must live in the rank-" + std::to_string(r) +
                                                  " cotangent ring");
  Polynomial<C> out(p.ring_ptr());
  for (std::size_t k = 0; k < r; ++k) {
    out += log_derivative(p, k) * derivative(q, r + k);
    out -= derivative(p, r + k) * log_derivative(q, k);
  }
  return out;
}

/// The linear form <v, h> in the cotangent ring.
template <class C>
Polynomial<C> linear_form(const RingPtr& ring, const std::vector<std::size_t>& h_index, const IntVector& v) {
  Polynomial<C> out(ring);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out += Polynomial<C>::variable(ring, h_index.at(k)).scaled(C(static_cast<int>(v[k])));
  return out;
}

/// The character z^lambda.
template <class C>
Polynomial<C> character(const RingPtr& ring, const std::vector<std::size_t>& z_index, const IntVector& lambda) {
  Exponent e(ring->size(), 0);
  for (std::size_t k = 0; k < lambda.size(); ++k) e[z_index.at(k)] = static_cast<int>(lambda[k]);
  return Polynomial<C>::monomial(ring, e);
}

}  // namespace bfmlift
