#pragma once

// Root data of the dual group G^v on the cocharacter lattice of the torus T:
// roots alpha live in X_*(T) = X^*(T^v) (so h_alpha = alpha in t) and
// coroots alpha^v live in the dual lattice, acting on fiber coordinates as
// the integer linear form h -> <alpha^v, h>.

#include <algorithm>
#include <complex>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bfmlift/error.hpp"
#include "bfmlift/field.hpp"
#include "bfmlift/intmatrix.hpp"

namespace bfmlift {

class RootDatum {
 public:
  RootDatum() = default;

  /// Validates eagerly: every invariant failure throws.
  RootDatum(std::size_t rank, std::vector<IntVector> roots, std::vector<IntVector> coroots, std::string name = "")
      : rank_(rank), roots_(std::move(roots)), coroots_(std::move(coroots)), name_(std::move(name)) {
    validate();
  }

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return roots_.size(); }
  const std::vector<IntVector>& roots() const { return roots_; }
  const std::vector<IntVector>& coroots() const { return coroots_; }
  const IntVector& root(std::size_t i) const { return roots_.at(i); }
  const IntVector& coroot(std::size_t i) const { return coroots_.at(i); }
  const std::string& name() const { return name_; }

  std::optional<std::size_t> find_root(const IntVector& v) const {
    for (std::size_t i = 0; i < roots_.size(); ++i)
      if (roots_[i] == v) return i;
    return std::nullopt;
  }

  /// Positive roots: first nonzero coordinate is positive.
  std::vector<std::size_t> positive_roots() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < roots_.size(); ++i)
      if (is_positive(roots_[i])) out.push_back(i);
    return out;
  }

  /// Positive roots that are not a sum of two positive roots.
  std::vector<std::size_t> simple_roots() const {
    auto pos = positive_roots();
    std::vector<std::size_t> out;
    for (std::size_t i : pos) {
      bool decomposable = false;
      for (std::size_t j : pos) {
        if (j == i) continue;
        IntVector diff(rank_);
        for (std::size_t k = 0; k < rank_; ++k) diff[k] = roots_[i][k] - roots_[j][k];
        auto other = find_root(diff);
        if (other && is_positive(diff)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) out.push_back(i);
    }
    return out;
  }

  /// Matrix of s_alpha on t:  h -> h - <alpha^v, h> alpha.
  IntMatrix reflection_matrix(std::size_t i) const {
    check_index(i);
    IntMatrix s = IntMatrix::identity(rank_);
    for (std::size_t r = 0; r < rank_; ++r)
      for (std::size_t c = 0; c < rank_; ++c) s(r, c) -= roots_[i][r] * coroots_[i][c];
    return s;
  }

  void check_index(std::size_t i) const {
    if (i >= roots_.size())
      throw Error("root index " + std::to_string(i) + " out of range (datum has " + std::to_string(roots_.size()) +
                  " roots)");
  }

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.rank_ == b.rank_ && a.roots_ == b.roots_ && a.coroots_ == b.coroots_;
  }

 private:
  static bool is_positive(const IntVector& v) {
    for (long x : v)
      if (x != 0) return x > 0;
    return false;
  }

  void validate() const {
    if (rank_ == 0) throw Error("root datum rank must be positive");
    if (roots_.size() != coroots_.size()) throw Error("roots and coroots must pair up one-to-one");
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      const std::string tag = "root " + std::to_string(i) + " " ;
      if (roots_[i].size() != rank_) throw Error(tag + "has wrong length");
      if (coroots_[i].size() != rank_) throw Error("coroot " + std::to_string(i) + " has wrong length");
      if (std::all_of(roots_[i].begin(), roots_[i].end(), [](long x) { return x == 0; }))
        throw Error(tag + "is zero");
      if (dot(coroots_[i], roots_[i]) != 2)
        throw Error("pairing <coroot, root> = " + std::to_string(dot(coroots_[i], roots_[i])) + " for " + tag +
                    to_string(roots_[i]) + ", expected 2");
      for (std::size_t j = 0; j < i; ++j)
        if (roots_[j] == roots_[i]) throw Error(tag + "is duplicated");
      auto neg = find_root(negated(roots_[i]));
      if (!neg) throw Error("negative of " + tag + to_string(roots_[i]) + " is missing");
      if (coroots_[*neg] != negated(coroots_[i])) throw Error("coroot of -alpha is not -alpha^v for " + tag);
    }
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      IntMatrix s = reflection_matrix(i);
      IntMatrix st = s.transpose();
      for (std::size_t j = 0; j < roots_.size(); ++j) {
        if (!find_root(s.apply(roots_[j])))
          throw Error("reflection in root " + std::to_string(i) + " does not preserve the root set");
        // coroots transform by the transpose
        auto img = find_root(s.apply(roots_[j]));
        if (coroots_[*img] != st.apply(coroots_[j]))
          throw Error("reflection in root " + std::to_string(i) + " does not preserve the coroot pairing");
      }
    }
  }

  std::size_t rank_ = 0;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coroots_;
  std::string name_;
};

/// Element of the Weyl group: a lattice automorphism of t and a reduced word
/// in simple reflections (indices into the datum's root list).
struct WeylElement {
  IntMatrix matrix;
  std::vector<std::size_t> word;
};

/// s_alpha(h) = h - <alpha^v, h> alpha.
inline std::vector<Rational> reflect(const RootDatum& d, std::size_t root_index, const std::vector<Rational>& h) {
  d.check_index(root_index);
  if (h.size() != d.rank()) throw Error("vector has wrong length for reflection");
  const IntVector& a = d.root(root_index);
  const IntVector& av = d.coroot(root_index);
  Rational pairing = 0;
  for (std::size_t k = 0; k < h.size(); ++k) pairing += av[k] * h[k];
  std::vector<Rational> out = h;
  for (std::size_t k = 0; k < h.size(); ++k) out[k] -= pairing * a[k];
  return out;
}

inline constexpr std::size_t kDefaultWeylBound = 1000000;

/// All products of simple reflections, sorted by word length then by word.
inline std::vector<WeylElement> weyl_enumerate(const RootDatum& d, std::size_t bound = kDefaultWeylBound) {
  if (bound < 1) throw Error("Weyl enumeration bound must be at least 1");
  auto simple = d.simple_roots();
  std::vector<IntMatrix> gens;
  for (std::size_t s : simple) gens.push_back(d.reflection_matrix(s));

  std::vector<WeylElement> out{{IntMatrix::identity(d.rank()), {}}};
  std::map<IntMatrix, std::size_t> seen{{out[0].matrix, 0}};
  std::size_t frontier_begin = 0;
  while (frontier_begin < out.size()) {
    std::size_t frontier_end = out.size();
    for (std::size_t f = frontier_begin; f < frontier_end; ++f)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        IntMatrix m = out[f].matrix * gens[g];
        if (seen.count(m)) continue;
        if (out.size() >= bound) throw Error("Weyl group not finite within bound " + std::to_string(bound));
        std::vector<std::size_t> word = out[f].word;
        word.push_back(simple[g]);
        seen.emplace(m, out.size());
        out.push_back({std::move(m), std::move(word)});
      }
    frontier_begin = frontier_end;
  }
  std::stable_sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return out;
}

/// Swaps roots and coroots.
inline RootDatum langlands_dual(const RootDatum& d) {
  static const std::map<std::string, std::string> kDualNames = {
      {"SU2", "PSU2"}, {"PSU2", "SU2"}, {"SO3", "SU2"}, {"U2", "U2"}, {"SU3", "PSU3"}, {"PSU3", "SU3"}};
  std::string name;
  if (auto it = kDualNames.find(d.name()); it != kDualNames.end()) name = it->second;
  else if (!d.name().empty()) name = "dual(" + d.name() + ")";
  return RootDatum(d.rank(), d.coroots(), d.roots(), name);
}

/// True iff z^alpha = 1 for every root, within `tol`.
inline bool in_center(const RootDatum& d, const std::vector<std::complex<double>>& z, double tol = 1e-8) {
  if (z.size() != d.rank()) throw Error("point has wrong dimension");
  for (const auto& c : z)
    if (c == std::complex<double>(0.0)) throw Error("torus point has a zero coordinate");
  for (const auto& a : d.roots()) {
    std::complex<double> v = 1.0;
    for (std::size_t k = 0; k < a.size(); ++k) v *= std::pow(z[k], static_cast<int>(a[k]));
    if (std::abs(v - 1.0) > tol) return false;
  }
  return true;
}

/// Exact variant for Gaussian-rational points.
inline bool in_center(const RootDatum& d, const std::vector<GaussRational>& z) {
  if (z.size() != d.rank()) throw Error("point has wrong dimension");
  for (const auto& c : z)
    if (is_zero(c)) throw Error("torus point has a zero coordinate");
  for (const auto& a : d.roots()) {
    GaussRational v(1);
    for (std::size_t k = 0; k < a.size(); ++k) {
      GaussRational base = a[k] >= 0 ? z[k] : GaussRational(1) / z[k];
      for (long e = 0; e < std::abs(a[k]); ++e) v *= base;
    }
    if (v != GaussRational(1)) return false;
  }
  return true;
}

/// Point action of a lattice automorphism on T^v:  (w.z)_k = prod_j z_j^{W_jk},
/// so that (w.z)^lambda = z^{W lambda}.
inline std::vector<std::complex<double>> act_on_point(const IntMatrix& w, const std::vector<std::complex<double>>& z) {
  std::vector<std::complex<double>> out(z.size(), 1.0);
  for (std::size_t k = 0; k < z.size(); ++k)
    for (std::size_t j = 0; j < z.size(); ++j) out[k] *= std::pow(z[j], static_cast<int>(w(j, k)));
  return out;
}

inline RootDatum direct_product(const RootDatum& a, const RootDatum& b) {
  std::size_t r = a.rank() + b.rank();
  std::vector<IntVector> roots, coroots;
  auto pad = [r](const IntVector& v, std::size_t offset) {
    IntVector out(r, 0);
    std::copy(v.begin(), v.end(), out.begin() + static_cast<long>(offset));
    return out;
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    roots.push_back(pad(a.root(i), 0));
    coroots.push_back(pad(a.coroot(i), 0));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    roots.push_back(pad(b.root(i), a.rank()));
    coroots.push_back(pad(b.coroot(i), a.rank()));
  }
  return RootDatum(r, roots, coroots, a.name() + "x" + b.name());
}

inline std::vector<std::string> preset_names() { return {"SU2", "PSU2", "SO3", "U2", "SU3", "PSU3", "T^r"}; }

/// Named root data. Products are written "PSU2xPSU2"; tori "T^r" or "Tr".
inline RootDatum preset(const std::string& name) {
  if (auto x = name.find('x'); x != std::string::npos)
    return direct_product(preset(name.substr(0, x)), preset(name.substr(x + 1)));
  if (name == "SU2") return RootDatum(1, {{1}, {-1}}, {{2}, {-2}}, "SU2");
  if (name == "PSU2" || name == "SO3") return RootDatum(1, {{2}, {-2}}, {{1}, {-1}}, name);
  if (name == "U2") return RootDatum(2, {{1, -1}, {-1, 1}}, {{1, -1}, {-1, 1}}, "U2");
  if (name == "SU3")
    return RootDatum(2, {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}},
                     {{2, -1}, {-1, 2}, {1, 1}, {-2, 1}, {1, -2}, {-1, -1}}, "SU3");
  if (name == "PSU3")
    return RootDatum(2, {{2, 1}, {1, 2}, {1, -1}, {-2, -1}, {-1, -2}, {-1, 1}},
                     {{1, 0}, {0, 1}, {1, -1}, {-1, 0}, {0, -1}, {-1, 1}}, "PSU3");
  if (!name.empty() && name[0] == 'T') {
    std::string digits = name.substr(name.size() > 1 && name[1] == '^' ? 2 : 1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      long r = std::stol(digits);
      if (r < 1) throw Error("torus rank must be positive");
      return RootDatum(static_cast<std::size_t>(r), {}, {}, "T^" + digits);
    }
  }
  throw Error("unknown group preset '" + name + "'");
}

}  // namespace bfmlift
