#pragma once

// Affine blowup algebra and the lifting criterion: for each positive root,
// z^alpha - 1 in I + (h_alpha) with a cofactor, or an explicit obstruction.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bfmlift/coefficients.hpp"
#include "bfmlift/groebner.hpp"
#include "bfmlift/laurent.hpp"
#include "bfmlift/mirror.hpp"
#include "bfmlift/numeric.hpp"
#include "bfmlift/rootdata.hpp"

namespace bfmlift {

struct NegativeRootRule {
  IntVector root;       // -alpha
  std::string symbol;   // b for +alpha
  std::string rewrite;  // b_{-alpha} in terms of b_alpha
  bool verified = false;
};

/// C[z^+-1, h][b_alpha] / (b_alpha * h_alpha - (z^alpha - 1)), one b per positive root.
struct BlowupPresentation {
  RingPtr ring;  // (z.., h.., b..)
  std::vector<IntVector> roots;
  std::vector<std::string> symbols;
  std::vector<LaurentPoly> relations;
  std::vector<NegativeRootRule> negative_rules;
  std::string algebra;
};

inline BlowupPresentation blowup_presentation(const RootDatum& d) {
  const std::size_t r = d.rank();
  auto pos = d.positive_roots();
  BlowupPresentation out;
  out.symbols = coordinate_names("b", pos.size());
  RingPtr zh = cotangent_ring(r);
  Ring ring = *zh;
  for (const auto& s : out.symbols) {
    ring.names.push_back(s);
    ring.laurent.push_back(false);
  }
  out.ring = make_ring(std::move(ring));
  auto zi = detail::indices_of(*out.ring, "z", r);
  auto hi = detail::indices_of(*out.ring, "h", r);
  auto zj = detail::indices_of(*zh, "z", r);
  auto hj = detail::indices_of(*zh, "h", r);
  std::string gens;
  for (const auto& n : coordinate_names("z", r)) gens += ", " + n + "^+-1";
  for (const auto& n : coordinate_names("h", r)) gens += ", " + n;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const IntVector& a = d.root(pos[k]);
    const IntVector& av = d.coroot(pos[k]);
    out.roots.push_back(a);
    LaurentPoly b = LaurentPoly::variable(out.ring, 2 * r + k);
    LaurentPoly num = character<NovCoeff>(out.ring, zi, a) - LaurentPoly::constant(out.ring, 1);
    out.relations.push_back(b * linear_form<NovCoeff>(out.ring, hi, av) - num);
    LaurentPoly n0 = character<NovCoeff>(zh, zj, a) - LaurentPoly::constant(zh, 1);
    gens += ", (" + format(n0) + ")/(" + format(linear_form<NovCoeff>(zh, hj, av)) + ")";

    // (z^-a - 1)/h_{-a} = z^-a * (z^a - 1)/h_a, checked by cross-multiplication.
    NegativeRootRule rule;
    rule.root = negated(a);
    rule.symbol = out.symbols[k];
    auto neg = d.find_root(rule.root);
    LaurentPoly zneg = character<NovCoeff>(zh, zj, rule.root);
    rule.rewrite = format(zneg) + "*" + out.symbols[k];
    if (neg) {
      LaurentPoly lhs = (zneg - LaurentPoly::constant(zh, 1)) * linear_form<NovCoeff>(zh, hj, av);
      LaurentPoly rhs = zneg * n0 * linear_form<NovCoeff>(zh, hj, d.coroot(*neg));
      rule.verified = lhs == rhs;
    }
    out.negative_rules.push_back(std::move(rule));
  }
  out.algebra = "C[" + gens.substr(2) + "]";
  return out;
}

enum class LiftStatus { Lifted, Obstructed, Inconclusive };

inline std::string to_string(LiftStatus s) {
  switch (s) {
    case LiftStatus::Lifted: return "LIFTED";
    case LiftStatus::Obstructed: return "OBSTRUCTED";
    case LiftStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "";
}

struct SmoothnessSample {
  CVec point;
  std::size_t jacobian_rank = 0;
};

struct SmoothnessReport {
  std::string mode;  // sampled | assumed | skipped
  std::optional<int> dimension;
  std::size_t codimension = 0;
  std::vector<SmoothnessSample> samples;
  bool full_rank = false;
};

struct Witness {
  CVec point;
  double value = 0;  // |z^alpha - 1|
  std::optional<std::vector<std::string>> exact_point;
  std::optional<std::string> exact_value;
};

struct LiftCertificate {
  IntVector root;
  IntVector coroot;
  std::string divisor;  // h_alpha / content(alpha^v)
  std::string target;   // z^alpha - 1
  bool contained = false;
  std::optional<bool> in_radical;
  std::optional<std::string> cofactor;
  std::optional<std::string> generator_image;  // (z^alpha - 1)/h_alpha
  bool reverified = false;
  std::optional<Witness> witness;
  SmoothnessReport smoothness;
  LiftStatus status = LiftStatus::Inconclusive;
  std::string reason;
};

struct LiftOptions {
  Budget budget;
  bool assume_reduced = false;
  std::uint64_t seed = 0;
  std::size_t starts = 64;
  double q = default_q();
};

struct LiftReport {
  std::vector<std::string> ring;
  std::vector<std::string> ideal;
  std::vector<std::string> basis;
  std::vector<LiftCertificate> certificates;
  std::size_t steps = 0;
};

namespace detail {

template <class K>
std::vector<NumPoly> compile_all(const std::vector<Polynomial<K>>& ps, const CoeffContext& ctx, double q) {
  std::vector<NumPoly> out;
  for (const auto& p : ps) out.push_back(compile(p, [&](const K& c) { return coefficient_value(c, ctx, q); }));
  return out;
}

/// Numeric points of V(gens) of the given dimension: slice by `dim` random
/// affine hyperplanes and run Gauss-Newton from random starts.
template <class K>
std::vector<CVec> sample_variety(const std::vector<Polynomial<K>>& gens, const Ring& ring, int dim, const CoeffContext& ctx,
                                 const LiftOptions& opt, std::mt19937_64& rng, std::size_t* iterations = nullptr) {
  std::vector<NumPoly> sys = compile_all(gens, ctx, opt.q);
  const std::size_t nv = ring.size();
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int k = 0; k < dim; ++k) {
    NumPoly slice;
    Exponent zero(nv, 0);
    slice.terms.emplace_back(zero, std::complex<double>(normal(rng), normal(rng)));
    for (std::size_t v = 0; v < nv; ++v) {
      Exponent e(nv, 0);
      e[v] = 1;
      slice.terms.emplace_back(e, std::complex<double>(normal(rng), normal(rng)));
    }
    sys.push_back(std::move(slice));
  }
  std::vector<bool> torus(ring.laurent.begin(), ring.laurent.end());
  std::vector<CVec> found;
  for (std::size_t s = 0; s < opt.starts; ++s) {
    auto res = gauss_newton(sys, random_start(torus, rng), torus, {100, 1e-9, 1e6});
    if (iterations) *iterations += res.iterations;
    if (res.status != NewtonStatus::Converged) continue;
    bool dup = false;
    for (const auto& y : found)
      if (distance(y, res.x) < 1e-7) dup = true;
    if (!dup) found.push_back(res.x);
  }
  sort_points(found);
  return found;
}

template <class K>
Polynomial<K> radical_probe(const PolyIdeal<K>& j, const Polynomial<K>& p, PolyIdeal<K>& out) {
  Ring ext = *j.ring;
  ext.names.push_back("rad_t");
  ext.laurent.push_back(false);
  RingPtr er = make_ring(std::move(ext));
  out = PolyIdeal<K>{er, {}};
  for (const auto& g : j.generators) out.generators.push_back(embed(g, er));
  Polynomial<K> t = Polynomial<K>::variable(er, er->size() - 1);
  Polynomial<K> probe = Polynomial<K>::constant(er, K(1)) - t * embed(p, er);
  out.generators.push_back(probe);
  return probe;
}

}  // namespace detail

/// Lifting criterion for every positive root. The ring of `ideal` must
/// contain z_1..z_r and h_1..h_r (either (z, h) or (w, z, h)).
template <class K>
LiftReport lift_check(const PolyIdeal<K>& ideal, const RootDatum& datum, const CoeffContext& ctx,
                      const LiftOptions& opt = {}) {
  const std::size_t r = datum.rank();
  const RingPtr& ring = ideal.ring;
  auto zi = detail::indices_of(*ring, "z", r);
  auto hi = detail::indices_of(*ring, "h", r);
  LiftReport rep;
  rep.ring = ring->names;
  for (const auto& g : ideal.generators) rep.ideal.push_back(format(g, ctx));
  std::mt19937_64 rng(opt.seed);

  std::optional<GroebnerBasis<K>> gb;
  std::string budget_reason;
  try {
    gb.emplace(groebner(ideal, MonomialOrder::grevlex(), opt.budget));
    rep.steps += gb->steps();
    for (const auto& g : gb->elements()) rep.basis.push_back(format(normalize_generator(g), ctx));
  } catch (const BudgetExceeded& e) {
    budget_reason = e.what();
  }

  for (std::size_t idx : datum.positive_roots()) {
    LiftCertificate cert;
    cert.root = datum.root(idx);
    cert.coroot = datum.coroot(idx);
    long c = content(cert.coroot);
    IntVector prim = cert.coroot;
    for (auto& x : prim) x /= c;
    Polynomial<K> d = linear_form<K>(ring, hi, prim);
    Polynomial<K> p = character<K>(ring, zi, cert.root) - Polynomial<K>::constant(ring, K(1));
    cert.divisor = format(d, ctx);
    cert.target = format(p, ctx);
    PolyIdeal<K> j = ideal;
    j.generators.push_back(d);

    try {
      if (!gb) throw BudgetExceeded(opt.budget.max_steps + 1);
      auto gj = groebner(j, MonomialOrder::grevlex(), opt.budget);
      rep.steps += gj.steps();
      auto dim = dimension(gj);
      cert.smoothness.dimension = dim;
      cert.contained = gj.contains(p);
      if (cert.contained) {
        auto x = cofactor(p, d, *gb, opt.budget);
        if (!x) throw Error("internal: contained target without a cofactor");
        cert.reverified = gb->contains(*x * d - p);
        cert.cofactor = format(*x, ctx);
        cert.generator_image = format(x->scaled(detail::lift_rational<K>(Rational(1, c))), ctx);
        cert.status = cert.reverified ? LiftStatus::Lifted : LiftStatus::Inconclusive;
        cert.reason = cert.reverified ? "z^a - 1 lies in I + (h_a); cofactor re-verified by normal form"
                                      : "cofactor failed re-verification";
      } else {
        PolyIdeal<K> probe_ideal;
        detail::radical_probe(j, p, probe_ideal);
        auto probe = groebner(probe_ideal, MonomialOrder::grevlex(), opt.budget);
        rep.steps += probe.steps();
        cert.in_radical = probe.is_unit();
        if (*cert.in_radical) {
          cert.status = LiftStatus::Inconclusive;
          cert.reason = "z^a - 1 vanishes on {h_a = 0} but is not in I + (h_a); I + (h_a) is not reduced";
        } else {
          auto pts = detail::sample_variety(j.generators, *ring, dim.value_or(0), ctx, opt, rng);
          std::vector<NumPoly> target = detail::compile_all(std::vector<Polynomial<K>>{p}, ctx, opt.q);
          for (const auto& x : pts) {
            double v = std::abs(target[0].value(x));
            if (v > 1e-6) {
              Witness w;
              w.point = x;
              w.value = v;
              if (auto ex = snap_point(x)) {
                LaurentPoly pl = to_laurent(p, ctx);
                bool on = true;
                for (const auto& g : j.generators)
                  if (on && !evaluate_exact(to_laurent(g, ctx), *ex).zero()) on = false;
                NovCoeff pv = evaluate_exact(pl, *ex);
                if (on && !pv.zero()) {
                  RingPtr cr = make_ring(Ring{});
                  std::vector<std::string> shown;
                  for (const auto& g : *ex) shown.push_back(format(LaurentPoly::constant(cr, NovCoeff(g))));
                  w.exact_point = shown;
                  w.exact_value = format(LaurentPoly::constant(cr, pv));
                }
              }
              cert.witness = w;
              break;
            }
          }
          if (cert.witness) {
            cert.status = LiftStatus::Obstructed;
            cert.reason = "z^a - 1 is not in the radical of I + (h_a); witness point has h_a = 0 and z^a != 1";
          } else {
            cert.status = LiftStatus::Inconclusive;
            cert.reason = "z^a - 1 is not in the radical of I + (h_a) but no numeric witness was found";
          }
        }
      }

      SmoothnessReport& sm = cert.smoothness;
      if (opt.assume_reduced) {
        sm.mode = "assumed";
      } else if (!dim) {
        sm.mode = "skipped";
        sm.full_rank = true;
      } else {
        sm.mode = "sampled";
        sm.codimension = ring->size() - static_cast<std::size_t>(*dim);
        auto sys = detail::compile_all(j.generators, ctx, opt.q);
        auto pts = detail::sample_variety(j.generators, *ring, *dim, ctx, opt, rng);
        sm.full_rank = !pts.empty();
        for (std::size_t k = 0; k < pts.size() && k < 8; ++k) {
          std::size_t rk = numeric_rank(jacobian(sys, pts[k]));
          sm.samples.push_back({pts[k], rk});
          if (rk != sm.codimension) sm.full_rank = false;
        }
      }
    } catch (const BudgetExceeded& e) {
      cert.status = LiftStatus::Inconclusive;
      cert.reason = "groebner budget exceeded: " + (budget_reason.empty() ? std::string(e.what()) : budget_reason);
      cert.smoothness.mode = "skipped";
    } catch (const NotNovikov& e) {
      cert.status = LiftStatus::Inconclusive;
      cert.reason = e.what();
      cert.smoothness.mode = "skipped";
    }
    rep.certificates.push_back(std::move(cert));
  }
  return rep;
}

struct Codim2Entry {
  IntVector root_a, root_b;
  std::optional<int> dim_ideal;
  std::optional<int> dim_pair;  // nullopt: empty intersection
  bool pass = false;
};

/// dim(I + (h_a, h_b)) <= dim(I) - 2 for every pair of positive roots.
template <class K>
std::vector<Codim2Entry> codim2_check(const PolyIdeal<K>& ideal, const RootDatum& datum, Budget budget = {},
                                      std::size_t* steps = nullptr) {
  const std::size_t r = datum.rank();
  auto hi = detail::indices_of(*ideal.ring, "h", r);
  auto pos = datum.positive_roots();
  std::vector<Codim2Entry> out;
  if (pos.size() < 2) return out;
  auto g0 = groebner(ideal, MonomialOrder::grevlex(), budget);
  if (steps) *steps += g0.steps();
  auto d0 = dimension(g0);
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = a + 1; b < pos.size(); ++b) {
      Codim2Entry e{datum.root(pos[a]), datum.root(pos[b]), d0, std::nullopt, false};
      PolyIdeal<K> j = ideal;
      j.generators.push_back(linear_form<K>(ideal.ring, hi, datum.coroot(pos[a])));
      j.generators.push_back(linear_form<K>(ideal.ring, hi, datum.coroot(pos[b])));
      auto g = groebner(j, MonomialOrder::grevlex(), budget);
      if (steps) *steps += g.steps();
      e.dim_pair = dimension(g);
      e.pass = !e.dim_pair || (d0 && *e.dim_pair <= *d0 - 2);
      out.push_back(e);
    }
  return out;
}

struct PoissonReport {
  IntVector root_a, root_b;
  std::vector<std::vector<long>> matrix;  // {z^{a_i} - 1, h_{a_j}} on z = 1
  long det = 0;
  bool nondegenerate = false;
};

inline PoissonReport poisson_nondegeneracy(const RootDatum& datum, std::size_t a, std::size_t b) {
  datum.check_index(a);
  datum.check_index(b);
  if (a == b) throw Error("poisson_nondegeneracy needs two distinct roots");
  const std::size_t r = datum.rank();
  RingPtr ring = cotangent_ring(r);
  auto zi = detail::indices_of(*ring, "z", r);
  auto hi = detail::indices_of(*ring, "h", r);
  std::vector<GaussRational> at_s(2 * r, GaussRational(0));
  for (std::size_t k = 0; k < r; ++k) at_s[zi[k]] = GaussRational(1);
  PoissonReport rep{datum.root(a), datum.root(b), {}, 0, false};
  std::size_t idx[2] = {a, b};
  for (std::size_t i : idx) {
    std::vector<long> row;
    LaurentPoly u = character<NovCoeff>(ring, zi, datum.root(i)) - LaurentPoly::constant(ring, 1);
    for (std::size_t j : idx) {
      LaurentPoly v = linear_form<NovCoeff>(ring, hi, datum.coroot(j));
      NovCoeff val = evaluate_exact(poisson(u, v, datum), at_s);
      GaussRational g = val.constant_part();
      if (!val.is_constant() || !g.is_real() || g.re.get_den() != 1) throw Error("internal: non-integral bracket value");
      row.push_back(g.re.get_num().get_si());
    }
    rep.matrix.push_back(row);
  }
  rep.det = rep.matrix[0][0] * rep.matrix[1][1] - rep.matrix[0][1] * rep.matrix[1][0];
  rep.nondegenerate = rep.det != 0;
  return rep;
}

struct WeylWitness {
  IntVector reflection_root;
  std::string generator;
  std::string image;
  std::string normal_form;
};

struct WeylInvariance {
  bool invariant = true;
  bool vacuous = false;
  std::optional<WeylWitness> witness;
};

template <class K>
WeylInvariance weyl_invariance(const PolyIdeal<K>& ideal, const RootDatum& datum, const CoeffContext& ctx,
                               Budget budget = {}, std::size_t* steps = nullptr) {
  WeylInvariance out;
  auto simple = datum.simple_roots();
  if (simple.empty()) {
    out.vacuous = true;
    return out;
  }
  auto g = groebner(ideal, MonomialOrder::grevlex(), budget);
  if (steps) *steps += g.steps();
  for (std::size_t s : simple) {
    IntMatrix w = datum.reflection_matrix(s);
    for (const auto& gen : ideal.generators) {
      Polynomial<K> img = weyl_action(w, gen);
      Polynomial<K> nf = g.normal_form(img);
      if (!nf.is_zero()) {
        out.invariant = false;
        out.witness = WeylWitness{datum.root(s), format(gen, ctx), format(img, ctx), format(nf, ctx)};
        return out;
      }
    }
  }
  return out;
}

}  // namespace bfmlift
