#pragma once

// Exact coefficient fields for ideal computations and the conversions
// between them and Novikov-coefficient Laurent polynomials.
//
//   unit mode:   q = 1, coefficients in Q or Q(i)
//   formal mode: q kept as Q^D for a transcendental Q, coefficients in
//                Q(Q) or Q(i)(Q), where D is the common exponent denominator

#include <numeric>
#include <string>
#include <variant>

#include "bfmlift/error.hpp"
#include "bfmlift/field.hpp"
#include "bfmlift/grammar.hpp"
#include "bfmlift/groebner.hpp"
#include "bfmlift/novikov.hpp"
#include "bfmlift/polynomial.hpp"

namespace bfmlift {

enum class NovikovMode { Unit, Formal };

inline std::string to_string(NovikovMode m) { return m == NovikovMode::Unit ? "unit" : "formal"; }

inline NovikovMode parse_novikov_mode(const std::string& s) {
  if (s == "unit") return NovikovMode::Unit;
  if (s == "formal") return NovikovMode::Formal;
  throw Error("unknown novikov mode '" + s + "' (expected formal or unit)");
}

/// Conversion data shared by every polynomial of one computation.
struct CoeffContext {
  NovikovMode mode = NovikovMode::Unit;
  long denominator = 1;  // q = Q^denominator in formal mode
};

/// Thrown when an exact result has no Novikov-series form.
class NotNovikov : public Error {
 public:
  explicit NotNovikov(const std::string& what) : Error(what) {}
};

namespace detail {

template <class F>
F scalar_from(const GaussRational& g) {
  if constexpr (std::is_same_v<F, Rational>) {
    if (!g.is_real()) throw Error("internal: imaginary coefficient in a rational computation");
    return g.re;
  } else {
    return g;
  }
}

template <class F>
GaussRational scalar_to(const F& c) {
  return GaussRational(c);
}

template <class K>
struct is_ratfunc : std::false_type {};
template <class F>
struct is_ratfunc<RatFunc<F>> : std::true_type {
  using base = F;
};

}  // namespace detail

/// NovCoeff -> K.
template <class K>
K to_field(const NovCoeff& c, const CoeffContext& ctx) {
  if constexpr (detail::is_ratfunc<K>::value) {
    using F = typename detail::is_ratfunc<K>::base;
    K out;
    for (const auto& [lambda, a] : c.terms()) {
      Rational e = lambda * ctx.denominator;
      if (e.get_den() != 1) throw Error("internal: Novikov exponent finer than the common denominator");
      long k = e.get_num().get_si();
      out += K::variable_power(k) * K(detail::scalar_from<F>(a));
    }
    return out;
  } else {
    GaussRational v = ctx.mode == NovikovMode::Unit ? c.at_unit() : c.constant_part();
    if (ctx.mode == NovikovMode::Formal && !c.is_constant())
      throw Error("internal: q-dependent coefficient in a constant-field computation");
    return detail::scalar_from<K>(v);
  }
}

/// K -> NovCoeff. Throws NotNovikov for rational functions of q that are
/// not finite q-series.
template <class K>
NovCoeff from_field(const K& c, const CoeffContext& ctx) {
  if constexpr (detail::is_ratfunc<K>::value) {
    if (!c.den().is_monomial()) throw NotNovikov("coefficient " + to_string(c) + " is not a finite q-series");
    long shift = c.den().degree();
    GaussRational dl = detail::scalar_to(c.den().lead());
    NovCoeff out;
    const auto& num = c.num().coeffs();
    for (std::size_t j = 0; j < num.size(); ++j) {
      if (is_zero(num[j])) continue;
      Rational lambda(static_cast<long>(j) - shift, ctx.denominator);
      lambda.canonicalize();
      out += NovCoeff::q_power(lambda, detail::scalar_to(num[j]) / dl);
    }
    return out;
  } else {
    return NovCoeff(detail::scalar_to(c));
  }
}

template <class K>
Polynomial<K> to_field(const LaurentPoly& p, const CoeffContext& ctx) {
  return map_coefficients<K>(p, [&](const NovCoeff& c) { return to_field<K>(c, ctx); });
}

template <class K>
LaurentPoly to_laurent(const Polynomial<K>& p, const CoeffContext& ctx) {
  return map_coefficients<NovCoeff>(p, [&](const K& c) { return from_field<K>(c, ctx); });
}

template <class K>
std::string format(const Polynomial<K>& p, const CoeffContext& ctx) {
  return format(to_laurent(p, ctx));
}

/// Numeric value of an exact coefficient with q = q_value.
template <class K>
std::complex<double> coefficient_value(const K& c, const CoeffContext& ctx, double q_value) {
  if constexpr (detail::is_ratfunc<K>::value) {
    return to_complex(c, std::pow(q_value, 1.0 / static_cast<double>(ctx.denominator)));
  } else {
    return to_complex(c);
  }
}

template <class K>
std::complex<double> evaluate(const Polynomial<K>& p, const std::vector<std::complex<double>>& point,
                              const CoeffContext& ctx, double q_value = default_q()) {
  return evaluate_with(p, point, [&](const K& c) { return coefficient_value(c, ctx, q_value); });
}

/// Field choice for a set of input polynomials.
enum class FieldKind { Rational, Gaussian, RationalQ, GaussianQ };

inline std::string to_string(FieldKind k) {
  switch (k) {
    case FieldKind::Rational: return "QQ";
    case FieldKind::Gaussian: return "QQ(i)";
    case FieldKind::RationalQ: return "QQ(Q)";
    case FieldKind::GaussianQ: return "QQ(i)(Q)";
  }
  return "";
}

/// Smallest field holding every coefficient, and the q-exponent denominator.
inline std::pair<FieldKind, CoeffContext> choose_field(const std::vector<LaurentPoly>& polys, NovikovMode mode) {
  bool gaussian = false;
  long den = 1;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms()) {
      if (mode == NovikovMode::Unit) {
        if (!c.at_unit().is_real()) gaussian = true;
      } else {
        if (!c.is_real()) gaussian = true;
        den = std::lcm(den, c.exponent_denominator());
      }
    }
  CoeffContext ctx{mode, den};
  if (mode == NovikovMode::Unit) return {gaussian ? FieldKind::Gaussian : FieldKind::Rational, ctx};
  return {gaussian ? FieldKind::GaussianQ : FieldKind::RationalQ, ctx};
}

/// Calls fn with a value-initialized tag of the exact field type.
template <class Fn>
decltype(auto) with_field(FieldKind kind, Fn&& fn) {
  switch (kind) {
    case FieldKind::Rational: return fn(Rational{});
    case FieldKind::Gaussian: return fn(GaussRational{});
    case FieldKind::RationalQ: return fn(RatFunc<Rational>{});
    case FieldKind::GaussianQ: return fn(RatFunc<GaussRational>{});
  }
  throw Error("internal: unknown field kind");
}

}  // namespace bfmlift
