#pragma once

// Floating-point polynomial systems: compiled evaluation, Jacobians,
// min-norm Gauss-Newton, numeric rank and exact snapping.

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <vector>

#include "bfmlift/field.hpp"
#include "bfmlift/polynomial.hpp"

namespace bfmlift {

using CVec = std::vector<std::complex<double>>;
using QuadReal = boost::multiprecision::cpp_bin_float_quad;
using QuadComplex = boost::multiprecision::cpp_complex_quad;

/// Polynomial with complex double coefficients.
struct NumPoly {
  std::vector<std::pair<Exponent, std::complex<double>>> terms;

  std::complex<double> value(const CVec& x) const {
    std::complex<double> s = 0.0;
    for (const auto& [e, c] : terms) {
      std::complex<double> t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) t *= std::pow(x[i], e[i]);
      s += t;
    }
    return s;
  }

  /// d/dx_j for every j.
  CVec gradient(const CVec& x) const {
    CVec g(x.size(), 0.0);
    for (const auto& [e, c] : terms)
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        std::complex<double> t = c * static_cast<double>(e[j]);
        for (std::size_t i = 0; i < e.size(); ++i) {
          int k = i == j ? e[i] - 1 : e[i];
          if (k != 0) t *= std::pow(x[i], k);
        }
        g[j] += t;
      }
    return g;
  }
};

template <class C, class F>
NumPoly compile(const Polynomial<C>& p, F&& coeff) {
  NumPoly out;
  for (const auto& [e, c] : p.terms()) out.terms.emplace_back(e, coeff(c));
  return out;
}

inline NumPoly compile(const LaurentPoly& p, double q = default_q()) {
  return compile(p, [q](const NovCoeff& c) { return c.evaluate(q); });
}

inline double residual(const std::vector<NumPoly>& sys, const CVec& x) {
  double r = 0.0;
  for (const auto& p : sys) r = std::max(r, std::abs(p.value(x)));
  return r;
}

inline Eigen::MatrixXcd jacobian(const std::vector<NumPoly>& sys, const CVec& x) {
  Eigen::MatrixXcd j(static_cast<long>(sys.size()), static_cast<long>(x.size()));
  for (std::size_t i = 0; i < sys.size(); ++i) {
    CVec g = sys[i].gradient(x);
    for (std::size_t k = 0; k < x.size(); ++k) j(static_cast<long>(i), static_cast<long>(k)) = g[k];
  }
  return j;
}

/// Rank with singular values below tol * max(1, largest) treated as zero.
inline std::size_t numeric_rank(const Eigen::MatrixXcd& m, double tol = 1e-8) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  double scale = std::max(1.0, s.size() ? s(0) : 0.0);
  std::size_t r = 0;
  for (long i = 0; i < s.size(); ++i)
    if (s(i) > tol * scale) ++r;
  return r;
}

enum class NewtonStatus { Converged, Escaped, Failed };

struct NewtonOptions {
  std::size_t max_iterations = 100;
  double tolerance = 1e-9;
  double escape = 1e6;
};

struct NewtonResult {
  CVec x;
  double residual = 0;
  std::size_t iterations = 0;
  NewtonStatus status = NewtonStatus::Failed;
};

/// Gauss-Newton with min-norm steps; `torus` marks coordinates that must stay
/// in C^*. Escape means leaving the box 1/escape < |x| < escape.
inline NewtonResult gauss_newton(const std::vector<NumPoly>& sys, CVec x, const std::vector<bool>& torus,
                                 const NewtonOptions& opt = {}) {
  NewtonResult out;
  auto escaped = [&](const CVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      double a = std::abs(v[i]);
      if (!std::isfinite(a) || a > opt.escape) return true;
      if (torus[i] && a < 1.0 / opt.escape) return true;
    }
    return false;
  };
  const long n = static_cast<long>(x.size());
  for (; out.iterations < opt.max_iterations; ++out.iterations) {
    double r = residual(sys, x);
    if (r < 1e-14) break;
    Eigen::VectorXcd g(static_cast<long>(sys.size()));
    for (std::size_t i = 0; i < sys.size(); ++i) g(static_cast<long>(i)) = -sys[i].value(x);
    Eigen::VectorXcd dx = jacobian(sys, x).completeOrthogonalDecomposition().solve(g);
    double step = 0, size = 1;
    for (long i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] += dx(i);
      step = std::max(step, std::abs(dx(i)));
      size = std::max(size, std::abs(x[static_cast<std::size_t>(i)]));
    }
    if (escaped(x)) {
      out.status = NewtonStatus::Escaped;
      out.x = x;
      out.residual = std::numeric_limits<double>::infinity();
      return out;
    }
    if (step < 1e-15 * size) break;
  }
  out.x = x;
  out.residual = residual(sys, x);
  out.status = out.residual < opt.tolerance ? NewtonStatus::Converged : NewtonStatus::Failed;
  return out;
}

/// Random start: torus coordinates exp(U(-1,1) + i U(0, 2pi)), others standard complex normal.
inline CVec random_start(const std::vector<bool>& torus, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> logmod(-1.0, 1.0), phase(0.0, 2 * M_PI);
  std::normal_distribution<double> normal(0.0, 1.0);
  CVec x;
  for (bool t : torus) {
    if (t) x.push_back(std::polar(std::exp(logmod(rng)), phase(rng)));
    else x.emplace_back(normal(rng), normal(rng));
  }
  return x;
}

inline double distance(const CVec& a, const CVec& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

/// Lexicographic key after rounding every real and imaginary part to 1e-6.
inline std::vector<long long> rounded_key(const CVec& x) {
  std::vector<long long> k;
  for (const auto& c : x) {
    k.push_back(std::llround(c.real() * 1e6));
    k.push_back(std::llround(c.imag() * 1e6));
  }
  return k;
}

inline void sort_points(std::vector<CVec>& pts) {
  std::stable_sort(pts.begin(), pts.end(), [](const CVec& a, const CVec& b) { return rounded_key(a) < rounded_key(b); });
}

/// Nearest rational with denominator <= max_den within tol, if any.
inline std::optional<Rational> snap_rational(double x, long max_den = 12, double tol = 1e-9) {
  for (long d = 1; d <= max_den; ++d) {
    double n = std::round(x * static_cast<double>(d));
    if (std::abs(x * static_cast<double>(d) - n) < tol * static_cast<double>(d)) return make_rational(static_cast<long>(n), d);
  }
  return std::nullopt;
}

inline std::optional<std::vector<GaussRational>> snap_point(const CVec& x) {
  std::vector<GaussRational> out;
  for (const auto& c : x) {
    auto re = snap_rational(c.real()), im = snap_rational(c.imag());
    if (!re || !im) return std::nullopt;
    out.emplace_back(*re, *im);
  }
  return out;
}

/// Max |p_i(x)| in 128-bit floating point; q = exp(log_q).
inline double quad_residual(const std::vector<LaurentPoly>& sys, const CVec& x, const QuadReal& log_q) {
  std::vector<QuadComplex> xq;
  for (const auto& c : x) xq.emplace_back(QuadReal(c.real()), QuadReal(c.imag()));
  auto rat = [](const Rational& r) { return QuadReal(r.get_num().get_str()) / QuadReal(r.get_den().get_str()); };
  QuadReal worst = 0;
  for (const auto& p : sys) {
    QuadComplex s(0);
    for (const auto& [e, c] : p.terms()) {
      QuadComplex coeff(0);
      for (const auto& [lambda, a] : c.terms()) {
        QuadReal w = exp(rat(lambda) * log_q);
        coeff += QuadComplex(rat(a.re) * w, rat(a.im) * w);
      }
      QuadComplex t = coeff;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        QuadComplex b = e[i] > 0 ? xq[i] : QuadComplex(1) / xq[i];
        for (int k = 0; k < std::abs(e[i]); ++k) t *= b;
      }
      s += t;
    }
    QuadReal a = abs(s);
    if (a > worst) worst = a;
  }
  return static_cast<double>(worst);
}

}  // namespace bfmlift
