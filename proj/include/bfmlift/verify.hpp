#pragma once

// Numerical checks of the critical-locus predictions: critical points of f
// subject to df = M^T h with h in a Weyl-fixed subspace, their Teleman
// values against root kernels and the center, and Morse/smoothness data.

#include <Eigen/Eigenvalues>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bfmlift/laurent.hpp"
#include "bfmlift/mirror.hpp"
#include "bfmlift/numeric.hpp"
#include "bfmlift/rootdata.hpp"

namespace bfmlift {

enum class ConstraintKind { Critical, ReflectionFixed };

/// Critical: h = 0 (df = 0). ReflectionFixed: h in the s_alpha-fixed
/// hyperplane ker(alpha^v) of the given root.
struct Constraint {
  ConstraintKind kind = ConstraintKind::Critical;
  std::size_t root = 0;
};

enum class SolverMethod { Auto, Companion, Newton };

struct SolveOptions {
  std::uint64_t seed = 0;
  std::size_t starts = 256;
  double q = default_q();
  double residual_tol = 1e-9;
  double dedup_tol = 1e-7;
  SolverMethod method = SolverMethod::Auto;
};

struct CriticalPoint {
  CVec w;
  CVec h;
  CVec teleman;
  double residual = 0;
  double residual_quad = 0;
  int multiplicity = 1;
};

struct SolveReport {
  std::vector<CriticalPoint> points;
  std::string method;
  bool complete = true;
  std::size_t free_parameters = 0;
  std::size_t converged = 0;
  std::size_t escaped = 0;
  std::size_t failed = 0;
  std::size_t iterations = 0;
};

namespace detail {

/// Integer basis B of the admissible h-subspace (r x s, as columns).
inline std::vector<IntVector> constraint_basis(const Constraint& c, const RootDatum* datum, std::size_t r) {
  if (c.kind == ConstraintKind::Critical) return {};
  if (!datum) throw Error("reflection-fixed constraint needs a root datum");
  datum->check_index(c.root);
  if (datum->rank() != r) throw Error("root datum rank does not match the action matrix");
  return integer_kernel(IntMatrix::from_rows({datum->coroot(c.root)}, r));
}

/// The critical system in unknowns (w_1..w_n, t_1..t_s), h = B t.
inline std::vector<LaurentPoly> critical_system(const LaurentPoly& f, const MonomialMap& m,
                                                const std::vector<IntVector>& basis) {
  std::size_t n = m.source_dim(), s = basis.size();
  Ring ring;
  for (auto& x : coordinate_names("w", n)) {
    ring.names.push_back(x);
    ring.laurent.push_back(true);
  }
  for (auto& x : coordinate_names("t", s)) {
    ring.names.push_back(x);
    ring.laurent.push_back(false);
  }
  RingPtr rp = make_ring(std::move(ring));
  LaurentPoly fe = embed(f, rp);
  std::vector<LaurentPoly> out;
  for (std::size_t i = 0; i < n; ++i) {
    LaurentPoly g = log_derivative(fe, i);
    for (std::size_t j = 0; j < s; ++j) {
      long coeff = 0;
      for (std::size_t k = 0; k < m.target_dim(); ++k) coeff += m.matrix(k, i) * basis[j][k];
      if (coeff != 0) g -= LaurentPoly::variable(rp, n + j).scaled(NovCoeff(static_cast<int>(coeff)));
    }
    out.push_back(std::move(g));
  }
  return out;
}

/// Roots of a univariate Laurent polynomial via the companion matrix.
inline CVec companion_roots(const LaurentPoly& g, double q) {
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [e, c] : g.terms()) {
    if (first) lo = hi = e[0], first = false;
    lo = std::min(lo, e[0]);
    hi = std::max(hi, e[0]);
  }
  if (first || hi == lo) return {};
  const int d = hi - lo;
  std::vector<std::complex<double>> c(static_cast<std::size_t>(d) + 1, 0.0);
  for (const auto& [e, k] : g.terms()) c[static_cast<std::size_t>(e[0] - lo)] = k.evaluate(q);
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(d)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  CVec roots;
  for (int i = 0; i < d; ++i) roots.push_back(es.eigenvalues()(i));
  return roots;
}

}  // namespace detail

/// Solutions of theta_i f(w) = sum_k M_ki h_k with h constrained. Univariate
/// square systems use the companion matrix; others multi-start Gauss-Newton.
inline SolveReport solve_critical(const LaurentPoly& f, const MonomialMap& m, const Constraint& c,
                                  const RootDatum* datum = nullptr, const SolveOptions& opt = {}) {
  std::size_t n = m.source_dim(), r = m.target_dim();
  if (f.ring() != *base_ring(n)) throw Error("solve_critical: superpotential must live in " + std::to_string(n) + " base variables");
  auto basis = detail::constraint_basis(c, datum, r);
  auto sys = detail::critical_system(f, m, basis);
  const std::size_t s = basis.size();
  std::vector<NumPoly> num;
  for (const auto& g : sys) num.push_back(compile(g, opt.q));
  std::vector<bool> torus(n + s, false);
  std::fill(torus.begin(), torus.begin() + static_cast<long>(n), true);
  const QuadReal log_q = opt.q == default_q() ? QuadReal(-1) : QuadReal(std::log(opt.q));

  SolveReport rep;
  rep.free_parameters = s;
  std::vector<std::pair<CVec, int>> found;
  auto absorb = [&](const CVec& x, int mult) {
    for (auto& [y, k] : found)
      if (distance(x, y) < opt.dedup_tol) {
        k = std::max(k, mult);
        return;
      }
    found.emplace_back(x, mult);
  };

  bool univariate = n == 1 && s == 0;
  bool companion = opt.method == SolverMethod::Companion || (opt.method == SolverMethod::Auto && univariate);
  if (companion && !univariate) throw Error("companion-matrix solver needs a univariate system");
  if (companion) {
    rep.method = "companion-matrix";
    CVec roots = detail::companion_roots(sys[0], opt.q);
    for (const auto& z : roots) {
      if (std::abs(z) == 0.0) continue;
      auto res = gauss_newton(num, {z}, torus, {5, opt.residual_tol, 1e12});
      rep.iterations += res.iterations;
      if (res.status != NewtonStatus::Converged) {
        ++rep.failed;
        continue;
      }
      ++rep.converged;
      int mult = 0;
      for (const auto& y : roots)
        if (std::abs(y - z) < 1e-4) ++mult;
      absorb(res.x, mult);
    }
  } else {
    rep.method = s == 0 ? "newton-multistart" : "gauss-newton-sampling";
    std::mt19937_64 rng(opt.seed);
    for (std::size_t k = 0; k < opt.starts; ++k) {
      auto res = gauss_newton(num, random_start(torus, rng), torus, {100, opt.residual_tol, 1e6});
      rep.iterations += res.iterations;
      if (res.status == NewtonStatus::Escaped) {
        ++rep.escaped;
        continue;
      }
      if (res.status == NewtonStatus::Failed) {
        ++rep.failed;
        continue;
      }
      ++rep.converged;
      std::size_t rk = numeric_rank(jacobian(num, res.x));
      absorb(res.x, static_cast<int>(1 + n - std::min(rk, n)));
    }
    rep.complete = rep.failed == 0;
  }

  std::vector<CVec> xs;
  for (const auto& [x, k] : found) xs.push_back(x);
  sort_points(xs);
  for (const auto& x : xs) {
    CriticalPoint p;
    p.w.assign(x.begin(), x.begin() + static_cast<long>(n));
    p.h.assign(r, 0.0);
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t k = 0; k < r; ++k) p.h[k] += static_cast<double>(basis[j][k]) * x[n + j];
    p.teleman = m.apply(p.w);
    p.residual = residual(num, x);
    p.residual_quad = quad_residual(sys, x, log_q);
    for (const auto& [y, k] : found)
      if (y == x) p.multiplicity = k;
    rep.points.push_back(std::move(p));
  }
  return rep;
}

struct KernelVerdict {
  std::complex<double> value;  // z^alpha
  double log_modulus = 0;       // moment part
  double phase = 0;             // holonomy part
  bool pass = false;
};

inline std::complex<double> character_value(const IntVector& lambda, const CVec& z) {
  std::complex<double> v = 1.0;
  for (std::size_t k = 0; k < lambda.size(); ++k)
    if (lambda[k] != 0) v *= std::pow(z[k], static_cast<int>(lambda[k]));
  return v;
}

/// |z^alpha - 1| < tol at each Teleman value.
inline std::vector<KernelVerdict> check_kernel(const std::vector<CriticalPoint>& pts, const RootDatum& d, std::size_t root,
                                               double tol = 1e-8) {
  d.check_index(root);
  std::vector<KernelVerdict> out;
  for (const auto& p : pts) {
    if (p.teleman.size() != d.rank()) throw Error("Teleman value dimension does not match the datum rank");
    KernelVerdict v;
    v.value = character_value(d.root(root), p.teleman);
    v.log_modulus = std::log(std::abs(v.value));
    v.phase = std::arg(v.value);
    v.pass = std::abs(v.value - 1.0) < tol;
    out.push_back(v);
  }
  return out;
}

struct MorseVerdict {
  std::size_t fiber_dim = 0;
  std::complex<double> fiber_det = 1.0;
  std::vector<std::vector<std::complex<double>>> hessian;  // theta_i theta_j f
  std::complex<double> hessian_det = 1.0;
  std::optional<std::vector<std::vector<std::string>>> hessian_exact;
  std::optional<std::string> hessian_det_exact;
  std::size_t jacobian_rank = 0;
  std::size_t jacobian_expected = 0;
  bool morse = false;
  bool nondegenerate = false;
  bool smooth = false;
};

namespace detail {

template <class T>
T determinant(const std::vector<std::vector<T>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return T(1);
  if (n == 1) return a[0][0];
  T s(0);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    T term = a[0][c] * determinant(minor);
    if (c % 2) s = s - term;
    else s = s + term;
  }
  return s;
}

}  // namespace detail

/// Fiber log-Hessian on ker M, full log-Hessian, and the Jacobian rank of the
/// generators F_i in (w, h). Exact entries when the point is Gaussian-rational.
inline std::vector<MorseVerdict> morse_check(const LaurentPoly& f, const MonomialMap& m,
                                             const std::vector<CriticalPoint>& pts, double q = default_q(),
                                             double tol = 1e-8) {
  std::size_t n = m.source_dim();
  std::vector<std::vector<LaurentPoly>> hess(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hess[i].push_back(log_derivative(log_derivative(f, i), j));
  auto kernel = integer_kernel(m.matrix);
  PolyIdeal<NovCoeff> lag = lagrangian_ideal(f, m);
  std::vector<NumPoly> lag_num;
  for (const auto& g : lag.generators) lag_num.push_back(compile(g, q));
  std::vector<LaurentPoly> grad;
  for (std::size_t i = 0; i < n; ++i) grad.push_back(log_derivative(f, i));

  std::vector<MorseVerdict> out;
  for (const auto& p : pts) {
    MorseVerdict v;
    v.hessian.assign(n, std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.hessian[i][j] = evaluate(hess[i][j], p.w, q);
    v.hessian_det = detail::determinant(v.hessian);
    v.fiber_dim = kernel.size();
    std::vector<std::vector<std::complex<double>>> fh(kernel.size(), std::vector<std::complex<double>>(kernel.size(), 0.0));
    for (std::size_t a = 0; a < kernel.size(); ++a)
      for (std::size_t b = 0; b < kernel.size(); ++b)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            fh[a][b] += static_cast<double>(kernel[a][i] * kernel[b][j]) * v.hessian[i][j];
    v.fiber_det = detail::determinant(fh);
    v.morse = std::abs(v.fiber_det) > tol;
    v.nondegenerate = std::abs(v.hessian_det) > tol;

    CVec x = p.w;
    x.insert(x.end(), p.h.begin(), p.h.end());
    v.jacobian_rank = numeric_rank(jacobian(lag_num, x));
    v.jacobian_expected = n;
    v.smooth = v.jacobian_rank == n;

    if (auto exact = snap_point(p.w)) {
      bool vanishes = std::all_of(p.h.begin(), p.h.end(), [](auto c) { return c == std::complex<double>(0.0); });
      for (const auto& g : grad)
        if (vanishes && !evaluate_exact(g, *exact).zero()) vanishes = false;
      if (vanishes) {
        RingPtr cr = make_ring(Ring{});
        std::vector<std::vector<NovCoeff>> he(n);
        std::vector<std::vector<std::string>> shown(n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            he[i].push_back(evaluate_exact(hess[i][j], *exact));
            shown[i].push_back(format(LaurentPoly::constant(cr, he[i].back())));
          }
        v.hessian_exact = shown;
        v.hessian_det_exact = format(LaurentPoly::constant(cr, detail::determinant(he)));
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace bfmlift
