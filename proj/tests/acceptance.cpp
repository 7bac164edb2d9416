// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "bfmlift/pipeline.hpp"
#include "test_support.hpp"

using namespace bfmlift;
using bfmlift::testing::random_poly;
using QPoly = Polynomial<Rational>;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string note;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Report run_bundled(const std::string& name) { return run(parse_job(slurp(std::string(BFMLIFT_JOBS) + "/" + name))); }

RingPtr ring_of(const std::vector<std::string>& names) {
  Ring ring;
  for (const auto& n : names) {
    ring.names.push_back(n);
    ring.laurent.push_back(n[0] != 'h');
  }
  return make_ring(std::move(ring));
}

QPoly qpoly(const std::string& s, const RingPtr& r) { return to_field<Rational>(parse_polynomial(s, r), {}); }

PolyIdeal<Rational> ideal_of(const std::vector<std::string>& gens, const RingPtr& r) {
  PolyIdeal<Rational> I{r, {}};
  for (const auto& g : gens) I.generators.push_back(qpoly(g, r));
  return I;
}

bool same_ideal(const PolyIdeal<Rational>& a, const PolyIdeal<Rational>& b) {
  auto ga = groebner(a), gb = groebner(b);
  for (const auto& g : b.generators)
    if (!ga.contains(g)) return false;
  for (const auto& g : a.generators)
    if (!gb.contains(g)) return false;
  return true;
}

// Cofactor x of a certificate equals `expected` modulo the lift ideal.
bool cofactor_is(const Report& r, const std::string& expected) {
  const auto& c = r.lift->certificates.at(0);
  if (c.status != LiftStatus::Lifted || !c.cofactor) return false;
  RingPtr ring = ring_of(r.lift->ring);
  auto g = groebner(ideal_of(r.lift->ideal, ring));
  return g.normal_form(qpoly(*c.cofactor, ring)) == g.normal_form(qpoly(expected, ring));
}

bool certificate_reverifies(const Report& r) {
  RingPtr ring = ring_of(r.lift->ring);
  auto g = groebner(ideal_of(r.lift->ideal, ring), MonomialOrder::lex());
  for (const auto& c : r.lift->certificates) {
    if (c.status != LiftStatus::Lifted) continue;
    if (!g.normal_form(qpoly(*c.cofactor, ring) * qpoly(c.divisor, ring) - qpoly(c.target, ring)).is_zero()) return false;
  }
  return true;
}

Outcome example_one() {
  Outcome o;
  Report r = run_bundled("p1-pgl2.json");
  RingPtr img = ring_of(r.mirror->rings.image);
  o.expect(r.mirror->image && same_ideal(ideal_of(*r.mirror->image, img), ideal_of({"h - z + z^-1"}, img)),
           "image ideal is not (h - z + z^-1)");
  o.expect(r.mirror->weyl_invariance.status == "INVARIANT", "Weyl verdict " + r.mirror->weyl_invariance.status);
  o.expect(cofactor_is(r, "z"), "cofactor not congruent to z");
  o.note = "image (h - z + z^-1), INVARIANT, cofactor " + r.lift->certificates.at(0).cofactor.value_or("-");
  return o;
}

Outcome example_two() {
  Outcome o;
  Report r = run_bundled("p1-sl2.json");
  RingPtr par = ring_of(r.mirror->rings.parametrized);
  auto P = groebner(ideal_of(r.mirror->parametrized, par));
  o.expect(P.contains(qpoly("z - w^2", par)), "z = w^2 missing");
  o.expect(P.contains(qpoly("h - 1/2*w + 1/2*w^-1", par)), "h = (w - w^-1)/2 missing");
  RingPtr img = ring_of(r.mirror->rings.image);
  o.expect(r.mirror->image && same_ideal(ideal_of(*r.mirror->image, img), ideal_of({"z^2 - 2*z + 1 - 4*h^2*z"}, img)),
           "image relation is not (z - 1)^2 = 4 h^2 z");
  o.expect(cofactor_is(r, "2*w"), "cofactor not congruent to 2*w");
  o.note = "image " + r.mirror->image->at(0) + ", cofactor " + r.lift->certificates.at(0).cofactor.value_or("-");
  return o;
}

Outcome rank_one_kernel() {
  Outcome o;
  ToricInput t{1, {{1}, {-1}}, {Rational(0), Rational(0)}, {GaussRational(1), GaussRational(1)}, IntMatrix::identity(1)};
  LaurentPoly f = hori_vafa(t);
  SolveOptions opt;
  opt.method = SolverMethod::Companion;
  SolveReport rep = solve_critical(f, teleman_map(t), {}, nullptr, opt);
  o.expect(rep.points.size() == 2, "expected 2 critical points");
  double worst = 0;
  bool plus = false, minus = false;
  for (const auto& p : rep.points) {
    worst = std::max(worst, p.residual);
    plus = plus || std::abs(p.w[0] - 1.0) < 1e-9;
    minus = minus || std::abs(p.w[0] + 1.0) < 1e-9;
  }
  o.expect(plus && minus, "critical points are not {1, -1}");
  o.expect(worst < 1e-9, "residual too large");
  for (const auto& v : check_kernel(rep.points, preset("PSU2"), 0, 1e-8)) o.expect(v.pass, "z^alpha != 1");
  std::ostringstream s;
  s << "critical points {1, -1}, max residual " << worst;
  o.note = s.str();
  return o;
}

Outcome projective_plane() {
  Outcome o;
  Report r = run_bundled("p2-psu3.json");
  const auto& crit = r.verify->solves.at(0);
  o.expect(crit.points.size() == 3, "expected 3 critical points");
  RootDatum d = preset(*r.job.group.preset);
  for (std::size_t a : d.simple_roots())
    for (const auto& v : check_kernel(crit.points, d, a, 1e-8)) o.expect(v.pass, "Teleman value outside ker(alpha)");
  // symmetric reduction: w1 = w2 = zeta with zeta^3 = 1
  for (const auto& p : crit.points) {
    o.expect(std::abs(p.w[0] - p.w[1]) < 1e-8, "critical point off the diagonal");
    o.expect(std::abs(std::pow(p.w[0], 3) - 1.0) < 1e-8, "zeta^3 != 1");
    o.expect(in_center(d, p.teleman, 1e-8), "Teleman value not central");
  }
  o.note = "3 critical points, Teleman values in the order-3 center (" + *r.job.group.preset + ")";
  return o;
}

Outcome poisson_a2() {
  Outcome o;
  RootDatum d = preset("SU3");
  auto s = d.simple_roots();
  PoissonReport p = poisson_nondegeneracy(d, s.at(0), s.at(1));
  o.expect(p.matrix == std::vector<std::vector<long>>{{2, -1}, {-1, 2}}, "bracket matrix differs");
  o.expect(p.det == 3 && p.nondegenerate, "det != 3");
  o.note = "[[2, -1], [-1, 2]], det " + std::to_string(p.det);
  return o;
}

Outcome obstruction() {
  Outcome o;
  Report r = run_bundled("shifted.json");
  const auto& c = r.lift->certificates.at(0);
  o.expect(c.status == LiftStatus::Obstructed, "not OBSTRUCTED");
  o.expect(c.witness && c.witness->exact_point == std::vector<std::string>{"2", "0"}, "witness is not (2, 0)");
  RingPtr ring = ring_of(r.lift->ring);
  double v = std::abs(evaluate(parse_polynomial(c.target, ring), {2.0, 0.0}));
  o.expect(v == 3.0 && c.witness && c.witness->exact_value == "3", "|z^2 - 1| at the witness is not 3");
  o.expect(r.summary.exit_code == 2, "report exit code " + std::to_string(r.summary.exit_code));
  int status = std::system((std::string(BFMLIFT_CLI) + " run " + BFMLIFT_JOBS + "/shifted.json >/dev/null 2>&1").c_str());
  o.expect(WIFEXITED(status) && WEXITSTATUS(status) == 2, "CLI exit code is not 2");
  o.note = "OBSTRUCTED, witness (2, 0), |z^2 - 1| = 3, exit 2";
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::mt19937 rng(2024);
  std::size_t checks = 0;

  std::uniform_int_distribution<long> coord(-50, 50), den(1, 9);
  RootDatum su3 = preset("SU3");
  for (int k = 0; k < 100; ++k) {
    std::vector<Rational> h{make_rational(coord(rng), den(rng)), make_rational(coord(rng), den(rng))};
    for (std::size_t i = 0; i < su3.size(); ++i, ++checks) o.expect(reflect(su3, i, reflect(su3, i, h)) == h, "s_a^2 != id");
  }

  RingPtr base = base_ring(3);
  MonomialMap m{IntMatrix::from_rows({{1, -2, 0}, {3, 1, 1}}, 3)};
  RingPtr cot = cotangent_ring(2);
  for (int k = 0; k < 100; ++k, checks += 2) {
    LaurentPoly p = random_poly(base, rng, 4, 3, true), q = random_poly(base, rng, 4, 3, true);
    std::size_t i = static_cast<std::size_t>(k % 3);
    o.expect(log_derivative(p * q, i) == log_derivative(p, i) * q + p * log_derivative(q, i), "Leibniz");
    LaurentPoly a = random_poly(cot, rng, 3, 2, true), b = random_poly(cot, rng, 3, 2);
    o.expect(pullback(m, a * b) == pullback(m, a) * pullback(m, b), "pullback homomorphism");
  }

  RingPtr wzh = moduli_ring(1, 1, true);
  PolyIdeal<Rational> ex2{wzh, {qpoly("z - w^2", wzh), qpoly("w - 2*h - w^-1", wzh)}};
  auto ga = groebner(ex2, MonomialOrder::grevlex());
  auto gb = groebner(ex2, MonomialOrder::lex());
  auto gc = groebner(ex2, MonomialOrder::elimination({"w"}));
  for (int k = 0; k < 20; ++k, ++checks) {
    QPoly p = random_poly<Rational>(wzh, rng, 3, 2);
    if (k % 2) p = p * ex2.generators[static_cast<std::size_t>(k / 2 % 2)];
    bool in = ga.contains(p);
    o.expect(in == gb.contains(p) && in == gc.contains(p), "membership depends on the order");
  }

  for (const char* job : {"p1-pgl2.json", "p1-sl2.json", "p2-psu3.json", "p2-formal.json", "p1xp1.json"}) {
    o.expect(certificate_reverifies(run_bundled(job)), std::string("certificate of ") + job);
    ++checks;
  }

  RootDatum u2 = preset("U2");
  for (int k = 0; k < 20; ++k, ++checks) {
    LaurentPoly p = random_poly(cot, rng, 3, 1), q = random_poly(cot, rng, 3, 1), s = random_poly(cot, rng, 3, 1);
    LaurentPoly jac = poisson(p, poisson(q, s, u2), u2) + poisson(q, poisson(s, p, u2), u2) + poisson(s, poisson(p, q, u2), u2);
    o.expect(jac.is_zero(), "Jacobi identity");
  }
  o.note = std::to_string(checks) + " property checks";
  return o;
}

Outcome morse() {
  Outcome o;
  ToricInput t{1, {{1}, {-1}}, {Rational(0), Rational(0)}, {GaussRational(1), GaussRational(1)}, IntMatrix::identity(1)};
  LaurentPoly f = hori_vafa(t);
  SolveReport rep = solve_critical(f, teleman_map(t), {});
  auto verdicts = morse_check(f, teleman_map(t), rep.points);
  o.expect(verdicts.size() == 2, "expected 2 verdicts");
  for (std::size_t k = 0; k < verdicts.size(); ++k) {
    const auto& v = verdicts[k];
    std::string want = rep.points[k].w[0].real() > 0 ? "2" : "-2";
    o.expect(v.hessian_det_exact == want, "Hessian at w = " + std::to_string(rep.points[k].w[0].real()));
    o.expect(v.morse, "not Morse");
    o.expect(v.jacobian_rank == v.jacobian_expected && v.smooth, "Jacobian rank deficient");
  }
  o.note = "Hessian +-2 at w = +-1, Morse, Jacobian full rank";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;
    std::function<Outcome()> check;
  };
  std::vector<Criterion> criteria = {
      {"Example 1 lift", 1.0, example_one},
      {"Example 2 lift", 1.0, example_two},
      {"rank 1 kernel prediction", 1.0, rank_one_kernel},
      {"P^2 center prediction", 5.0, projective_plane},
      {"A2 Poisson nondegeneracy", 0.1, poisson_a2},
      {"obstruction witness", 5.0, obstruction},
      {"property suites", 60.0, property_suites},
      {"Morse checks", 0.5, morse},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].check();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= criteria[i].limit) o.failures.push_back("runtime over " + std::to_string(criteria[i].limit) + " s");
    bool pass = o.failures.empty();
    all = all && pass;
    std::cout << "criterion " << i + 1 << ": " << (pass ? "PASS" : "FAIL") << "  " << criteria[i].name << "  ("
              << o.note << "; " << std::fixed << std::setprecision(3) << secs << " s)";
    for (const auto& f : o.failures) std::cout << "  [" << f << "]";
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
