#pragma once

// End-to-end run of a job: mirror data, lift certificates, numerical
// verification, and the verdict that decides the exit code.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "bfmlift/bfm.hpp"
#include "bfmlift/job.hpp"
#include "bfmlift/mirror.hpp"
#include "bfmlift/report.hpp"
#include "bfmlift/verify.hpp"

namespace bfmlift {

enum ExitCode : int { kExitPass = 0, kExitInputError = 1, kExitFailed = 2, kExitInconclusive = 3 };

namespace detail {

inline std::vector<std::string> formatted(const PolyIdeal<NovCoeff>& I) {
  std::vector<std::string> out;
  for (const auto& g : I.generators) out.push_back(format(g));
  return out;
}

template <class K>
std::vector<std::string> formatted(const PolyIdeal<K>& I, const CoeffContext& ctx) {
  std::vector<std::string> out;
  for (const auto& g : I.generators) out.push_back(format(g, ctx));
  return out;
}

inline std::string root_label(const IntVector& a) { return "root " + to_string(a); }

struct Algebra {
  const JobSpec& job;
  const RootDatum& datum;
  const PolyIdeal<NovCoeff>& parametrized;
  std::optional<PolyIdeal<NovCoeff>> explicit_image;
  FieldKind kind;
  CoeffContext ctx;
  Report& report;

  Budget budget() const { return Budget{job.options.budget}; }

  template <class K>
  void operator()(K) {
    const std::size_t r = datum.rank();
    std::optional<PolyIdeal<K>> image;
    MirrorSection* mirror = report.mirror ? &*report.mirror : nullptr;
    if (explicit_image) {
      image = to_field<K>(*explicit_image, ctx);
    } else {
      try {
        image = image_ideal(to_field<K>(parametrized, ctx), r, budget(), &report.timing.groebner_steps);
      } catch (const BudgetExceeded& e) {
        if (mirror) mirror->image_reason = std::string("elimination: ") + e.what();
      }
    }
    if (mirror) {
      if (image) mirror->image = formatted(*image, ctx);
      WeylSection& w = mirror->weyl_invariance;
      if (!image) {
        w.status = "INCONCLUSIVE";
        w.reason = "image ideal unavailable";
      } else {
        try {
          auto inv = weyl_invariance(*image, datum, ctx, budget(), &report.timing.groebner_steps);
          w.status = inv.invariant ? "INVARIANT" : "NOT_INVARIANT";
          w.vacuous = inv.vacuous;
          w.witness = inv.witness;
          w.reason = inv.vacuous ? "trivial Weyl group" : inv.invariant ? "simple reflections preserve the ideal" : "";
        } catch (const BudgetExceeded& e) {
          w.status = "INCONCLUSIVE";
          w.reason = e.what();
        }
      }
    }
    if (!job.wants("lift")) return;

    LiftSection lift;
    PolyIdeal<K> target = explicit_image ? *image : to_field<K>(parametrized, ctx);
    lift.ideal_source = explicit_image ? "explicit" : "parametrized";
    LiftOptions opt;
    opt.budget = budget();
    opt.assume_reduced = job.options.assume_reduced;
    opt.seed = job.options.seed;
    opt.starts = job.options.sample_starts;
    opt.q = job.options.q;
    LiftReport rep = lift_check(target, datum, ctx, opt);
    report.timing.groebner_steps += rep.steps;
    lift.ring = rep.ring;
    lift.ideal = rep.ideal;
    lift.basis = rep.basis;
    lift.certificates = rep.certificates;
    lift.status = "LIFTED";
    for (const auto& c : lift.certificates) {
      if (c.status == LiftStatus::Obstructed) lift.status = "OBSTRUCTED";
      else if (c.status == LiftStatus::Inconclusive && lift.status == "LIFTED") lift.status = "INCONCLUSIVE";
    }
    if (lift.certificates.empty()) lift.status = "LIFTED";

    auto pres = blowup_presentation(datum);
    lift.blowup.ring = pres.ring->names;
    lift.blowup.roots = pres.roots;
    lift.blowup.symbols = pres.symbols;
    for (const auto& rel : pres.relations) lift.blowup.relations.push_back(format(rel));
    lift.blowup.negative_rules = pres.negative_rules;
    lift.blowup.algebra = pres.algebra;

    try {
      lift.codim2 = codim2_check(target, datum, budget(), &report.timing.groebner_steps);
    } catch (const BudgetExceeded& e) {
      lift.codim2_reason = e.what();
    }
    auto simple = datum.simple_roots();
    for (std::size_t a = 0; a < simple.size(); ++a)
      for (std::size_t b = a + 1; b < simple.size(); ++b)
        lift.poisson.push_back(poisson_nondegeneracy(datum, simple[a], simple[b]));
    report.lift = std::move(lift);
  }
};

inline void run_verify(const JobSpec& job, const RootDatum& datum, const LaurentPoly& f, const MonomialMap& m,
                       Report& report) {
  VerifySection v;
  v.precision = "binary64 solve; residuals re-evaluated in binary128";
  v.seed = job.options.seed;
  v.prediction_applies = job.hypotheses.minimal_maslov_at_least_2 && job.hypotheses.cohomology_generated_in_degree_1;
  SolveOptions so;
  so.seed = job.options.seed;
  so.starts = job.options.starts;
  so.q = job.options.q;
  so.residual_tol = job.options.residual_tol;
  so.dedup_tol = job.options.dedup_tol;
  const double tol = job.options.identity_tol;

  auto record = [&](const SolveReport& rep, SolveSection& s) {
    s.method = rep.method;
    s.complete = rep.complete;
    s.free_parameters = rep.free_parameters;
    s.converged = rep.converged;
    s.escaped = rep.escaped;
    s.failed = rep.failed;
    s.points = rep.points;
    if (rep.method != "companion-matrix") report.timing.newton_starts += rep.converged + rep.escaped + rep.failed;
    report.timing.newton_iterations += rep.iterations;
  };

  SolveSection crit;
  crit.constraint = "critical";
  SolveReport critical = solve_critical(f, m, {ConstraintKind::Critical, 0}, &datum, so);
  record(critical, crit);
  for (std::size_t idx : datum.simple_roots()) {
    KernelCheck k{datum.root(idx), check_kernel(critical.points, datum, idx, tol), true};
    for (const auto& x : k.verdicts) k.pass = k.pass && x.pass;
    crit.kernel.push_back(std::move(k));
  }
  std::vector<bool> center;
  for (const auto& p : critical.points) center.push_back(in_center(datum, p.teleman, tol));
  crit.center = center;
  v.solves.push_back(std::move(crit));

  for (std::size_t idx : datum.positive_roots()) {
    Constraint c{ConstraintKind::ReflectionFixed, idx};
    if (detail::constraint_basis(c, &datum, datum.rank()).empty()) continue;  // same system as df = 0
    SolveSection s;
    s.constraint = "reflection-fixed";
    s.root = datum.root(idx);
    SolveOptions sample = so;
    sample.starts = job.options.sample_starts;
    SolveReport rep = solve_critical(f, m, c, &datum, sample);
    record(rep, s);
    KernelCheck k{datum.root(idx), check_kernel(rep.points, datum, idx, tol), true};
    for (const auto& x : k.verdicts) k.pass = k.pass && x.pass;
    s.kernel.push_back(std::move(k));
    v.solves.push_back(std::move(s));
  }
  // rank-one kernel checks ride on the df = 0 solve; make the root explicit
  if (datum.rank() == 1 && !datum.positive_roots().empty()) v.solves[0].root = datum.root(datum.positive_roots()[0]);

  v.morse = morse_check(f, m, critical.points, job.options.q, tol);
  bool smooth = !v.morse.empty();
  for (const auto& mv : v.morse) smooth = smooth && mv.morse && mv.smooth;
  v.normality = smooth ? "SMOOTH" : "UNVERIFIED";
  report.verify = std::move(v);
}

inline void summarize(Report& r) {
  Summary& s = r.summary;
  s.failures.clear();
  s.inconclusive.clear();
  if (r.mirror) {
    const auto& w = r.mirror->weyl_invariance;
    if (w.status == "NOT_INVARIANT") s.failures.push_back("image ideal is not Weyl invariant");
    if (w.status == "INCONCLUSIVE") s.inconclusive.push_back("Weyl invariance: " + w.reason);
  }
  if (r.lift) {
    for (const auto& c : r.lift->certificates) {
      if (c.status == LiftStatus::Obstructed) s.failures.push_back(root_label(c.root) + ": OBSTRUCTED");
      if (c.status == LiftStatus::Inconclusive) s.inconclusive.push_back(root_label(c.root) + ": " + c.reason);
    }
    for (const auto& e : r.lift->codim2)
      if (!e.pass) s.failures.push_back("codim-2 check fails for " + to_string(e.root_a) + ", " + to_string(e.root_b));
    if (!r.lift->codim2_reason.empty()) s.inconclusive.push_back("codim-2 check: " + r.lift->codim2_reason);
    for (const auto& p : r.lift->poisson)
      if (!p.nondegenerate) s.failures.push_back("degenerate Poisson pairing for " + to_string(p.root_a) + ", " + to_string(p.root_b));
  }
  if (r.verify) {
    for (const auto& sol : r.verify->solves) {
      if (!sol.complete) s.inconclusive.push_back(sol.constraint + " solve incomplete");
      if (!r.verify->prediction_applies) continue;
      for (const auto& k : sol.kernel)
        if (!k.pass) s.failures.push_back("Teleman value outside ker " + to_string(k.root) + " (" + sol.constraint + ")");
    }
    for (std::size_t i = 0; i < r.verify->morse.size(); ++i) {
      const auto& mv = r.verify->morse[i];
      if (!mv.morse) s.failures.push_back("critical point " + std::to_string(i) + " is not Morse along the fibre");
      if (!mv.smooth) s.failures.push_back("critical point " + std::to_string(i) + " has a rank-deficient Jacobian");
    }
  }
  bool obstructed = r.lift && r.lift->status == "OBSTRUCTED";
  if (!s.failures.empty()) {
    s.verdict = obstructed ? "OBSTRUCTED" : "FAIL";
    s.exit_code = kExitFailed;
  } else if (!s.inconclusive.empty()) {
    s.verdict = "INCONCLUSIVE";
    s.exit_code = kExitInconclusive;
  } else {
    s.verdict = "PASS";
    s.exit_code = kExitPass;
  }
}

}  // namespace detail

/// Runs every requested stage. Deterministic for a fixed job (seed included).
inline Report run(const JobSpec& job) {
  Report report;
  report.job = job;
  RootDatum datum = job.datum();
  ToricInput toric = job.toric_input();
  validate(toric);
  if (toric.rank() != datum.rank())
    throw Error("toric.action has " + std::to_string(toric.rank()) + " rows but group.rank is " +
                std::to_string(datum.rank()));
  NovikovMode mode = job.novikov();
  LaurentPoly f = hori_vafa(toric, mode);
  MonomialMap m = teleman_map(toric);

  if (job.wants("mirror") || job.wants("lift")) {
    auto lag = lagrangian_ideal(f, m);
    auto param = parametrized_ideal(f, m);
    std::optional<PolyIdeal<NovCoeff>> explicit_image;
    if (job.image) {
      RingPtr ring = cotangent_ring(datum.rank());
      explicit_image = PolyIdeal<NovCoeff>{ring, {}};
      for (const auto& g : *job.image) explicit_image->generators.push_back(parse_polynomial(g, ring));
    }
    std::vector<LaurentPoly> all = param.generators;
    if (explicit_image) all.insert(all.end(), explicit_image->generators.begin(), explicit_image->generators.end());
    auto [kind, ctx] = choose_field(all, mode);
    if (job.wants("mirror")) {
      MirrorSection ms;
      ms.field = to_string(kind);
      ms.q_denominator = ctx.denominator;
      ms.rings.superpotential = f.ring().names;
      ms.rings.lagrangian = lag.ring->names;
      ms.rings.parametrized = param.ring->names;
      ms.rings.image = cotangent_ring(datum.rank())->names;
      ms.superpotential = format(f);
      for (std::size_t i = 0; i < m.matrix.rows(); ++i) ms.teleman.push_back(m.matrix.row(i));
      ms.lagrangian = detail::formatted(lag);
      ms.parametrized = detail::formatted(param);
      for (const auto& h : fiber_solution(f, m)) ms.fiber_solution.push_back(format(h));
      ms.image_source = explicit_image ? "explicit" : "elimination";
      report.mirror = std::move(ms);
    }
    with_field(kind, detail::Algebra{job, datum, param, explicit_image, kind, ctx, report});
  }
  if (job.wants("verify")) detail::run_verify(job, datum, f, m, report);
  detail::summarize(report);
  return report;
}

/// Critical values on the dual torus: log-modulus against phase, one panel
/// per coordinate.
inline std::string critical_value_svg(const Report& r) {
  std::ostringstream os;
  const double w = 360, h = 240, pad = 40;
  std::vector<CVec> values;
  if (r.verify)
    for (const auto& s : r.verify->solves)
      if (s.constraint == "critical")
        for (const auto& p : s.points) values.push_back(p.teleman);
  std::size_t panels = values.empty() ? 1 : values[0].size();
  double lo = -1, hi = 1;
  for (const auto& z : values)
    for (const auto& c : z) {
      double x = std::log(std::abs(c));
      lo = std::min(lo, x), hi = std::max(hi, x);
    }
  char buf[160];
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * panels << "\" height=\"" << h << "\">\n";
  for (std::size_t k = 0; k < panels; ++k) {
    double x0 = k * w;
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" stroke=\"black\"/>\n",
                  x0 + pad, pad / 2, w - 1.5 * pad, h - 1.5 * pad);
    os << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\">z%zu: log|z| (%.3g..%.3g) vs arg z</text>\n", x0 + pad,
                  h - 6, k + 1, lo, hi);
    os << buf;
    for (const auto& z : values) {
      double px = x0 + pad + (std::log(std::abs(z[k])) - lo) / (hi - lo) * (w - 1.5 * pad);
      double py = pad / 2 + (M_PI - std::arg(z[k])) / (2 * M_PI) * (h - 1.5 * pad);
      std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"steelblue\"/>\n", px, py);
      os << buf;
    }
  }
  os << "</svg>\n";
  return os.str();
}

/// Short plain-text digest of a report.
inline std::string human_summary(const Report& r) {
  std::ostringstream os;
  os << r.tool << "  group " << r.job.group.name << "  verdict " << r.summary.verdict << " (exit "
     << r.summary.exit_code << ")\n";
  if (r.mirror) {
    os << "  superpotential  " << r.mirror->superpotential << "\n";
    if (r.mirror->image)
      for (const auto& g : *r.mirror->image) os << "  image           " << g << "\n";
    os << "  weyl            " << r.mirror->weyl_invariance.status << "\n";
  }
  if (r.lift)
    for (const auto& c : r.lift->certificates) {
      os << "  " << to_string(c.root) << "  " << to_string(c.status);
      if (c.cofactor) os << "  cofactor " << *c.cofactor << " for (" << c.target << ")/(" << c.divisor << ")";
      if (c.witness && c.witness->exact_point) {
        os << "  witness (";
        for (std::size_t i = 0; i < c.witness->exact_point->size(); ++i) os << (i ? ", " : "") << (*c.witness->exact_point)[i];
        os << ") value " << *c.witness->exact_value;
      } else if (c.witness) {
        os << "  witness (";
        for (std::size_t i = 0; i < c.witness->point.size(); ++i) {
          const auto& z = c.witness->point[i];
          os << (i ? ", " : "") << z.real();
          if (z.imag() != 0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
        }
        os << ") value " << c.witness->value;
      }
      os << "\n";
    }
  if (r.verify)
    for (const auto& s : r.verify->solves) {
      os << "  " << s.constraint;
      if (s.root) os << " " << to_string(*s.root);
      os << ": " << s.points.size() << " point(s) via " << s.method << (s.complete ? "" : " (incomplete)");
      for (const auto& k : s.kernel) os << "  ker " << to_string(k.root) << (k.pass ? " pass" : " FAIL");
      os << "\n";
    }
  for (const auto& f : r.summary.failures) os << "  failure: " << f << "\n";
  for (const auto& f : r.summary.inconclusive) os << "  inconclusive: " << f << "\n";
  return os.str();
}

}  // namespace bfmlift
