#pragma once

// Report document: typed sections and their ordered JSON form. Every type
// lists its fields once in a describe() overload; the same list drives
// writing and reading, so Report -> JSON -> Report is lossless.

#include <complex>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "bfmlift/bfm.hpp"
#include "bfmlift/job.hpp"
#include "bfmlift/verify.hpp"

namespace nlohmann {

template <>
struct adl_serializer<std::complex<double>> {
  template <class J>
  static void to_json(J& j, const std::complex<double>& z) {
    j = J::array({z.real(), z.imag()});
  }
  template <class J>
  static void from_json(const J& j, std::complex<double>& z) {
    z = {j.at(0).template get<double>(), j.at(1).template get<double>()};
  }
};

}  // namespace nlohmann

namespace bfmlift {

inline constexpr const char* kToolVersion = "bfmlift 0.1.0";
inline constexpr int kReportVersion = 1;

NLOHMANN_JSON_SERIALIZE_ENUM(LiftStatus, {{LiftStatus::Lifted, "LIFTED"},
                                          {LiftStatus::Obstructed, "OBSTRUCTED"},
                                          {LiftStatus::Inconclusive, "INCONCLUSIVE"}})

struct WeylSection {
  std::string status;  // INVARIANT | NOT_INVARIANT | INCONCLUSIVE
  bool vacuous = false;
  std::optional<WeylWitness> witness;
  std::string reason;
};

struct MirrorRings {
  std::vector<std::string> superpotential;
  std::vector<std::string> lagrangian;
  std::vector<std::string> parametrized;
  std::vector<std::string> image;
};

struct MirrorSection {
  std::string field;
  long q_denominator = 1;
  MirrorRings rings;
  std::string superpotential;
  std::vector<IntVector> teleman;
  std::vector<std::string> lagrangian;
  std::vector<std::string> parametrized;
  std::vector<std::string> fiber_solution;
  std::string image_source;  // elimination | explicit
  std::optional<std::vector<std::string>> image;
  std::string image_reason;
  WeylSection weyl_invariance;
};

struct BlowupSection {
  std::vector<std::string> ring;
  std::vector<IntVector> roots;
  std::vector<std::string> symbols;
  std::vector<std::string> relations;
  std::vector<NegativeRootRule> negative_rules;
  std::string algebra;
};

struct LiftSection {
  std::string status;
  std::string ideal_source;  // parametrized | explicit
  std::vector<std::string> ring;
  std::vector<std::string> ideal;
  std::vector<std::string> basis;
  std::vector<LiftCertificate> certificates;
  BlowupSection blowup;
  std::vector<Codim2Entry> codim2;
  std::string codim2_reason;
  std::vector<PoissonReport> poisson;
};

struct KernelCheck {
  IntVector root;
  std::vector<KernelVerdict> verdicts;
  bool pass = true;
};

struct SolveSection {
  std::string constraint;  // critical | reflection-fixed
  std::optional<IntVector> root;
  std::string method;
  bool complete = true;
  std::size_t free_parameters = 0;
  std::size_t converged = 0;
  std::size_t escaped = 0;
  std::size_t failed = 0;
  std::vector<CriticalPoint> points;
  std::vector<KernelCheck> kernel;
  std::optional<std::vector<bool>> center;
};

struct VerifySection {
  std::string precision;
  std::uint64_t seed = 0;
  bool prediction_applies = true;
  std::vector<SolveSection> solves;
  std::vector<MorseVerdict> morse;
  std::string normality;  // SMOOTH | UNVERIFIED
};

struct WorkCounts {
  std::size_t groebner_steps = 0;
  std::size_t newton_starts = 0;
  std::size_t newton_iterations = 0;
};

struct Summary {
  std::string verdict;  // PASS | FAIL | OBSTRUCTED | INCONCLUSIVE
  int exit_code = 0;
  std::vector<std::string> failures;
  std::vector<std::string> inconclusive;
};

struct Report {
  std::string tool = kToolVersion;
  int report_version = kReportVersion;
  JobSpec job;
  std::optional<MirrorSection> mirror;
  std::optional<LiftSection> lift;
  std::optional<VerifySection> verify;
  WorkCounts timing;
  Summary summary;
};

// Field lists. S is T or const T; V is a reader or a writer.
#define BFMLIFT_DESCRIBE(Type)                                                 \
  template <class S, class V>                                                  \
  requires std::is_same_v<std::remove_const_t<S>, Type> void describe(S& s, V& v)

BFMLIFT_DESCRIBE(GroupSpec) {
  v("preset", s.preset), v("name", s.name), v("rank", s.rank), v("roots", s.roots), v("coroots", s.coroots);
}
BFMLIFT_DESCRIBE(ToricSpec) {
  v("n", s.n), v("rays", s.rays), v("areas", s.areas), v("holonomy", s.holonomy), v("action", s.action);
}
BFMLIFT_DESCRIBE(JobOptions) {
  v("novikov", s.novikov), v("seed", s.seed), v("budget", s.budget), v("assume_reduced", s.assume_reduced);
  v("stages", s.stages), v("starts", s.starts), v("sample_starts", s.sample_starts);
  v("residual_tol", s.residual_tol), v("identity_tol", s.identity_tol), v("dedup_tol", s.dedup_tol), v("q", s.q);
}
BFMLIFT_DESCRIBE(Hypotheses) {
  v("minimal_maslov_at_least_2", s.minimal_maslov_at_least_2);
  v("cohomology_generated_in_degree_1", s.cohomology_generated_in_degree_1);
}
BFMLIFT_DESCRIBE(JobSpec) {
  v("version", s.version), v("description", s.description), v("group", s.group), v("toric", s.toric);
  v("image", s.image), v("options", s.options), v("hypotheses", s.hypotheses);
}
BFMLIFT_DESCRIBE(WeylWitness) {
  v("reflection_root", s.reflection_root), v("generator", s.generator), v("image", s.image);
  v("normal_form", s.normal_form);
}
BFMLIFT_DESCRIBE(WeylSection) {
  v("status", s.status), v("vacuous", s.vacuous), v("witness", s.witness), v("reason", s.reason);
}
BFMLIFT_DESCRIBE(MirrorRings) {
  v("superpotential", s.superpotential), v("lagrangian", s.lagrangian), v("parametrized", s.parametrized);
  v("image", s.image);
}
BFMLIFT_DESCRIBE(MirrorSection) {
  v("field", s.field), v("q_denominator", s.q_denominator), v("rings", s.rings);
  v("superpotential", s.superpotential), v("teleman", s.teleman), v("lagrangian", s.lagrangian);
  v("parametrized", s.parametrized), v("fiber_solution", s.fiber_solution), v("image_source", s.image_source);
  v("image", s.image), v("image_reason", s.image_reason), v("weyl_invariance", s.weyl_invariance);
}
BFMLIFT_DESCRIBE(NegativeRootRule) {
  v("root", s.root), v("symbol", s.symbol), v("rewrite", s.rewrite), v("verified", s.verified);
}
BFMLIFT_DESCRIBE(BlowupSection) {
  v("ring", s.ring), v("roots", s.roots), v("symbols", s.symbols), v("relations", s.relations);
  v("negative_rules", s.negative_rules), v("algebra", s.algebra);
}
BFMLIFT_DESCRIBE(SmoothnessSample) { v("point", s.point), v("jacobian_rank", s.jacobian_rank); }
BFMLIFT_DESCRIBE(SmoothnessReport) {
  v("mode", s.mode), v("dimension", s.dimension), v("codimension", s.codimension), v("samples", s.samples);
  v("full_rank", s.full_rank);
}
BFMLIFT_DESCRIBE(Witness) {
  v("point", s.point), v("value", s.value), v("exact_point", s.exact_point), v("exact_value", s.exact_value);
}
BFMLIFT_DESCRIBE(LiftCertificate) {
  v("root", s.root), v("coroot", s.coroot), v("status", s.status), v("divisor", s.divisor), v("target", s.target);
  v("contained", s.contained), v("in_radical", s.in_radical), v("cofactor", s.cofactor);
  v("generator_image", s.generator_image), v("reverified", s.reverified), v("witness", s.witness);
  v("smoothness", s.smoothness), v("reason", s.reason);
}
BFMLIFT_DESCRIBE(Codim2Entry) {
  v("root_a", s.root_a), v("root_b", s.root_b), v("dim_ideal", s.dim_ideal), v("dim_pair", s.dim_pair);
  v("pass", s.pass);
}
BFMLIFT_DESCRIBE(PoissonReport) {
  v("root_a", s.root_a), v("root_b", s.root_b), v("matrix", s.matrix), v("det", s.det);
  v("nondegenerate", s.nondegenerate);
}
BFMLIFT_DESCRIBE(LiftSection) {
  v("status", s.status), v("ideal_source", s.ideal_source), v("ring", s.ring), v("ideal", s.ideal);
  v("basis", s.basis), v("certificates", s.certificates), v("blowup", s.blowup), v("codim2", s.codim2);
  v("codim2_reason", s.codim2_reason), v("poisson", s.poisson);
}
BFMLIFT_DESCRIBE(CriticalPoint) {
  v("w", s.w), v("h", s.h), v("teleman", s.teleman), v("residual", s.residual);
  v("residual_quad", s.residual_quad), v("multiplicity", s.multiplicity);
}
BFMLIFT_DESCRIBE(KernelVerdict) {
  v("value", s.value), v("log_modulus", s.log_modulus), v("phase", s.phase), v("pass", s.pass);
}
BFMLIFT_DESCRIBE(KernelCheck) { v("root", s.root), v("verdicts", s.verdicts), v("pass", s.pass); }
BFMLIFT_DESCRIBE(SolveSection) {
  v("constraint", s.constraint), v("root", s.root), v("method", s.method), v("complete", s.complete);
  v("free_parameters", s.free_parameters), v("converged", s.converged), v("escaped", s.escaped);
  v("failed", s.failed), v("points", s.points), v("kernel", s.kernel), v("center", s.center);
}
BFMLIFT_DESCRIBE(MorseVerdict) {
  v("fiber_dim", s.fiber_dim), v("fiber_det", s.fiber_det), v("hessian", s.hessian);
  v("hessian_det", s.hessian_det), v("hessian_exact", s.hessian_exact), v("hessian_det_exact", s.hessian_det_exact);
  v("jacobian_rank", s.jacobian_rank), v("jacobian_expected", s.jacobian_expected), v("morse", s.morse);
  v("nondegenerate", s.nondegenerate), v("smooth", s.smooth);
}
BFMLIFT_DESCRIBE(VerifySection) {
  v("precision", s.precision), v("seed", s.seed), v("prediction_applies", s.prediction_applies);
  v("solves", s.solves), v("morse", s.morse), v("normality", s.normality);
}
BFMLIFT_DESCRIBE(WorkCounts) {
  v("groebner_steps", s.groebner_steps), v("newton_starts", s.newton_starts);
  v("newton_iterations", s.newton_iterations);
}
BFMLIFT_DESCRIBE(Summary) {
  v("verdict", s.verdict), v("exit_code", s.exit_code), v("failures", s.failures);
  v("inconclusive", s.inconclusive);
}
BFMLIFT_DESCRIBE(Report) {
  v("tool", s.tool), v("report_version", s.report_version), v("job", s.job), v("mirror", s.mirror);
  v("lift", s.lift), v("verify", s.verify), v("timing", s.timing), v("summary", s.summary);
}

#undef BFMLIFT_DESCRIBE

namespace detail {

struct JsonWriter {
  Json& j;
  template <class T>
  void operator()(const char* key, const T& value) {
    j[key] = value;
  }
  template <class T>
  void operator()(const char* key, const std::optional<T>& value) {
    if (value) j[key] = *value;
    else j[key] = nullptr;
  }
};

struct JsonReader {
  const Json& j;
  template <class T>
  void operator()(const char* key, T& value) {
    value = j.at(key).template get<T>();
  }
  template <class T>
  void operator()(const char* key, std::optional<T>& value) {
    const Json& x = j.at(key);
    if (x.is_null()) value.reset();
    else value = x.template get<T>();
  }
};

}  // namespace detail

template <class T>
concept Described = requires(T& t, detail::JsonWriter& w) { describe(t, w); };

template <Described T>
void to_json(Json& j, const T& value) {
  j = Json::object();
  detail::JsonWriter w{j};
  describe(value, w);
}

template <Described T>
void from_json(const Json& j, T& value) {
  detail::JsonReader r{j};
  describe(value, r);
}

inline std::string dump_report(const Report& r) { return Json(r).dump(2) + "\n"; }

inline Report load_report(const std::string& text) { return Json::parse(text).get<Report>(); }

}  // namespace bfmlift
