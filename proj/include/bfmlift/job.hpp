#pragma once

// Job documents: strict parsing with path-named diagnostics, normalization
// of every default, and conversion to the library's input types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bfmlift/coefficients.hpp"
#include "bfmlift/mirror.hpp"
#include "bfmlift/rootdata.hpp"

namespace bfmlift {

using Json = nlohmann::ordered_json;

inline constexpr int kJobVersion = 1;

struct GroupSpec {
  std::optional<std::string> preset;
  std::string name;
  std::size_t rank = 0;
  std::vector<IntVector> roots;
  std::vector<IntVector> coroots;
};

struct ToricSpec {
  std::size_t n = 0;
  std::vector<IntVector> rays;
  std::vector<std::string> areas;
  std::vector<std::string> holonomy;
  std::vector<IntVector> action;
};

struct JobOptions {
  std::string novikov = "unit";
  std::uint64_t seed = 0;
  std::size_t budget = kDefaultBudget;
  bool assume_reduced = false;
  std::vector<std::string> stages = {"mirror", "lift", "verify"};
  std::size_t starts = 256;
  std::size_t sample_starts = 64;
  double residual_tol = 1e-9;
  double identity_tol = 1e-8;
  double dedup_tol = 1e-7;
  double q = default_q();
};

/// Floer-theoretic hypotheses of the kernel prediction; true for toric fibres.
struct Hypotheses {
  bool minimal_maslov_at_least_2 = true;
  bool cohomology_generated_in_degree_1 = true;
};

struct JobSpec {
  int version = kJobVersion;
  std::string description;
  GroupSpec group;
  ToricSpec toric;
  std::optional<std::vector<std::string>> image;
  JobOptions options;
  Hypotheses hypotheses;

  bool wants(const std::string& stage) const {
    return std::find(options.stages.begin(), options.stages.end(), stage) != options.stages.end();
  }
  RootDatum datum() const { return RootDatum(group.rank, group.roots, group.coroots, group.name); }
  NovikovMode novikov() const { return parse_novikov_mode(options.novikov); }

  ToricInput toric_input() const {
    ToricInput t;
    t.n = toric.n;
    t.rays = toric.rays;
    for (const auto& a : toric.areas) t.areas.push_back(parse_rational(a));
    for (const auto& h : toric.holonomy) t.holonomy.push_back(parse_scalar(h));
    t.action = IntMatrix::from_rows(toric.action, toric.n);
    return t;
  }

  static GaussRational parse_scalar(const std::string& text) {
    LaurentPoly p = parse_polynomial(text, base_ring(1));
    if (p.is_zero()) return GaussRational(0);
    if (!p.is_constant()) throw Error("'" + text + "' is not a constant");
    NovCoeff c = p.terms().begin()->second;
    if (!c.is_constant()) throw Error("'" + text + "' involves q");
    return c.constant_part();
  }
};

struct Diagnostic {
  std::string path;
  std::string message;
};

inline std::string to_string(const Diagnostic& d) { return d.path.empty() ? d.message : d.path + ": " + d.message; }

struct JobError : Error {
  explicit JobError(std::vector<Diagnostic> diags) : Error(join(diags)), diagnostics(std::move(diags)) {}
  std::vector<Diagnostic> diagnostics;

  static std::string join(const std::vector<Diagnostic>& ds) {
    std::string s;
    for (const auto& d : ds) s += (s.empty() ? "" : "\n") + to_string(d);
    return s;
  }
};

/// Budget used when the job omits one: BFMLIFT_BUDGET, else the library default.
inline std::size_t default_budget() {
  if (const char* env = std::getenv("BFMLIFT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

namespace detail {

inline std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

class JobReader {
 public:
  std::vector<Diagnostic> diags;

  void error(const std::string& path, const std::string& msg) { diags.push_back({path, msg}); }

  static std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
  static std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

  bool object(const Json& j, const std::string& path, const std::vector<std::string>& allowed) {
    if (!j.is_object()) {
      error(path, "expected an object");
      return false;
    }
    for (const auto& [key, value] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) != allowed.end()) continue;
      std::string best;
      std::size_t best_d = 3;
      for (const auto& a : allowed) {
        std::size_t d = edit_distance(key, a);
        if (d < best_d) best_d = d, best = a;
      }
      error(join(path, key), best.empty() ? "unknown key" : "unknown key, did you mean " + best + "?");
    }
    return true;
  }

  std::optional<long> integer(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) {
      error(path, "expected an integer");
      return std::nullopt;
    }
    return j.get<long>();
  }

  std::optional<std::size_t> count(const Json& j, const std::string& path, bool positive) {
    auto v = integer(j, path);
    if (!v) return std::nullopt;
    if (*v < (positive ? 1 : 0)) {
      error(path, positive ? "must be a positive integer" : "must be a non-negative integer");
      return std::nullopt;
    }
    return static_cast<std::size_t>(*v);
  }

  std::optional<double> real(const Json& j, const std::string& path) {
    if (!j.is_number()) {
      error(path, "expected a number");
      return std::nullopt;
    }
    double v = j.get<double>();
    if (!(v > 0) || !std::isfinite(v)) {
      error(path, "must be a positive finite number");
      return std::nullopt;
    }
    return v;
  }

  std::optional<IntVector> int_vector(const Json& j, const std::string& path) {
    if (!j.is_array()) {
      error(path, "expected an array of integers");
      return std::nullopt;
    }
    IntVector out;
    bool ok = true;
    for (std::size_t i = 0; i < j.size(); ++i) {
      auto v = integer(j[i], index(path, i));
      if (v) out.push_back(*v);
      else ok = false;
    }
    if (!ok) return std::nullopt;
    return out;
  }

  std::optional<std::vector<IntVector>> int_matrix(const Json& j, const std::string& path) {
    if (!j.is_array()) {
      error(path, "expected an array of integer arrays");
      return std::nullopt;
    }
    std::vector<IntVector> out;
    bool ok = true;
    for (std::size_t i = 0; i < j.size(); ++i) {
      auto v = int_vector(j[i], index(path, i));
      if (v) out.push_back(*v);
      else ok = false;
    }
    if (!ok) return std::nullopt;
    return out;
  }

  /// Integers, or strings in the polynomial grammar's scalar syntax.
  std::optional<std::string> scalar(const Json& j, const std::string& path, bool rational_only) {
    if (j.is_number_integer()) return std::to_string(j.get<long>());
    if (!j.is_string()) {
      error(path, "expected an integer or a string");
      return std::nullopt;
    }
    std::string s = j.get<std::string>();
    try {
      if (rational_only) return to_string(parse_rational(s));
      JobSpec::parse_scalar(s);
      return format(parse_polynomial(s, base_ring(1)));
    } catch (const std::exception& e) {
      error(path, std::string("invalid value '") + s + "': " + e.what());
      return std::nullopt;
    }
  }

  void group(const Json& j, GroupSpec& g) {
    const std::string path = "group";
    if (j.is_string()) {
      resolve_preset(j.get<std::string>(), g, path);
      return;
    }
    if (!object(j, path, {"preset", "name", "rank", "roots", "coroots"})) return;
    if (j.contains("preset")) {
      if (!j["preset"].is_string()) return error(join(path, "preset"), "expected a preset name");
      if (!resolve_preset(j["preset"].get<std::string>(), g, join(path, "preset"))) return;
      bool explicit_part = j.contains("rank") || j.contains("roots") || j.contains("coroots");
      if (!explicit_part) return;
      GroupSpec e;
      if (!explicit_datum(j, e, path)) return;
      if (e.rank != g.rank || e.roots != g.roots || e.coroots != g.coroots)
        error(path, "explicit root datum does not match preset " + *g.preset);
      return;
    }
    explicit_datum(j, g, path);
    if (j.contains("name")) {
      if (j["name"].is_string()) g.name = j["name"].get<std::string>();
      else error(join(path, "name"), "expected a string");
    }
  }

  bool resolve_preset(const std::string& name, GroupSpec& g, const std::string& path) {
    try {
      RootDatum d = preset(name);
      g.preset = name;
      g.name = d.name();
      g.rank = d.rank();
      g.roots = d.roots();
      g.coroots = d.coroots();
      return true;
    } catch (const Error& e) {
      std::string known;
      for (const auto& p : preset_names()) known += (known.empty() ? "" : ", ") + p;
      error(path, std::string(e.what()) + " (known: " + known + ", products AxB)");
      return false;
    }
  }

  bool explicit_datum(const Json& j, GroupSpec& g, const std::string& path) {
    bool ok = true;
    for (const char* key : {"rank", "roots", "coroots"})
      if (!j.contains(key)) error(join(path, key), "required"), ok = false;
    if (!ok) return false;
    auto rank = count(j["rank"], join(path, "rank"), true);
    auto roots = int_matrix(j["roots"], join(path, "roots"));
    auto coroots = int_matrix(j["coroots"], join(path, "coroots"));
    if (!rank || !roots || !coroots) return false;
    try {
      RootDatum d(*rank, *roots, *coroots);
    } catch (const Error& e) {
      error(path, e.what());
      return false;
    }
    g.rank = *rank;
    g.roots = *roots;
    g.coroots = *coroots;
    if (g.name.empty()) g.name = "custom";
    return true;
  }

  void toric(const Json& j, ToricSpec& t) {
    const std::string path = "toric";
    if (!object(j, path, {"n", "rays", "areas", "holonomy", "action"})) return;
    std::size_t before = diags.size();
    for (const char* key : {"n", "rays", "action"})
      if (!j.contains(key)) error(join(path, key), "required");
    if (diags.size() != before) return;
    auto n = count(j["n"], join(path, "n"), true);
    auto rays = int_matrix(j["rays"], join(path, "rays"));
    auto action = int_matrix(j["action"], join(path, "action"));
    if (!n || !rays || !action) return;
    t.n = *n;
    t.rays = *rays;
    t.action = *action;
    for (std::size_t i = 0; i < rays->size(); ++i)
      if ((*rays)[i].size() != *n)
        error(index(join(path, "rays"), i),
              "has length " + std::to_string((*rays)[i].size()) + " but toric.n is " + std::to_string(*n));
    for (std::size_t i = 0; i < action->size(); ++i)
      if ((*action)[i].size() != *n)
        error(index(join(path, "action"), i),
              "has length " + std::to_string((*action)[i].size()) + " but toric.n is " + std::to_string(*n));
    if (j.contains("areas")) {
      if (!j["areas"].is_array()) return error(join(path, "areas"), "expected an array");
      for (std::size_t i = 0; i < j["areas"].size(); ++i)
        if (auto s = scalar(j["areas"][i], index(join(path, "areas"), i), true)) t.areas.push_back(*s);
    } else {
      t.areas.assign(rays->size(), "0");
    }
    if (j.contains("holonomy")) {
      if (!j["holonomy"].is_array()) return error(join(path, "holonomy"), "expected an array");
      for (std::size_t i = 0; i < j["holonomy"].size(); ++i)
        if (auto s = scalar(j["holonomy"][i], index(join(path, "holonomy"), i), false)) t.holonomy.push_back(*s);
    }
    if (diags.size() != before) return;
    JobSpec probe;
    probe.toric = t;
    try {
      validate(probe.toric_input());
    } catch (const Error& e) {
      error("", e.what());
    }
  }

  void options(const Json& j, JobOptions& o) {
    const std::string path = "options";
    if (!object(j, path,
                {"novikov", "seed", "budget", "assume_reduced", "stages", "starts", "sample_starts", "residual_tol",
                 "identity_tol", "dedup_tol", "q"}))
      return;
    if (j.contains("novikov")) {
      const Json& v = j["novikov"];
      if (v.is_string() && (v == "unit" || v == "formal")) o.novikov = v.get<std::string>();
      else error(join(path, "novikov"), "expected \"unit\" or \"formal\"");
    }
    if (j.contains("seed")) {
      const Json& v = j["seed"];
      if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long>() >= 0)) o.seed = v.get<std::uint64_t>();
      else error(join(path, "seed"), "expected a non-negative integer");
    }
    if (j.contains("budget"))
      if (auto v = count(j["budget"], join(path, "budget"), true)) o.budget = *v;
    if (j.contains("assume_reduced")) {
      if (j["assume_reduced"].is_boolean()) o.assume_reduced = j["assume_reduced"].get<bool>();
      else error(join(path, "assume_reduced"), "expected a boolean");
    }
    if (j.contains("stages")) stages(j["stages"], o, join(path, "stages"));
    if (j.contains("starts"))
      if (auto v = count(j["starts"], join(path, "starts"), true)) o.starts = *v;
    if (j.contains("sample_starts"))
      if (auto v = count(j["sample_starts"], join(path, "sample_starts"), true)) o.sample_starts = *v;
    if (j.contains("residual_tol"))
      if (auto v = real(j["residual_tol"], join(path, "residual_tol"))) o.residual_tol = *v;
    if (j.contains("identity_tol"))
      if (auto v = real(j["identity_tol"], join(path, "identity_tol"))) o.identity_tol = *v;
    if (j.contains("dedup_tol"))
      if (auto v = real(j["dedup_tol"], join(path, "dedup_tol"))) o.dedup_tol = *v;
    if (j.contains("q"))
      if (auto v = real(j["q"], join(path, "q"))) o.q = *v;
  }

  void stages(const Json& j, JobOptions& o, const std::string& path) {
    if (!j.is_array() || j.empty()) return error(path, "expected a non-empty array of stage names");
    static const std::vector<std::string> order = {"mirror", "lift", "verify"};
    std::vector<bool> on(order.size(), false);
    for (std::size_t i = 0; i < j.size(); ++i) {
      std::string s = j[i].is_string() ? j[i].get<std::string>() : "";
      if (s == "all") {
        on.assign(order.size(), true);
        continue;
      }
      auto it = std::find(order.begin(), order.end(), s);
      if (it == order.end()) {
        error(index(path, i), "expected one of mirror, lift, verify, all");
        continue;
      }
      on[static_cast<std::size_t>(it - order.begin())] = true;
    }
    o.stages.clear();
    for (std::size_t k = 0; k < order.size(); ++k)
      if (on[k]) o.stages.push_back(order[k]);
  }

  void hypotheses(const Json& j, Hypotheses& h) {
    const std::string path = "hypotheses";
    if (!object(j, path, {"minimal_maslov_at_least_2", "cohomology_generated_in_degree_1"})) return;
    for (auto [key, field] : {std::pair{"minimal_maslov_at_least_2", &h.minimal_maslov_at_least_2},
                              std::pair{"cohomology_generated_in_degree_1", &h.cohomology_generated_in_degree_1}}) {
      if (!j.contains(key)) continue;
      if (j[key].is_boolean()) *field = j[key].get<bool>();
      else error(join(path, key), "expected a boolean");
    }
  }

  void image(const Json& j, JobSpec& job) {
    if (!j.is_array() || j.empty()) return error("image", "expected a non-empty array of polynomials in z and h");
    if (job.group.rank == 0) return;
    RingPtr ring = cotangent_ring(job.group.rank);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_string()) {
        error(index("image", i), "expected a polynomial string");
        continue;
      }
      try {
        out.push_back(format(parse_polynomial(j[i].get<std::string>(), ring)));
      } catch (const std::exception& e) {
        error(index("image", i), e.what());
      }
    }
    job.image = out;
  }

  JobSpec document(const Json& j) {
    JobSpec job;
    job.options.budget = default_budget();
    if (!object(j, "", {"$schema", "version", "description", "group", "toric", "image", "options", "hypotheses"}))
      return job;
    if (j.contains("version")) {
      if (!j["version"].is_number_integer() || j["version"].get<long>() != kJobVersion)
        error("version", "unsupported job version (expected " + std::to_string(kJobVersion) + ")");
    }
    if (j.contains("description")) {
      if (j["description"].is_string()) job.description = j["description"].get<std::string>();
      else error("description", "expected a string");
    }
    if (j.contains("group")) group(j["group"], job.group);
    else error("group", "required");
    if (j.contains("toric")) toric(j["toric"], job.toric);
    else error("toric", "required");
    if (j.contains("options")) options(j["options"], job.options);
    if (j.contains("hypotheses")) hypotheses(j["hypotheses"], job.hypotheses);
    if (j.contains("image")) image(j["image"], job);
    if (job.group.rank > 0 && !job.toric.action.empty() && job.toric.action.size() != job.group.rank)
      error("toric.action", "has " + std::to_string(job.toric.action.size()) + " rows but group.rank is " +
                                std::to_string(job.group.rank));
    return job;
  }
};

}  // namespace detail

/// Parses text into JSON; errors carry the line and column.
inline Json parse_json_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string what = e.what();
    if (auto k = what.find("] "); k != std::string::npos) what = what.substr(k + 2);
    throw JobError({{"", what}});
  }
}

/// Every diagnostic for the document; empty means valid.
inline std::vector<Diagnostic> validate_job(const std::string& text) {
  try {
    detail::JobReader reader;
    reader.document(parse_json_document(text));
    return reader.diags;
  } catch (const JobError& e) {
    return e.diagnostics;
  }
}

/// The normalized job; throws JobError with every diagnostic.
inline JobSpec parse_job(const std::string& text) {
  detail::JobReader reader;
  JobSpec job = reader.document(parse_json_document(text));
  if (!reader.diags.empty()) throw JobError(reader.diags);
  return job;
}

}  // namespace bfmlift
