#include "balg/checks.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "balg/bowtie.hpp"
#include "balg/duality.hpp"
#include "balg/errors.hpp"

namespace balg {

namespace {

constexpr double kArensTolerance = 1e-12;

Json optional_dim(const std::optional<std::size_t>& d) { return d ? Json(*d) : Json(nullptr); }

}  // namespace

bool CheckRun::all_agree() const {
  if (refused) return false;
  for (const auto& v : verdicts)
    if (!v.agree) return false;
  return true;
}

Verdict check_bowtie_associativity(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                                   const Tolerances& tol) {
  Verdict v;
  v.check = "associativity";
  v.biconditional = false;
  const ValidationReport report = validate(assemble_bowtie(a, b, action), tol);
  v.residuals = report.residuals;
  v.agree = report.pass();
  if (const Residual* r = report.first_failure()) v.witnesses.push_back(r->name + " at " + r->location);
  return v;
}

Verdict check_arens_reflexivity(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action) {
  Verdict v;
  v.check = "arens-reflexivity";
  v.biconditional = false;
  v.agree = true;
  const FiniteDimAlgebra carrier = assemble_bowtie(a, b, action);
  for (const auto& [name, alg] : {std::pair<const char*, const FiniteDimAlgebra*>{"A", &a}, {"B", &b}, {"A⋈B", &carrier}}) {
    const double dev = arens_first(*alg).max_deviation(alg->mul());
    v.residuals.push_back({std::string("tensor deviation ") + name, dev, kArensTolerance, ""});
    if (!(dev <= kArensTolerance)) {
      v.agree = false;
      v.witnesses.push_back(std::string(name) + ": first Arens product differs from the product");
    }
  }
  return v;
}

CheckRun run_prop_checks(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                         const CheckOptions& options) {
  CheckRun run;
  const Tolerances& tol = options.tol;
  try {
    require_algebraic(a, b, action, tol);
  } catch (const Error& e) {
    run.refused = true;
    run.refusal = e.what();
    return run;
  }

  auto timed = [&](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    run.verdicts.push_back(fn());
    if (options.timings)
      run.timings_ms.push_back(
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  };

  timed([&] { return check_bowtie_associativity(a, b, action, tol); });
  timed([&] { return check_prop21(a, b, action, tol); });
  timed([&] { return check_prop22(a, b, action, tol); });
  timed([&] { return check_prop23(a, b, action, tol); });
  timed([&] { return verify_prop24(a, b, action, tol, options.seed); });
  try {
    timed([&] { return check_corollary25(a, b, action, tol); });
  } catch (const HypothesisError& e) {
    run.skipped.emplace_back("semisimplicity", e.what());
  }
  timed([&] { return verify_thm26_part1(a, b, action, tol); });
  timed([&] { return verify_thm26_part2(a, b, action, tol); });
  timed([&] { return check_arens_reflexivity(a, b, action); });
  return run;
}

Json to_json(const Residual& r) {
  Json j;
  j["name"] = r.name;
  j["value"] = r.value;
  j["tolerance"] = r.tolerance;
  if (!r.location.empty()) j["location"] = r.location;
  return j;
}

Json to_json(const Verdict& v, bool compact) {
  Json j;
  j["check"] = v.check;
  j["verdict"] = v.label();
  if (v.biconditional) {
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
  }
  if (!v.note.empty()) j["note"] = v.note;
  if (!compact || !v.agree) {
    Json res = Json::array();
    for (const auto& r : v.residuals) res.push_back(to_json(r));
    j["residuals"] = res;
    j["witnesses"] = v.witnesses;
    if (!v.identification.empty()) j["identification"] = v.identification;
  }
  return j;
}

Json to_json(const ValidationReport& report) {
  Json j;
  j["valid"] = report.pass();
  Json res = Json::array();
  for (const auto& r : report.residuals) res.push_back(to_json(r));
  j["residuals"] = res;
  return j;
}

Json to_json(const Tolerances& tol) {
  Json j;
  j["assoc"] = tol.assoc;
  j["norm"] = tol.norm;
  j["identity"] = tol.identity;
  j["rank"] = tol.rank;
  j["character"] = tol.character;
  j["dedup"] = tol.dedup;
  return j;
}

Json to_json(const Functional& f) {
  Json j = Json::array();
  // Adding 0.0 maps -0.0 to 0.0.
  for (std::size_t i = 0; i < f.size(); ++i) j.push_back(Json::array({f[i].real() + 0.0, f[i].imag() + 0.0}));
  return j;
}

Json to_json(const GelfandSet& set) {
  Json j = Json::array();
  for (const auto& c : set.members()) {
    Json m;
    m["values"] = to_json(c.functional());
    m["residual"] = c.residual();
    j.push_back(m);
  }
  return j;
}

Json to_json(const CheckRun& run, bool compact) {
  Json j;
  j["status"] = run.refused ? "refused" : run.all_agree() ? "agree" : "mismatch";
  if (run.refused) j["refusal"] = run.refusal;
  Json checks = Json::array();
  for (std::size_t i = 0; i < run.verdicts.size(); ++i) {
    Json v = to_json(run.verdicts[i], compact);
    if (i < run.timings_ms.size()) v["time_ms"] = run.timings_ms[i];
    checks.push_back(v);
  }
  j["checks"] = checks;
  Json skipped = Json::array();
  for (const auto& [check, reason] : run.skipped) skipped.push_back(Json{{"check", check}, {"reason", reason}});
  j["skipped"] = skipped;
  return j;
}

Json prop_check_report(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                       const CheckOptions& options, const CheckRun& run) {
  Json j;
  j["tool"] = kToolVersion;
  j["command"] = "prop-check";
  j["seed"] = options.seed;
  j["tolerances"] = to_json(options.tol);
  j["dims"] = Json{{"a", a.dim()}, {"b", b.dim()}};
  (void)action;
  const Json body = to_json(run);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

Json run_fuzz(const FuzzOptions& options, FuzzSummary* summary) {
  FuzzSummary s;
  Json instances = Json::array();
  for (std::size_t idx = 0; idx < options.count; ++idx) {
    InstanceSpec spec;
    spec.family = options.family;
    spec.dim_a = options.dim_a;
    spec.dim_b = options.dim_b;
    spec.seed = instance_seed(options.seed, idx);
    Json entry;
    entry["index"] = idx;
    entry["seed"] = spec.seed;
    ++s.instances;
    try {
      const Instance inst = generate_instance(spec, options.generator, options.check.tol);
      entry["recipe"] = inst.recipe;
      entry["dims"] = Json{{"a", inst.a.dim()}, {"b", inst.b.dim()}};
      CheckOptions check = options.check;
      check.seed = spec.seed;
      const CheckRun run = run_prop_checks(inst.a, inst.b, inst.action, check);
      const Json body = to_json(run, true);
      for (const auto& [key, value] : body.items()) entry[key] = value;
      if (run.refused) ++s.errors;
      else if (run.all_agree()) ++s.agree;
      else ++s.mismatch;
    } catch (const GenerationError& e) {
      entry["status"] = "generation-failure";
      entry["error"] = e.what();
      ++s.errors;
    } catch (const Error& e) {
      entry["status"] = "error";
      entry["error"] = e.what();
      ++s.errors;
    }
    instances.push_back(entry);
  }

  Json j;
  j["tool"] = kToolVersion;
  j["command"] = "fuzz";
  j["seed"] = options.seed;
  j["family"] = to_string(options.family);
  j["count"] = options.count;
  j["dims"] = Json{{"a", optional_dim(options.dim_a)}, {"b", optional_dim(options.dim_b)}};
  j["commutative_only"] = options.generator.commutative_only;
  j["tolerances"] = to_json(options.check.tol);
  j["instances"] = instances;
  j["summary"] = Json{{"instances", s.instances}, {"agree", s.agree}, {"mismatch", s.mismatch}, {"errors", s.errors}};
  j["status"] = s.errors ? "error" : s.mismatch ? "mismatch" : "agree";
  if (summary) *summary = s;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace balg
