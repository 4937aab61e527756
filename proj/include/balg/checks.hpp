#pragma once

// Orchestration of every characterization checker on one instance, and the
// seeded fuzz sweep built on top of it. Reports are JSON with a fixed key
// order; nothing time- or host-dependent is written unless asked for.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "balg/generate.hpp"
#include "balg/spectrum.hpp"

namespace balg {

inline constexpr const char* kToolVersion = "balg 0.1.0";

using Json = nlohmann::ordered_json;

struct CheckOptions {
  Tolerances tol;
  std::uint64_t seed = kDefaultSpectrumSeed;
  bool timings = false;
};

struct CheckRun {
  bool refused = false;
  std::string refusal;
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::string, std::string>> skipped;  // check, reason
  std::vector<double> timings_ms;                            // parallel to verdicts when requested
  bool all_agree() const;
};

/// Associativity of the assembled carrier.
Verdict check_bowtie_associativity(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                                   const Tolerances& tol = {});
/// arens_first reproduces the structure tensor of A, B and A ⋈ B to 1e-12.
Verdict check_arens_reflexivity(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action);

/// Refuses (without running anything) when the inputs are not a valid algebraic bimodule.
CheckRun run_prop_checks(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                         const CheckOptions& options = {});

Json to_json(const Residual& r);
Json to_json(const Verdict& v, bool compact = false);
Json to_json(const ValidationReport& report);
Json to_json(const Tolerances& tol);
Json to_json(const Functional& f);
Json to_json(const GelfandSet& set);
Json to_json(const CheckRun& run, bool compact = false);

Json prop_check_report(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                       const CheckOptions& options, const CheckRun& run);

struct FuzzOptions {
  Family family = Family::Direct;
  std::optional<std::size_t> dim_a;
  std::optional<std::size_t> dim_b;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  GeneratorOptions generator;
  CheckOptions check;
};

struct FuzzSummary {
  std::size_t instances = 0;
  std::size_t agree = 0;
  std::size_t mismatch = 0;
  std::size_t errors = 0;
};

Json run_fuzz(const FuzzOptions& options, FuzzSummary* summary = nullptr);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace balg
