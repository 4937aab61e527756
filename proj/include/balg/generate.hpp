#pragma once

// Seeded generation of valid ⋈ instances for the four standard families.

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "balg/bimodule.hpp"

namespace balg {

enum class Family { Direct, ModuleExt, ThetaLau, TLau, Custom };

std::string to_string(Family f);
/// Accepts direct, module-ext, theta-lau, t-lau, custom.
std::optional<Family> parse_family(const std::string& name);

struct InstanceSpec {
  Family family = Family::Direct;
  std::optional<std::size_t> dim_a;
  std::optional<std::size_t> dim_b;
  std::uint64_t seed = 0;
  // Custom instances only.
  std::string a_path, b_path, action_path;
};

struct Instance {
  Family family = Family::Direct;
  FiniteDimAlgebra a;
  FiniteDimAlgebra b;
  BimoduleAction action;
  std::uint64_t seed = 0;
  std::string recipe;
  std::optional<Functional> theta;  // theta-Lau
  std::optional<Matrix> t;          // T-Lau, column j = T(e_j)
  int attempts = 1;
};

struct GeneratorOptions {
  std::size_t max_dim = 6;       // dims drawn from [0, max_dim] when not fixed
  bool commutative_only = false;  // commutative blocks and symmetric actions only
  int retry_budget = 16;
};

using Rng = std::mt19937_64;

/// Seed of instance `index` in a sweep started from `seed`.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

/// Direct sum of catalog blocks of total dimension `dim` in its canonical basis.
FiniteDimAlgebra random_block_algebra(Rng& rng, std::size_t dim, bool commutative_only, std::string* recipe = nullptr);

/// Invertible change of basis: a scaled permutation with unimodular phases, or
/// (when `monomial` is false, with probability 1/2) a well-conditioned dense mixing.
Matrix random_basis(Rng& rng, std::size_t dim, bool monomial);

/// Transports (A, B, action) along bases P of A and Q of B, then rescales all
/// products and both actions by one positive factor so every bound is <= 1.
void transport(FiniteDimAlgebra& a, FiniteDimAlgebra& b, BimoduleAction& action, const Matrix& p, const Matrix& q);

/// Throws GenerationError when the retry budget runs out; Custom loads the files.
Instance generate_instance(const InstanceSpec& spec, const GeneratorOptions& options = {}, const Tolerances& tol = {});

}  // namespace balg
