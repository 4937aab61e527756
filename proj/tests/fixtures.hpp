#pragma once

#include <vector>

#include "balg/generate.hpp"

inline std::vector<balg::Instance> sample(balg::Family family, std::size_t count, std::uint64_t seed,
                                          std::size_t max_dim = 4, bool commutative = false) {
  balg::GeneratorOptions opt;
  opt.max_dim = max_dim;
  opt.commutative_only = commutative;
  std::vector<balg::Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    balg::InstanceSpec spec;
    spec.family = family;
    spec.seed = balg::instance_seed(seed, i);
    out.push_back(balg::generate_instance(spec, opt));
  }
  return out;
}

inline std::vector<balg::Instance> sample_all(std::size_t per_family, std::uint64_t seed, std::size_t max_dim = 4) {
  std::vector<balg::Instance> out;
  for (auto f : {balg::Family::Direct, balg::Family::ModuleExt, balg::Family::ThetaLau, balg::Family::TLau}) {
    auto part = sample(f, per_family, seed + static_cast<std::uint64_t>(f), max_dim);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}
