#pragma once

// JSON file formats.
//   algebra: {"dim": n, "basis": [labels], "mul": [[i, j, k, re, im], ...]}
//   action:  {"left": [[i, p, q, re, im], ...], "right": [[p, i, q, re, im], ...]}
// Indices are zero-based and omitted entries are zero. Serialization is
// canonical (fixed key order, entries sorted by index) and doubles are written
// in shortest round-trip form, so save(load(f)) reproduces a canonical file.

#include <filesystem>
#include <string>

#include "balg/bimodule.hpp"

namespace balg::io {

FiniteDimAlgebra parse_algebra(const std::string& text);
std::string serialize_algebra(const FiniteDimAlgebra& a);
FiniteDimAlgebra load_algebra(const std::filesystem::path& path);
void save_algebra(const std::filesystem::path& path, const FiniteDimAlgebra& a);

BimoduleAction parse_action(const std::string& text, std::size_t dim_a, std::size_t dim_b);
std::string serialize_action(const BimoduleAction& action);
BimoduleAction load_action(const std::filesystem::path& path, std::size_t dim_a, std::size_t dim_b);
void save_action(const std::filesystem::path& path, const BimoduleAction& action);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace balg::io
