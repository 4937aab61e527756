#include "balg/io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "balg/errors.hpp"

namespace balg::io {

using nlohmann::json;

namespace {

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

const json& require_field(const json& doc, const char* name) {
  if (!doc.is_object()) throw SchemaError("top-level value must be an object");
  auto it = doc.find(name);
  if (it == doc.end()) throw SchemaError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t index_at(const json& entry, std::size_t slot, std::size_t bound, const std::string& where) {
  const json& v = entry[slot];
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw SchemaError(where + "[" + std::to_string(slot) + "]: index must be a non-negative integer");
  const auto idx = v.get<unsigned long long>();
  if (idx >= bound)
    throw SchemaError(where + "[" + std::to_string(slot) + "]: index " + std::to_string(idx) + " out of range (bound " +
                      std::to_string(bound) + ")");
  return static_cast<std::size_t>(idx);
}

double number_at(const json& entry, std::size_t slot, const std::string& where) {
  const json& v = entry[slot];
  if (!v.is_number()) throw SchemaError(where + "[" + std::to_string(slot) + "]: expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SchemaError(where + "[" + std::to_string(slot) + "]: non-finite value");
  return d;
}

// Fills `target` from a list of [i, j, k, re, im] entries with per-slot bounds.
void read_entries(const json& list, const std::string& field, std::size_t b0, std::size_t b1, std::size_t b2,
                  Tensor3& target) {
  if (!list.is_array()) throw SchemaError("field \"" + field + "\" must be an array");
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string where = field + "[" + std::to_string(e) + "]";
    const json& entry = list[e];
    if (!entry.is_array() || entry.size() != 5) throw SchemaError(where + ": expected [i, j, k, re, im]");
    const std::size_t i = index_at(entry, 0, b0, where);
    const std::size_t j = index_at(entry, 1, b1, where);
    const std::size_t k = index_at(entry, 2, b2, where);
    if (!seen.emplace(i, j, k).second) throw SchemaError(where + ": duplicate entry for this index triple");
    target(i, j, k) = Scalar(number_at(entry, 3, where), number_at(entry, 4, where));
  }
}

bool is_positive_zero(double d) { return d == 0.0 && !std::signbit(d); }

void write_entries(std::ostringstream& os, const Tensor3& t) {
  bool first = true;
  for (std::size_t i = 0; i < t.extent(0); ++i)
    for (std::size_t j = 0; j < t.extent(1); ++j)
      for (std::size_t k = 0; k < t.extent(2); ++k) {
        const Scalar v = t(i, j, k);
        if (is_positive_zero(v.real()) && is_positive_zero(v.imag())) continue;
        os << (first ? "\n" : ",\n") << "    [" << i << ", " << j << ", " << k << ", " << json(v.real()).dump() << ", "
           << json(v.imag()).dump() << "]";
        first = false;
      }
  os << (first ? "]" : "\n  ]");
}

}  // namespace

FiniteDimAlgebra parse_algebra(const std::string& text) {
  const json doc = parse_document(text);
  const json& dim_field = require_field(doc, "dim");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 0)
    throw SchemaError("field \"dim\" must be a non-negative integer");
  const auto n = dim_field.get<std::size_t>();

  const json& basis = require_field(doc, "basis");
  if (!basis.is_array()) throw SchemaError("field \"basis\" must be an array of strings");
  if (basis.size() != n)
    throw SchemaError("field \"basis\" has " + std::to_string(basis.size()) + " labels but dim is " + std::to_string(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (!basis[i].is_string()) throw SchemaError("basis[" + std::to_string(i) + "]: label must be a string");
    labels.push_back(basis[i].get<std::string>());
  }

  Tensor3 mul(n, n, n);
  read_entries(require_field(doc, "mul"), "mul", n, n, n, mul);
  return FiniteDimAlgebra(std::move(labels), std::move(mul));
}

std::string serialize_algebra(const FiniteDimAlgebra& a) {
  std::ostringstream os;
  os << "{\n  \"dim\": " << a.dim() << ",\n  \"basis\": [";
  for (std::size_t i = 0; i < a.dim(); ++i) os << (i ? ", " : "") << json(a.labels()[i]).dump();
  os << "],\n  \"mul\": [";
  write_entries(os, a.mul());
  os << "\n}\n";
  return os.str();
}

BimoduleAction parse_action(const std::string& text, std::size_t dim_a, std::size_t dim_b) {
  const json doc = parse_document(text);
  BimoduleAction action = BimoduleAction::zero(dim_a, dim_b);
  read_entries(require_field(doc, "left"), "left", dim_a, dim_b, dim_b, action.left);
  read_entries(require_field(doc, "right"), "right", dim_b, dim_a, dim_b, action.right);
  return action;
}

std::string serialize_action(const BimoduleAction& action) {
  std::ostringstream os;
  os << "{\n  \"left\": [";
  write_entries(os, action.left);
  os << ",\n  \"right\": [";
  write_entries(os, action.right);
  os << "\n}\n";
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

FiniteDimAlgebra load_algebra(const std::filesystem::path& path) {
  try {
    return parse_algebra(read_file(path));
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

void save_algebra(const std::filesystem::path& path, const FiniteDimAlgebra& a) { write_file(path, serialize_algebra(a)); }

BimoduleAction load_action(const std::filesystem::path& path, std::size_t dim_a, std::size_t dim_b) {
  try {
    return parse_action(read_file(path), dim_a, dim_b);
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

void save_action(const std::filesystem::path& path, const BimoduleAction& action) {
  write_file(path, serialize_action(action));
}

}  // namespace balg::io
