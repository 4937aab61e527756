// balg: command-line front end for the ⋈-product workbench.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "balg/bowtie.hpp"
#include "balg/checks.hpp"
#include "balg/errors.hpp"
#include "balg/io.hpp"
#include "balg/spectrum.hpp"

namespace {

using balg::Json;

enum Exit { kOk = 0, kMismatch = 1, kError = 2 };

struct Global {
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::string output;
  bool timings = false;

  balg::Tolerances tolerances() const {
    balg::Tolerances t;
    if (tol) t.assoc = t.norm = *tol;
    return t;
  }
};

void emit(const Global& g, const std::string& text) {
  if (g.output.empty()) std::cout << text;
  else balg::io::write_file(g.output, text);
}

Json header(const char* command, const Global& g) {
  Json j;
  j["tool"] = balg::kToolVersion;
  j["command"] = command;
  j["seed"] = g.seed;
  j["tolerances"] = balg::to_json(g.tolerances());
  return j;
}

Json element_json(const balg::Element& x) { return balg::to_json(balg::Functional(x.coeffs)); }

int cmd_validate(const Global& g, const std::vector<std::string>& files) {
  if (files.size() != 1 && files.size() != 3)
    throw balg::SchemaError("validate expects ALGEBRA or ALGEBRA-A ALGEBRA-B ACTION");
  const auto tol = g.tolerances();
  Json j = header("validate", g);
  const auto a = balg::io::load_algebra(files[0]);
  auto report = balg::validate(a, tol);
  j["a"] = balg::to_json(report);
  bool ok = report.pass();
  if (files.size() == 3) {
    const auto b = balg::io::load_algebra(files[1]);
    const auto action = balg::io::load_action(files[2], a.dim(), b.dim());
    const auto rb = balg::validate(b, tol);
    const auto rm = balg::validate_bimodule(a, b, action, tol);
    const auto ralg = balg::check_algebraic(a, b, action, tol);
    j["b"] = balg::to_json(rb);
    j["bimodule"] = balg::to_json(rm);
    j["algebraic"] = balg::to_json(ralg);
    ok = ok && rb.pass() && rm.pass() && ralg.pass();
  }
  j["valid"] = ok;
  emit(g, balg::dump(j));
  return ok ? kOk : kMismatch;
}

int cmd_identity(const Global& g, const std::string& file) {
  const auto tol = g.tolerances();
  const auto a = balg::io::load_algebra(file);
  Json j = header("identity", g);
  const auto id = balg::find_identity(a, tol);
  j["unital"] = id.has_value();
  j["identity"] = id ? element_json(*id) : Json(nullptr);
  const auto left = balg::find_left_identities(a, tol);
  j["left_identities"] = Json{{"exists", !left.empty()},
                              {"dimension", left.empty() ? Json(nullptr) : Json(left.dimension())},
                              {"particular", left.empty() ? Json(nullptr) : element_json(*left.particular)}};
  emit(g, balg::dump(j));
  return kOk;
}

int cmd_spectrum(const Global& g, const std::string& file, bool bruteforce) {
  const auto tol = g.tolerances();
  const auto a = balg::io::load_algebra(file);
  Json j = header("spectrum", g);
  j["dim"] = a.dim();
  auto set = bruteforce ? balg::characters_bruteforce(a, tol, g.seed) : balg::characters(a, tol, g.seed);
  set.canonicalize();
  j["method"] = bruteforce ? "bruteforce" : "eigen";
  j["count"] = set.size();
  j["characters"] = balg::to_json(set);
  emit(g, balg::dump(j));
  return kOk;
}

int cmd_radical(const Global& g, const std::string& file) {
  const auto tol = g.tolerances();
  const auto a = balg::io::load_algebra(file);
  Json j = header("radical", g);
  const auto rad = balg::jacobson_radical(a, tol);
  j["dim"] = a.dim();
  j["radical_dim"] = rad.dim();
  Json basis = Json::array();
  for (Eigen::Index c = 0; c < rad.basis.cols(); ++c) basis.push_back(element_json(balg::Element(rad.basis.col(c))));
  j["basis"] = basis;
  const auto index = balg::nilpotency_index(a, rad, tol);
  j["nilpotency_index"] = index ? Json(*index) : Json(nullptr);
  j["ideal_residual"] = balg::ideal_residual(a, rad);
  j["semisimple"] = rad.dim() == 0;
  emit(g, balg::dump(j));
  return kOk;
}

struct Triple {
  balg::FiniteDimAlgebra a, b;
  balg::BimoduleAction action;
};

Triple load_triple(const std::string& fa, const std::string& fb, const std::string& fx) {
  Triple t;
  t.a = balg::io::load_algebra(fa);
  t.b = balg::io::load_algebra(fb);
  t.action = balg::io::load_action(fx, t.a.dim(), t.b.dim());
  return t;
}

int cmd_bowtie(const Global& g, const std::vector<std::string>& files) {
  const Triple t = load_triple(files[0], files[1], files[2]);
  const auto bowtie = balg::build_bowtie(t.a, t.b, t.action, g.tolerances());
  emit(g, balg::io::serialize_algebra(bowtie.carrier));
  return kOk;
}

int cmd_prop_check(const Global& g, const std::vector<std::string>& files) {
  const Triple t = load_triple(files[0], files[1], files[2]);
  balg::CheckOptions opts;
  opts.tol = g.tolerances();
  opts.seed = g.seed;
  opts.timings = g.timings;
  const auto run = balg::run_prop_checks(t.a, t.b, t.action, opts);
  emit(g, balg::dump(balg::prop_check_report(t.a, t.b, t.action, opts, run)));
  if (run.refused) {
    std::cerr << "balg: refused: " << run.refusal << "\n";
    return kError;
  }
  return run.all_agree() ? kOk : kMismatch;
}

int cmd_fuzz(const Global& g, const std::string& family, std::size_t count, std::optional<std::size_t> dim_a,
             std::optional<std::size_t> dim_b, bool commutative) {
  const auto fam = balg::parse_family(family);
  if (!fam || *fam == balg::Family::Custom)
    throw balg::SchemaError("unknown family '" + family + "' (direct, module-ext, theta-lau, t-lau)");
  if ((dim_a && *dim_a > 8) || (dim_b && *dim_b > 8)) throw balg::DimensionError("fuzz dimensions are limited to 8");
  balg::FuzzOptions opts;
  opts.family = *fam;
  opts.count = count;
  opts.seed = g.seed;
  opts.dim_a = dim_a;
  opts.dim_b = dim_b;
  opts.generator.commutative_only = commutative;
  opts.check.tol = g.tolerances();
  opts.check.timings = g.timings;
  balg::FuzzSummary summary;
  const Json report = balg::run_fuzz(opts, &summary);
  emit(g, balg::dump(report));
  std::cerr << "balg fuzz: " << summary.agree << "/" << summary.instances << " agree, " << summary.mismatch
            << " mismatch, " << summary.errors << " errors\n";
  if (summary.errors > 0) return kError;
  return summary.mismatch > 0 ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for the bowtie product of finite-dimensional Banach algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--tol", g.tol, "Associativity and norm tolerance");
  app.add_option("--seed", g.seed, "Random seed")->envname("BALG_SEED")->capture_default_str();
  app.add_option("-o,--output", g.output, "Write the result here instead of standard output");
  app.add_flag("--timings", g.timings, "Include per-check wall-clock times in reports");

  std::vector<std::string> validate_files;
  auto* validate = app.add_subcommand("validate", "Check algebra (and optionally bimodule) axioms");
  validate->add_option("files", validate_files, "ALGEBRA [ALGEBRA-B ACTION]")->required()->expected(1, 3);

  std::string single;
  auto* identity = app.add_subcommand("identity", "Find the identity and left identities");
  identity->add_option("algebra", single)->required();

  bool bruteforce = false;
  auto* spectrum = app.add_subcommand("spectrum", "List the characters");
  spectrum->add_option("algebra", single)->required();
  spectrum->add_flag("--bruteforce", bruteforce, "Use the multistart solver instead of the eigen pipeline");

  auto* radical = app.add_subcommand("radical", "Compute the Jacobson radical");
  radical->add_option("algebra", single)->required();

  std::vector<std::string> triple;
  auto* bowtie = app.add_subcommand("bowtie", "Write A ⋈ B as an algebra file");
  bowtie->add_option("files", triple, "ALGEBRA-A ALGEBRA-B ACTION")->required()->expected(3);

  auto* prop = app.add_subcommand("prop-check", "Run every characterization check on one instance");
  prop->add_option("files", triple, "ALGEBRA-A ALGEBRA-B ACTION")->required()->expected(3);

  std::string family = "direct";
  std::size_t count = 100;
  std::optional<std::size_t> dim_a, dim_b;
  bool commutative = false;
  auto* fuzz = app.add_subcommand("fuzz", "Generate seeded instances and check them all");
  fuzz->add_option("--family", family, "direct | module-ext | theta-lau | t-lau")->capture_default_str();
  fuzz->add_option("--count", count)->capture_default_str();
  fuzz->add_option("--dim-a", dim_a);
  fuzz->add_option("--dim-b", dim_b);
  fuzz->add_flag("--commutative", commutative, "Commutative blocks and symmetric actions only");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(g, validate_files);
    if (*identity) return cmd_identity(g, single);
    if (*spectrum) return cmd_spectrum(g, single, bruteforce);
    if (*radical) return cmd_radical(g, single);
    if (*bowtie) return cmd_bowtie(g, triple);
    if (*prop) return cmd_prop_check(g, triple);
    if (*fuzz) return cmd_fuzz(g, family, count, dim_a, dim_b, commutative);
  } catch (const std::exception& e) {
    std::cerr << "balg: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
