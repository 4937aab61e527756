// Acceptance sweep: one PASS/FAIL line per criterion.
//   acceptance          run all criteria
//   acceptance 4 7      run the listed ones

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "balg/bowtie.hpp"
#include "balg/catalog.hpp"
#include "balg/checks.hpp"
#include "balg/duality.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace balg;

namespace {

constexpr double kAssocTol = 1e-9;
constexpr double kSetTol = 1e-6;
constexpr double kBidualTol = 1e-10;
constexpr double kArensTol = 1e-12;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

std::vector<Instance> pool(std::size_t per_family, std::uint64_t seed, std::size_t max_dim = 6, bool commutative = false) {
  std::vector<Instance> out;
  for (auto f : {Family::Direct, Family::ModuleExt, Family::ThetaLau, Family::TLau}) {
    auto part = sample(f, per_family, seed + 17 * static_cast<std::uint64_t>(f), max_dim, commutative);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Characters of A and B padded into functionals on A ⋈ B.
GelfandSet padded(const GelfandSet& s, const FiniteDimAlgebra& carrier, std::size_t offset, std::size_t total) {
  GelfandSet out(kSetTol);
  for (const auto& c : s.members()) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(total));
    v.segment(static_cast<Eigen::Index>(offset), c.functional().coeffs.size()) = c.functional().coeffs;
    out.insert(Character::verified(carrier, Functional(v), 1e-8));
  }
  return out;
}

GelfandSet join(GelfandSet a, const GelfandSet& b) {
  for (const auto& c : b.members()) a.insert(c);
  return a;
}

void criterion1(Outcome& o) {
  const auto instances = pool(250, 101);
  double worst = 0.0, product_gap = 0.0;
  for (const auto& inst : instances) {
    const auto bt = build_bowtie(inst.a, inst.b, inst.action);
    const auto c = oracle::from(bt.carrier.mul());
    worst = std::max(worst, oracle::associativity_residual(c));
    // Carrier structure constants against the product formula on basis pairs.
    const auto ca = oracle::from(inst.a.mul()), cb = oracle::from(inst.b.mul());
    const auto L = oracle::from(inst.action.left), R = oracle::from(inst.action.right);
    const std::size_t n = inst.a.dim(), m = inst.b.dim();
    for (std::size_t u = 0; u < n + m; ++u)
      for (std::size_t w = 0; w < n + m; ++w) {
        oracle::Vec a1(n), b1(m), a2(n), b2(m), eu(n + m), ew(n + m);
        (u < n ? a1[u] : b1[u - n]) = 1.0;
        (w < n ? a2[w] : b2[w - n]) = 1.0;
        eu[u] = ew[w] = 1.0;
        product_gap = std::max(product_gap, oracle::dist(oracle::bowtie_product(ca, cb, L, R, a1, b1, a2, b2),
                                                         oracle::multiply(c, eu, ew)));
      }
  }
  o.pass = instances.size() >= 1000 && worst <= kAssocTol && product_gap <= 1e-12;
  o.detail << instances.size() << " instances, max associativity residual " << worst << " (tol " << kAssocTol
           << "), max product-formula gap " << product_gap;
}

void criterion2(Outcome& o) {
  auto instances = pool(200, 202);
  const auto comm = pool(50, 203, 6, true);
  instances.insert(instances.end(), comm.begin(), comm.end());
  // Commutative algebras with a deliberately asymmetric action.
  std::size_t asymmetric = 0;
  for (std::size_t k = 2; k <= 5; ++k)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        Instance inst;
        inst.a = catalog::diagonal_algebra(k);
        inst.b = catalog::zero_algebra(1 + (i + j) % 3);
        inst.action = character_bimodule(Functional(Vector::Unit(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i))),
                                         Functional(Vector::Unit(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j))),
                                         inst.b.dim());
        instances.push_back(inst);
        ++asymmetric;
      }
  std::size_t agree = 0, both_true = 0, both_false = 0, noncomm = 0;
  for (const auto& inst : instances) {
    const auto v = check_prop21(inst.a, inst.b, inst.action);
    agree += v.agree;
    both_true += v.agree && v.lhs;
    both_false += v.agree && !v.lhs;
    noncomm += !is_commutative(inst.a) || !is_commutative(inst.b);
  }
  o.pass = instances.size() >= 1000 && agree == instances.size() && both_true > 0 && both_false > 0 && noncomm > 0;
  o.detail << agree << "/" << instances.size() << " agree (" << both_true << " both true, " << both_false
           << " both false; " << noncomm << " with a noncommutative side, " << asymmetric << " asymmetric actions)";
}

void criterion3(Outcome& o) {
  const auto instances = pool(250, 303);
  std::size_t agree22 = 0, agree23 = 0, with_identity = 0;
  for (const auto& inst : instances) {
    const auto v22 = check_prop22(inst.a, inst.b, inst.action);
    agree22 += v22.agree;
    with_identity += v22.lhs;
    agree23 += check_prop23(inst.a, inst.b, inst.action).agree;
  }
  // Unitization C ⋈ B: identity is exactly (1, 0).
  std::size_t exact = 0, tried = 0;
  for (std::size_t i = 0; i < instances.size(); i += 5) {
    const auto& b = instances[i].b;
    const auto u = theta_lau(catalog::complex_field(), b, Functional{1.0});
    const auto id = find_identity(u.carrier);
    ++tried;
    if (id && (*id)[0] == Scalar(1.0) && (b.dim() == 0 || max_abs(id->coeffs.tail(static_cast<Eigen::Index>(b.dim()))) == 0.0))
      ++exact;
  }
  o.pass = agree22 == instances.size() && agree23 == instances.size() && exact == tried;
  o.detail << "identity " << agree22 << "/" << instances.size() << " agree (" << with_identity
           << " unital), left identity " << agree23 << "/" << instances.size() << ", unitization exact (1,0) on "
           << exact << "/" << tried;
}

void criterion4(Outcome& o) {
  const auto instances = pool(250, 404);
  std::size_t agree = 0, lau_ok = 0, lau = 0, ext_ok = 0, ext = 0, direct_ok = 0, direct = 0;
  for (const auto& inst : instances) {
    agree += verify_prop24(inst.a, inst.b, inst.action).agree;
    const auto bt = build_bowtie(inst.a, inst.b, inst.action);
    const std::size_t n = inst.a.dim(), m = inst.b.dim();
    const auto all = characters(bt.carrier);
    const auto da = characters(inst.a), db = characters(inst.b);
    switch (inst.family) {
      case Family::ThetaLau:
        ++lau;
        lau_ok += all.size() == da.size() + db.size();
        break;
      case Family::ModuleExt:
        ++ext;
        ext_ok += compare_sets(all, padded(da, bt.carrier, 0, n + m), kSetTol).equal;
        break;
      case Family::Direct:
        ++direct;
        direct_ok += compare_sets(all, join(padded(da, bt.carrier, 0, n + m), padded(db, bt.carrier, n, n + m)), kSetTol).equal;
        break;
      default:
        break;
    }
  }
  o.pass = instances.size() >= 1000 && agree == instances.size() && lau_ok == lau && ext_ok == ext && direct_ok == direct;
  o.detail << agree << "/" << instances.size() << " set equality (tol " << kSetTol << "); theta-Lau count " << lau_ok
           << "/" << lau << ", module extension " << ext_ok << "/" << ext << ", direct product " << direct_ok << "/"
           << direct;
}

void criterion5(Outcome& o) {
  std::size_t tried = 0, contained = 0, equal = 0;
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 250; ++s) {
    InstanceSpec spec;
    spec.family = static_cast<Family>(s % 4);
    spec.seed = instance_seed(505, s);
    spec.dim_a = s % 5;
    if (spec.family == Family::ThetaLau && *spec.dim_a == 0) spec.dim_a = 1;
    spec.dim_b = (s / 5) % (5 - *spec.dim_a);
    const auto inst = generate_instance(spec);
    const auto carrier = build_bowtie(inst.a, inst.b, inst.action).carrier;
    const auto fast = characters(carrier);
    const auto slow = characters_bruteforce(carrier);
    ++tried;
    bool inside = true;
    for (const auto& c : slow.members()) {
      double nearest = HUGE_VAL;
      for (const auto& f : fast.members()) nearest = std::min(nearest, linf_distance(c.functional(), f.functional()));
      inside = inside && nearest <= kBruteforceClusterRadius;
      if (nearest <= kBruteforceClusterRadius) worst = std::max(worst, nearest);
    }
    contained += inside;
    equal += compare_sets(fast, slow, kBruteforceClusterRadius).equal;
  }
  const double rate = static_cast<double>(equal) / static_cast<double>(tried);
  o.pass = tried >= 200 && contained == tried && rate >= 0.95;
  o.detail << "containment " << contained << "/" << tried << ", equality " << equal << "/" << tried << " ("
           << 100.0 * rate << "%, need 95%), matching radius " << kBruteforceClusterRadius << ", worst matched distance "
           << worst;
}

void criterion6(Outcome& o) {
  const auto instances = pool(250, 606);
  std::size_t checked = 0, good = 0;
  double worst = 0.0;
  for (const auto& inst : instances) {
    const auto carrier = build_bowtie(inst.a, inst.b, inst.action).carrier;
    for (const FiniteDimAlgebra* alg : {&inst.a, &inst.b, &carrier}) {
      const auto rad = jacobson_radical(*alg);
      const double r = ideal_residual(*alg, rad);
      worst = std::max(worst, r);
      ++checked;
      good += r <= 1e-8 && nilpotency_index(*alg, rad).has_value();
    }
  }
  bool examples = !is_semisimple(catalog::truncated_polynomial(2));
  for (std::size_t n = 1; n <= 8; ++n) examples = examples && is_semisimple(catalog::diagonal_algebra(n));
  const auto comm = pool(100, 607, 6, true);
  std::size_t agree = 0;
  for (const auto& inst : comm) agree += check_corollary25(inst.a, inst.b, inst.action).agree;
  o.pass = good == checked && examples && agree == comm.size();
  o.detail << "radical nilpotent ideal on " << good << "/" << checked << " algebras (max ideal residual " << worst
           << "), examples " << (examples ? "ok" : "wrong") << ", semisimplicity " << agree << "/" << comm.size()
           << " commutative-symmetric agree";
}

void criterion7(Outcome& o) {
  const auto instances = pool(125, 707);
  std::size_t part1 = 0, part2 = 0, labelled = 0;
  double worst = 0.0;
  for (const auto& inst : instances) {
    const auto v1 = verify_thm26_part1(inst.a, inst.b, inst.action);
    part1 += v1.agree;
    for (const auto& r : v1.residuals)
      if (r.name == "structure tensor deviation") worst = std::max(worst, r.value);
    const auto v2 = verify_thm26_part2(inst.a, inst.b, inst.action);
    part2 += v2.agree;
    labelled += v2.note.find(kDegenerateForm) != std::string::npos;
  }
  o.pass = instances.size() >= 500 && part1 == instances.size() && part2 == instances.size() &&
           labelled == instances.size() && worst <= kBidualTol;
  o.detail << "bidual product " << part1 << "/" << instances.size() << " (max deviation " << worst << ", tol "
           << kBidualTol << "), topological centre " << part2 << "/" << instances.size() << ", labelled degenerate "
           << labelled;
}

void criterion8(Outcome& o) {
  const auto instances = pool(250, 808);
  double worst = 0.0;
  for (const auto& inst : instances) {
    const auto carrier = build_bowtie(inst.a, inst.b, inst.action).carrier;
    for (const FiniteDimAlgebra* alg : {&inst.a, &inst.b, &carrier})
      worst = std::max(worst, arens_first(*alg).max_deviation(alg->mul()));
  }
  o.pass = worst <= kArensTol;
  o.detail << 3 * instances.size() << " algebras, max deviation " << worst << " (tol " << kArensTol << ")";
}

void criterion9(Outcome& o) {
  std::size_t identical = 0, families = 0;
  std::size_t bytes = 0;
  for (auto f : {Family::Direct, Family::ModuleExt, Family::ThetaLau, Family::TLau}) {
    FuzzOptions opt;
    opt.family = f;
    opt.count = 25;
    opt.seed = 909;
    const std::string first = dump(run_fuzz(opt));
    const std::string second = dump(run_fuzz(opt));
    ++families;
    identical += first == second;
    bytes += first.size();
  }
  o.pass = identical == families;
  o.detail << identical << "/" << families << " families byte-identical across two runs (" << bytes << " bytes)";
}

const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> kCriteria = {
    {"bowtie associativity", criterion1}, {"commutativity", criterion2}, {"identities", criterion3},
    {"gelfand space", criterion4},        {"solver containment", criterion5}, {"radical", criterion6},
    {"bidual and centre", criterion7},    {"arens reflexivity", criterion8}, {"determinism", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::strtoul(argv[i], nullptr, 10));
  if (which.empty())
    for (std::size_t i = 1; i <= kCriteria.size(); ++i) which.push_back(i);

  bool all = true;
  for (std::size_t k : which) {
    if (k < 1 || k > kCriteria.size()) {
      std::fprintf(stderr, "acceptance: no criterion %zu\n", k);
      return 2;
    }
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      kCriteria[k - 1].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", k, kCriteria[k - 1].first, o.detail.str().c_str(),
                secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
