#include "balg/generate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "balg/bowtie.hpp"
#include "balg/catalog.hpp"
#include "balg/errors.hpp"
#include "balg/io.hpp"
#include "balg/spectrum.hpp"

namespace balg {

std::string to_string(Family f) {
  switch (f) {
    case Family::Direct: return "direct";
    case Family::ModuleExt: return "module-ext";
    case Family::ThetaLau: return "theta-lau";
    case Family::TLau: return "t-lau";
    case Family::Custom: return "custom";
  }
  return "unknown";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : {Family::Direct, Family::ModuleExt, Family::ThetaLau, Family::TLau, Family::Custom})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[uniform(rng, 0, items.size() - 1)];
}

struct Block {
  std::size_t dim;
  bool commutative;
  std::function<FiniteDimAlgebra()> make;
  std::string name;
};

std::vector<Block> blocks_up_to(std::size_t r) {
  std::vector<Block> out;
  out.push_back({1, true, [] { return catalog::complex_field(); }, "C"});
  for (std::size_t k = 2; k <= std::min<std::size_t>(r, 4); ++k)
    out.push_back({k, true, [k] { return catalog::truncated_polynomial(k); }, "C[t]/(t^" + std::to_string(k) + ")"});
  for (std::size_t k = 1; k <= std::min<std::size_t>(r, 3); ++k)
    out.push_back({k, true, [k] { return catalog::nilpotent_polynomial(k); }, "tC[t]/(t^" + std::to_string(k + 1) + ")"});
  for (std::size_t k = 1; k <= std::min<std::size_t>(r, 2); ++k)
    out.push_back({k, true, [k] { return catalog::zero_algebra(k); }, "0^" + std::to_string(k)});
  if (r >= 2) {
    out.push_back({2, false, [] { return catalog::matrix_unit_row(); }, "row"});
    out.push_back({2, false, [] { return catalog::matrix_unit_column(); }, "col"});
  }
  if (r >= 3) out.push_back({3, false, [] { return catalog::upper_triangular(); }, "T2"});
  if (r >= 4) out.push_back({4, false, [] { return catalog::matrix_algebra(2); }, "M2"});
  return out;
}

Matrix permutation_matrix(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix p = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) p(static_cast<Eigen::Index>(perm[i]), static_cast<Eigen::Index>(i)) = 1.0;
  return p;
}

double condition_number(const Matrix& m) {
  if (m.size() == 0) return 1.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  return s(s.size() - 1) > 0 ? s(0) / s(s.size() - 1) : HUGE_VAL;
}

double action_bound(const Tensor3& t) {
  double best = 0.0;
  for (std::size_t i = 0; i < t.extent(0); ++i)
    for (std::size_t j = 0; j < t.extent(1); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < t.extent(2); ++k) s += std::abs(t(i, j, k));
      best = std::max(best, s);
    }
  return best;
}

std::vector<Functional> character_list(const FiniteDimAlgebra& a, const Tolerances& tol) {
  std::vector<Functional> out;
  const GelfandSet set = characters(a, tol);
  for (const auto& c : set.members()) out.push_back(c.functional());
  return out;
}

/// Bimodule A/I with a.[x] = [ax], [x].a = [xa].
BimoduleAction quotient_bimodule(const FiniteDimAlgebra& a, const Quotient& q) {
  const std::size_t n = a.dim();
  const std::size_t d = static_cast<std::size_t>(q.lift.cols());
  Tensor3 left(n, d, d), right(d, n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < d; ++r) {
      const Element x(q.lift.col(static_cast<Eigen::Index>(r)));
      const Vector l = q.projection * multiply(a, Element::basis(n, i), x).coeffs;
      const Vector rr = q.projection * multiply(a, x, Element::basis(n, i)).coeffs;
      for (std::size_t s = 0; s < d; ++s) {
        left(i, r, s) = l(static_cast<Eigen::Index>(s));
        right(r, i, s) = rr(static_cast<Eigen::Index>(s));
      }
    }
  return BimoduleAction(n, d, std::move(left), std::move(right));
}

/// Coordinates k with e_k e_k = e_k.
std::vector<std::size_t> coordinate_idempotents(const FiniteDimAlgebra& b) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < b.dim(); ++k)
    if (max_abs(b.basis_product(k, k).coeffs - Element::basis(b.dim(), k).coeffs) == 0.0)
      out.push_back(k);
  return out;
}

struct Draft {
  FiniteDimAlgebra a, b;
  BimoduleAction action;
  std::string recipe;
  std::optional<Functional> theta;
  std::optional<Matrix> t;
};

Draft draft_direct(Rng& rng, std::size_t n, std::size_t m, const GeneratorOptions& opt) {
  Draft d;
  std::string ra, rb;
  d.a = random_block_algebra(rng, n, opt.commutative_only, &ra);
  d.b = random_block_algebra(rng, m, opt.commutative_only, &rb);
  d.action = BimoduleAction::zero(n, m);
  transport(d.a, d.b, d.action, random_basis(rng, n, false), random_basis(rng, m, false));
  d.recipe = "A = " + ra + "; B = " + rb;
  return d;
}

Draft draft_module_ext(Rng& rng, std::size_t n, std::size_t m, const GeneratorOptions& opt, const Tolerances& tol) {
  Draft d;
  std::string ra;
  d.a = random_block_algebra(rng, n, opt.commutative_only, &ra);
  const bool a_commutative = is_commutative(d.a, tol);

  std::vector<Functional> thetas = character_list(d.a, tol);
  thetas.push_back(Functional::zero(n));

  std::vector<std::pair<std::string, BimoduleAction>> large;
  if (n > 0) {
    large.emplace_back("A", regular_bimodule(d.a));
    if (!opt.commutative_only) {
      large.emplace_back("A_left", left_regular_bimodule(d.a));
      large.emplace_back("A_right", right_regular_bimodule(d.a));
    }
    std::vector<std::pair<std::string, Ideal>> ideals;
    ideals.emplace_back("rad", jacobson_radical(d.a, tol));
    ideals.emplace_back("[A,A]", commutator_ideal(d.a, tol));
    const std::size_t k = uniform(rng, 0, n - 1);
    ideals.emplace_back("(e" + std::to_string(k) + ")",
                        ideal_closure(d.a, Element::basis(n, k).coeffs, tol));
    for (const auto& [name, ideal] : ideals) {
      if (ideal.dim() == 0 || ideal.dim() == n) continue;
      const Quotient q = quotient(d.a, ideal, tol);
      // A/I is a symmetric bimodule only when A is commutative.
      if (opt.commutative_only && !a_commutative) continue;
      large.emplace_back("A/" + name, quotient_bimodule(d.a, q));
    }
  }

  BimoduleAction x = BimoduleAction::zero(n, 0);
  std::string pieces;
  std::size_t remaining = m;
  while (remaining > 0) {
    std::vector<std::size_t> fitting;
    for (std::size_t i = 0; i < large.size(); ++i)
      if (large[i].second.dim_b <= remaining && large[i].second.dim_b > 0) fitting.push_back(i);
    const std::size_t choice = uniform(rng, 0, fitting.size() + 1);
    std::string name;
    BimoduleAction piece;
    if (choice < fitting.size()) {
      name = large[fitting[choice]].first;
      piece = large[fitting[choice]].second;
    } else if (choice == fitting.size()) {
      const Functional& tl = pick(rng, thetas);
      const Functional& tr = opt.commutative_only ? tl : pick(rng, thetas);
      name = "chi";
      piece = character_bimodule(tl, tr, 1);
    } else {
      name = "0";
      piece = BimoduleAction::zero(n, 1);
    }
    pieces += (pieces.empty() ? "" : " + ") + name;
    remaining -= piece.dim_b;
    x = direct_sum(x, piece);
  }

  d.b = catalog::zero_algebra(m);
  d.action = x;
  transport(d.a, d.b, d.action, random_basis(rng, n, false), random_basis(rng, m, false));
  d.b = FiniteDimAlgebra(default_labels(m, "x"), d.b.mul());
  d.recipe = "A = " + ra + "; X = " + (pieces.empty() ? std::string("0") : pieces);
  return d;
}

Draft draft_theta_lau(Rng& rng, std::size_t n, std::size_t m, const GeneratorOptions& opt, const Tolerances& tol) {
  Draft d;
  std::string ra, rb;
  // Nilpotent blocks have no characters; redraw A a bounded number of times.
  for (int draw = 0; draw < 64; ++draw) {
    d.a = random_block_algebra(rng, n, opt.commutative_only, &ra);
    if (!character_list(d.a, tol).empty()) break;
  }
  d.b = random_block_algebra(rng, m, opt.commutative_only, &rb);
  BimoduleAction none = BimoduleAction::zero(n, 0);
  FiniteDimAlgebra empty = catalog::zero_algebra(0);
  transport(d.a, empty, none, random_basis(rng, n, false), Matrix());
  none = BimoduleAction::zero(0, m);
  empty = catalog::zero_algebra(0);
  transport(empty, d.b, none, Matrix(), random_basis(rng, m, false));

  const std::vector<Functional> thetas = character_list(d.a, tol);
  if (thetas.empty()) throw GenerationError("theta-lau: A has no characters");
  d.theta = pick(rng, thetas);
  d.action = theta_action(*d.theta, m);
  d.recipe = "A = " + ra + "; B = " + rb + "; theta in Delta(A)";
  return d;
}

Draft draft_t_lau(Rng& rng, std::size_t n, std::size_t m, const GeneratorOptions& opt, const Tolerances& tol) {
  Draft d;
  std::string ra, rb, kind;
  Matrix t;
  std::vector<std::string> kinds = {"zero", "char"};
  if (n == m) kinds.push_back("identity");
  if (n > m) kinds.push_back("projection");
  if (n < m) kinds.push_back("inclusion");
  kind = pick(rng, kinds);
  const auto N = static_cast<Eigen::Index>(n), M = static_cast<Eigen::Index>(m);

  if (kind == "identity") {
    d.a = random_block_algebra(rng, n, opt.commutative_only, &ra);
    d.b = d.a;
    rb = ra;
    t = Matrix::Identity(N, N);
  } else if (kind == "projection") {
    FiniteDimAlgebra c = random_block_algebra(rng, n - m, opt.commutative_only, &ra);
    d.b = random_block_algebra(rng, m, opt.commutative_only, &rb);
    d.a = catalog::direct_sum(d.b, c);
    ra = "(" + rb + ") + (" + ra + ")";
    t = Matrix::Zero(M, N);
    t.leftCols(M) = Matrix::Identity(M, M);
  } else if (kind == "inclusion") {
    d.a = random_block_algebra(rng, n, opt.commutative_only, &ra);
    FiniteDimAlgebra c = random_block_algebra(rng, m - n, opt.commutative_only, &rb);
    d.b = catalog::direct_sum(d.a, c);
    rb = "(" + ra + ") + (" + rb + ")";
    t = Matrix::Zero(M, N);
    t.topRows(N) = Matrix::Identity(N, N);
  } else {
    d.a = random_block_algebra(rng, n, opt.commutative_only, &ra);
    d.b = random_block_algebra(rng, m, opt.commutative_only, &rb);
    t = Matrix::Zero(M, N);
    if (kind == "char") {
      const std::vector<Functional> thetas = character_list(d.a, tol);
      const std::vector<std::size_t> idem = coordinate_idempotents(d.b);
      if (thetas.empty() || idem.empty()) {
        kind = "zero";
      } else {
        const Functional& theta = pick(rng, thetas);
        t.row(static_cast<Eigen::Index>(pick(rng, idem))) = theta.coeffs.transpose();
      }
    }
  }

  // Dense mixing can break ||T|| <= 1; fall back to phase permutations then.
  Matrix p = random_basis(rng, n, false), q = random_basis(rng, m, false);
  auto transported = [&](const Matrix& pp, const Matrix& qq) -> Matrix {
    if (n == 0 || m == 0) return Matrix::Zero(M, N);
    return qq.fullPivLu().solve(t * pp);
  };
  Matrix t2 = transported(p, q);
  if (l1_operator_norm(t2) > 1.0 + 1e-12) {
    p = random_basis(rng, n, true);
    q = random_basis(rng, m, true);
    t2 = transported(p, q);
  }
  BimoduleAction action = homomorphism_action(d.b, t);
  transport(d.a, d.b, action, p, q);
  d.t = t2;
  d.action = homomorphism_action(d.b, t2);
  d.recipe = "A = " + ra + "; B = " + rb + "; T = " + kind;
  return d;
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(splitmix64(seed) ^ index); }

FiniteDimAlgebra random_block_algebra(Rng& rng, std::size_t dim, bool commutative_only, std::string* recipe) {
  FiniteDimAlgebra out = catalog::zero_algebra(0);
  std::string names;
  std::size_t remaining = dim;
  while (remaining > 0) {
    std::vector<Block> options;
    for (auto& b : blocks_up_to(remaining))
      if (!commutative_only || b.commutative) options.push_back(b);
    const Block& b = pick(rng, options);
    out = out.dim() == 0 ? b.make() : catalog::direct_sum(out, b.make());
    names += (names.empty() ? "" : " + ") + b.name;
    remaining -= b.dim;
  }
  if (recipe) *recipe = names.empty() ? "0" : names;
  return FiniteDimAlgebra(default_labels(dim), out.mul());
}

Matrix random_basis(Rng& rng, std::size_t dim, bool monomial) {
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix phases = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double angle = coin(rng) ? 0.0 : uniform_real(rng, 0.0, 2.0 * M_PI);
    phases(i, i) = std::polar(1.0, angle);
  }
  Matrix base = permutation_matrix(rng, dim) * phases;
  if (monomial || coin(rng)) return base;
  const double eps = uniform_real(rng, 0.1, 0.5);
  Matrix noise(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) noise(i, j) = Scalar(uniform_real(rng, -1, 1), uniform_real(rng, -1, 1));
  Matrix mixed = base * (Matrix::Identity(n, n) + eps * noise);
  return condition_number(mixed) < 25.0 ? mixed : base;
}

void transport(FiniteDimAlgebra& a, FiniteDimAlgebra& b, BimoduleAction& action, const Matrix& p, const Matrix& q) {
  const std::size_t n = a.dim(), m = b.dim();
  FiniteDimAlgebra a2 = catalog::change_basis(a, p);
  FiniteDimAlgebra b2 = catalog::change_basis(b, q);
  Tensor3 left(n, m, m), right(m, n, m);
  if (m > 0 && n > 0) {
    const Eigen::FullPivLU<Matrix> q_lu(q);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < m; ++r) {
        const Element ai(p.col(static_cast<Eigen::Index>(i)));
        const Element br(q.col(static_cast<Eigen::Index>(r)));
        const Vector l = q_lu.solve(act_left(action, ai, br).coeffs);
        const Vector rr = q_lu.solve(act_right(action, br, ai).coeffs);
        for (std::size_t s = 0; s < m; ++s) {
          left(i, r, s) = l(static_cast<Eigen::Index>(s));
          right(r, i, s) = rr(static_cast<Eigen::Index>(s));
        }
      }
  }
  const double s = std::max({catalog::basis_product_bound(a2), catalog::basis_product_bound(b2), action_bound(left),
                             action_bound(right)});
  if (s > 1.0) {
    a2 = catalog::rescale(a2, 1.0 / s);
    b2 = catalog::rescale(b2, 1.0 / s);
    left *= 1.0 / s;
    right *= 1.0 / s;
  }
  a = FiniteDimAlgebra(a.labels(), a2.mul());
  b = FiniteDimAlgebra(b.labels(), b2.mul());
  action = BimoduleAction(n, m, std::move(left), std::move(right));
}

Instance generate_instance(const InstanceSpec& spec, const GeneratorOptions& options, const Tolerances& tol) {
  Instance inst;
  inst.family = spec.family;
  inst.seed = spec.seed;

  if (spec.family == Family::Custom) {
    inst.a = io::load_algebra(spec.a_path);
    inst.b = io::load_algebra(spec.b_path);
    inst.action = io::load_action(spec.action_path, inst.a.dim(), inst.b.dim());
    inst.recipe = "files";
    return inst;
  }

  Rng dims_rng(splitmix64(spec.seed));
  const std::size_t lo_a = spec.family == Family::ThetaLau ? 1 : 0;
  const std::size_t n = spec.dim_a.value_or(uniform(dims_rng, lo_a, options.max_dim));
  const std::size_t m = spec.dim_b.value_or(uniform(dims_rng, 0, options.max_dim));

  std::string last_failure = "no attempt made";
  for (int attempt = 1; attempt <= options.retry_budget; ++attempt) {
    Rng rng(splitmix64(spec.seed ^ (0xa5a5a5a5ULL * static_cast<std::uint64_t>(attempt))));
    try {
      Draft d;
      switch (spec.family) {
        case Family::Direct: d = draft_direct(rng, n, m, options); break;
        case Family::ModuleExt: d = draft_module_ext(rng, n, m, options, tol); break;
        case Family::ThetaLau: d = draft_theta_lau(rng, n, m, options, tol); break;
        case Family::TLau: d = draft_t_lau(rng, n, m, options, tol); break;
        case Family::Custom: break;
      }
      require_algebraic(d.a, d.b, d.action, tol);
      inst.a = std::move(d.a);
      inst.b = std::move(d.b);
      inst.action = std::move(d.action);
      inst.recipe = std::move(d.recipe);
      inst.theta = std::move(d.theta);
      inst.t = std::move(d.t);
      inst.attempts = attempt;
      return inst;
    } catch (const Error& e) {
      last_failure = e.what();
    }
  }
  throw GenerationError(to_string(spec.family) + " instance (dims " + std::to_string(n) + ", " + std::to_string(m) +
                        ") not generated within " + std::to_string(options.retry_budget) +
                        " attempts: " + last_failure);
}

}  // namespace balg
