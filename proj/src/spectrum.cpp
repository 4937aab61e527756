#include "balg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "balg/bowtie.hpp"
#include "balg/errors.hpp"
#include "balg/linalg.hpp"

namespace balg {

// ---------------------------------------------------------------------------
// Character / GelfandSet

std::optional<Character> Character::try_verify(const FiniteDimAlgebra& a, Functional phi, double tol) {
  if (phi.size() != a.dim()) return std::nullopt;
  if (!(linf_norm(phi) > 0.0)) return std::nullopt;
  const double r = multiplicativity_residual(a, phi);
  if (!(r <= tol)) return std::nullopt;
  return Character(std::move(phi), r);
}

Character Character::verified(const FiniteDimAlgebra& a, Functional phi, double tol) {
  if (phi.size() != a.dim()) throw DimensionError("Character: functional length mismatch");
  auto c = try_verify(a, phi, tol);
  if (!c) {
    std::ostringstream os;
    os << "Character: functional is zero or not multiplicative (residual " << multiplicativity_residual(a, phi)
       << " > " << tol << ")";
    throw NumericalError(os.str());
  }
  return *c;
}

std::optional<std::size_t> GelfandSet::find(const Functional& phi) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (linf_distance(members_[i].functional(), phi) <= tolerance_) return i;
  return std::nullopt;
}

bool GelfandSet::insert(Character c) {
  if (find(c.functional())) return false;
  members_.push_back(std::move(c));
  return true;
}

void GelfandSet::canonicalize() {
  auto key = [](const Character& c) {
    std::vector<double> k;
    for (std::size_t i = 0; i < c.functional().size(); ++i) {
      k.push_back(std::round(c.functional()[i].real() * 1e9));
      k.push_back(std::round(c.functional()[i].imag() * 1e9));
    }
    return k;
  };
  std::stable_sort(members_.begin(), members_.end(),
                   [&](const Character& x, const Character& y) { return key(x) < key(y); });
}

SetComparison compare_sets(const GelfandSet& first, const GelfandSet& second, double tol) {
  SetComparison out;
  std::vector<bool> used(second.size(), false);
  for (const auto& c : first.members()) {
    bool matched = false;
    for (std::size_t j = 0; j < second.size(); ++j) {
      if (used[j]) continue;
      if (linf_distance(c.functional(), second.members()[j].functional()) <= tol) {
        used[j] = matched = true;
        break;
      }
    }
    if (!matched) out.only_in_first.push_back(c.functional());
  }
  for (std::size_t j = 0; j < second.size(); ++j)
    if (!used[j]) out.only_in_second.push_back(second.members()[j].functional());
  out.equal = out.only_in_first.empty() && out.only_in_second.empty();
  return out;
}

// ---------------------------------------------------------------------------
// Ideals and quotients

bool Ideal::contains(const Element& x, double tol) const {
  if (x.size() != parent_dim) return false;
  return linalg::distance_from_span(basis, x.coeffs) <= tol;
}

namespace {

// Columns e_i v and v e_i for every basis element e_i and column v.
Matrix two_sided_products(const FiniteDimAlgebra& a, const Matrix& vectors) {
  const std::size_t n = a.dim();
  Matrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(2 * n) * vectors.cols());
  Eigen::Index col = 0;
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    const Element v(vectors.col(c));
    for (std::size_t i = 0; i < n; ++i) {
      const Element e = Element::basis(n, i);
      out.col(col++) = multiply(a, e, v).coeffs;
      out.col(col++) = multiply(a, v, e).coeffs;
    }
  }
  return out;
}

}  // namespace

Ideal ideal_closure(const FiniteDimAlgebra& a, const Matrix& generators, const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  if (generators.rows() != n) throw DimensionError("ideal_closure: generator length mismatch");
  Matrix basis = linalg::extend_span(Matrix::Zero(n, 0), generators, tol.rank);
  Eigen::Index processed = 0;
  while (processed < basis.cols()) {
    const Matrix fresh = basis.rightCols(basis.cols() - processed);
    processed = basis.cols();
    basis = linalg::extend_span(basis, two_sided_products(a, fresh), tol.rank);
  }
  return Ideal{basis, a.dim()};
}

double ideal_residual(const FiniteDimAlgebra& a, const Ideal& ideal) {
  if (ideal.dim() == 0) return 0.0;
  return linalg::distance_from_span(ideal.basis, two_sided_products(a, ideal.basis));
}

Ideal commutator_ideal(const FiniteDimAlgebra& a, const Tolerances& tol) {
  const std::size_t n = a.dim();
  Matrix gens = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n * n));
  Eigen::Index col = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gens.col(col++) = a.basis_product(i, j).coeffs - a.basis_product(j, i).coeffs;
  return ideal_closure(a, gens, tol);
}

Quotient quotient(const FiniteDimAlgebra& a, const Ideal& ideal, const Tolerances& tol) {
  const std::size_t n = a.dim();
  if (ideal.parent_dim != n || static_cast<std::size_t>(ideal.basis.rows()) != n)
    throw DimensionError("quotient: ideal belongs to an algebra of another dimension");
  const double residual = ideal_residual(a, ideal);
  if (!(residual <= tol.assoc)) {
    std::ostringstream os;
    os << "quotient: subspace is not a two-sided ideal (residual " << residual << ")";
    throw ConstructionError(os.str());
  }
  const std::size_t k = ideal.dim();
  const std::size_t q = n - k;
  const auto nn = static_cast<Eigen::Index>(n);

  // Pick the q coordinate vectors best spanning a complement: pivot columns of
  // the orthogonal projector onto ker(ideal)^perp's complement.
  std::vector<std::size_t> chosen;
  if (q > 0) {
    Matrix complement_projector = Matrix::Identity(nn, nn);
    if (k > 0) complement_projector -= ideal.basis * ideal.basis.adjoint();
    Eigen::ColPivHouseholderQR<Matrix> qr(complement_projector);
    const auto& perm = qr.colsPermutation().indices();
    for (std::size_t r = 0; r < q; ++r) chosen.push_back(static_cast<std::size_t>(perm(static_cast<Eigen::Index>(r))));
    std::sort(chosen.begin(), chosen.end());
  }

  Matrix lift = Matrix::Zero(nn, static_cast<Eigen::Index>(q));
  for (std::size_t r = 0; r < q; ++r) lift(static_cast<Eigen::Index>(chosen[r]), static_cast<Eigen::Index>(r)) = 1.0;
  Matrix projection(static_cast<Eigen::Index>(q), nn);
  if (q > 0) {
    const Matrix frame = linalg::hstack(lift, ideal.basis);
    Eigen::FullPivLU<Matrix> lu(frame);
    if (!lu.isInvertible()) throw NumericalError("quotient: complement selection is degenerate");
    projection = lu.inverse().topRows(static_cast<Eigen::Index>(q));
  }

  Tensor3 mul(q, q, q);
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < q; ++r) {
    labels.push_back(a.labels()[chosen[r]]);
    for (std::size_t s = 0; s < q; ++s) {
      const Vector coords = projection * a.basis_product(chosen[r], chosen[s]).coeffs;
      for (std::size_t t = 0; t < q; ++t) mul(r, s, t) = coords(static_cast<Eigen::Index>(t));
    }
  }
  return Quotient{FiniteDimAlgebra(std::move(labels), std::move(mul)), projection, lift};
}

// ---------------------------------------------------------------------------
// Radical

std::optional<std::size_t> nilpotency_index(const FiniteDimAlgebra& a, const Ideal& ideal, const Tolerances& tol) {
  if (ideal.dim() == 0) return 0;
  Matrix power = ideal.basis;
  for (std::size_t k = 2; k <= ideal.dim() + 1; ++k) {
    Matrix products(static_cast<Eigen::Index>(a.dim()), power.cols() * ideal.basis.cols());
    Eigen::Index col = 0;
    for (Eigen::Index r = 0; r < power.cols(); ++r)
      for (Eigen::Index s = 0; s < ideal.basis.cols(); ++s)
        products.col(col++) = multiply(a, Element(power.col(r)), Element(ideal.basis.col(s))).coeffs;
    power = linalg::orthonormal_span(products, tol.rank);
    if (power.cols() == 0) return k;
  }
  return std::nullopt;
}

Ideal jacobson_radical(const FiniteDimAlgebra& a, const Tolerances& tol) {
  const std::size_t n = a.dim();
  const Unitization u = unitize(a);
  const std::size_t dim_u = n + 1;

  std::vector<Matrix> ops;
  ops.reserve(dim_u);
  for (std::size_t i = 0; i < dim_u; ++i) ops.push_back(u.algebra.left_multiplication(Element::basis(dim_u, i)));

  // Trace form G(x, y) = tr(L_x L_y), plus the row pinning the unit coordinate to zero.
  Matrix system = Matrix::Zero(static_cast<Eigen::Index>(dim_u + 1), static_cast<Eigen::Index>(dim_u));
  for (std::size_t i = 0; i < dim_u; ++i)
    for (std::size_t j = 0; j < dim_u; ++j)
      system(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (ops[i] * ops[j]).trace();
  system(static_cast<Eigen::Index>(dim_u), 0) = 1.0;

  const Matrix kernel = linalg::null_space(system, tol.rank);
  Ideal rad{Matrix::Zero(static_cast<Eigen::Index>(n), 0), n};
  if (kernel.cols() > 0 && n > 0) rad.basis = linalg::orthonormal_span(kernel.bottomRows(static_cast<Eigen::Index>(n)), tol.rank);

  const double residual = ideal_residual(a, rad);
  if (!(residual <= 1e3 * tol.assoc)) {
    std::ostringstream os;
    os << "jacobson_radical: trace-form kernel is not an ideal (residual " << residual << ")";
    throw NumericalError(os.str());
  }
  if (!nilpotency_index(a, rad, tol)) throw NumericalError("jacobson_radical: trace-form kernel is not nilpotent");
  return rad;
}

bool is_semisimple(const FiniteDimAlgebra& a, const Tolerances& tol) { return jacobson_radical(a, tol).dim() == 0; }

// ---------------------------------------------------------------------------
// Characters

GelfandSet characters(const FiniteDimAlgebra& a, const Tolerances& tol, std::uint64_t seed) {
  const std::size_t n = a.dim();
  const Unitization u = unitize(a);
  const Quotient abelian = quotient(u.algebra, commutator_ideal(u.algebra, tol), tol);
  const Quotient reduced = quotient(abelian.algebra, jacobson_radical(abelian.algebra, tol), tol);
  const FiniteDimAlgebra& s = reduced.algebra;
  const std::size_t d = s.dim();
  const Matrix pullback = reduced.projection * abelian.projection;  // d x (n+1)
  const Vector unit = pullback.col(0);

  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < d; ++i) ops.push_back(s.left_multiplication(Element::basis(d, i)));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int attempt = 0; attempt < tol.character_retries; ++attempt) {
    Matrix combo = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) combo += coef(rng) * ops[i];

    // Left eigenvectors: w^T M = lambda w^T.
    Eigen::ComplexEigenSolver<Matrix> eig(combo.transpose());
    if (eig.info() != Eigen::Success) continue;
    const Vector& lambda = eig.eigenvalues();
    const double scale = std::max(1.0, lambda.size() ? lambda.cwiseAbs().maxCoeff() : 0.0);
    bool separated = true;
    for (Eigen::Index i = 0; i < lambda.size() && separated; ++i)
      for (Eigen::Index j = i + 1; j < lambda.size(); ++j)
        if (std::abs(lambda(i) - lambda(j)) < 1e-6 * scale) {
          separated = false;
          break;
        }
    if (!separated) continue;

    GelfandSet out(tol.dedup);
    bool ok = true;
    for (Eigen::Index c = 0; c < lambda.size() && ok; ++c) {
      const Vector w = eig.eigenvectors().col(c);
      const Scalar at_unit = w.transpose() * unit;
      if (std::abs(at_unit) < 1e-12) {
        ok = false;
        break;
      }
      const Functional on_reduced(w / at_unit);
      if (!(multiplicativity_residual(s, on_reduced) <= tol.character)) {
        ok = false;
        break;
      }
      const Vector on_unitization = pullback.transpose() * on_reduced.coeffs;
      Functional restricted(on_unitization.tail(static_cast<Eigen::Index>(n)));
      if (linf_norm(restricted) <= tol.dedup) continue;  // the character vanishing on A
      auto verified = Character::try_verify(a, std::move(restricted), tol.character);
      if (!verified) {
        ok = false;
        break;
      }
      out.insert(std::move(*verified));
    }
    if (!ok) continue;
    out.canonicalize();
    return out;
  }
  std::ostringstream os;
  os << "characters: no separating combination after " << tol.character_retries << " attempts (seed " << seed << ")";
  throw NumericalError(os.str());
}

GelfandSet characters_bruteforce(const FiniteDimAlgebra& a, const Tolerances& tol, std::uint64_t seed, int starts) {
  const std::size_t n = a.dim();
  const auto nn = static_cast<Eigen::Index>(n);
  GelfandSet out(tol.dedup);
  if (n == 0) return out;

  auto residual_vector = [&](const Vector& z) {
    Vector f(nn * nn);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Scalar v = z(static_cast<Eigen::Index>(i)) * z(static_cast<Eigen::Index>(j));
        for (std::size_t k = 0; k < n; ++k) v -= a.c(i, j, k) * z(static_cast<Eigen::Index>(k));
        f(static_cast<Eigen::Index>(i * n + j)) = v;
      }
    return f;
  };
  auto jacobian = [&](const Vector& z) {
    Matrix jac = Matrix::Zero(nn * nn, nn);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto row = static_cast<Eigen::Index>(i * n + j);
        jac(row, static_cast<Eigen::Index>(i)) += z(static_cast<Eigen::Index>(j));
        jac(row, static_cast<Eigen::Index>(j)) += z(static_cast<Eigen::Index>(i));
        for (std::size_t l = 0; l < n; ++l) jac(row, static_cast<Eigen::Index>(l)) -= a.c(i, j, l);
      }
    return jac;
  };

  std::vector<Character> converged;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.0, 1.2), angle(0.0, 2.0 * M_PI);
  for (int start = 0; start < starts; ++start) {
    Vector z(nn);
    for (Eigen::Index i = 0; i < nn; ++i) z(i) = std::polar(radius(rng), angle(rng));
    Vector f = residual_vector(z);
    double cost = f.squaredNorm();
    double mu = 1e-3;
    for (int iter = 0; iter < 250 && cost > 1e-48; ++iter) {
      const Matrix jac = jacobian(z);
      const Matrix normal = jac.adjoint() * jac + mu * Matrix::Identity(nn, nn);
      const Vector step = normal.ldlt().solve(-(jac.adjoint() * f));
      const Vector trial = z + step;
      const Vector trial_f = residual_vector(trial);
      const double trial_cost = trial_f.squaredNorm();
      if (trial_cost < cost) {
        z = trial;
        f = trial_f;
        cost = trial_cost;
        mu = std::max(mu / 3.0, 1e-18);
        if (step.norm() < 1e-16) break;
      } else {
        mu *= 4.0;
        if (mu > 1e10) break;
      }
    }
    Functional phi(z);
    if (linf_norm(phi) <= tol.dedup) continue;
    if (auto c = Character::try_verify(a, std::move(phi), 1e-10)) converged.push_back(std::move(*c));
  }

  // Roots of multiplicity k are only located to about eps^(1/k), so starts
  // scatter around them. Cluster greedily by residual and keep centroids.
  std::stable_sort(converged.begin(), converged.end(),
                   [](const Character& x, const Character& y) { return x.residual() < y.residual(); });
  std::vector<bool> used(converged.size(), false);
  for (std::size_t i = 0; i < converged.size(); ++i) {
    if (used[i]) continue;
    Vector sum = Vector::Zero(nn);
    int members = 0;
    for (std::size_t j = i; j < converged.size(); ++j) {
      if (used[j] || linf_distance(converged[i].functional(), converged[j].functional()) > kBruteforceClusterRadius)
        continue;
      used[j] = true;
      sum += converged[j].functional().coeffs;
      ++members;
    }
    // Zero solves the same system; its neighbourhood is discarded at the same radius.
    const Functional mean(Vector(sum / static_cast<double>(members)));
    if (linf_norm(mean) <= kBruteforceClusterRadius) continue;
    auto centroid = Character::try_verify(a, mean, 1e-10);
    out.insert(centroid ? std::move(*centroid) : converged[i]);
  }
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// Gelfand space of A⋈B

namespace {

Functional concat(const Functional& phi, const Functional& psi) {
  Vector v(static_cast<Eigen::Index>(phi.size() + psi.size()));
  v << phi.coeffs, psi.coeffs;
  return Functional(v);
}

// max |psi(a.b) - phi(a) psi(b)| and |psi(b.a) - phi(a) psi(b)| over basis a, b
double compatibility_defect(const BimoduleAction& action, const Functional& phi, const Functional& psi) {
  double worst = 0.0;
  for (std::size_t i = 0; i < action.dim_a; ++i)
    for (std::size_t p = 0; p < action.dim_b; ++p) {
      Scalar left{}, right{};
      for (std::size_t q = 0; q < action.dim_b; ++q) {
        left += action.left(i, p, q) * psi[q];
        right += action.right(p, i, q) * psi[q];
      }
      const Scalar target = phi[i] * psi[p];
      worst = std::max({worst, std::abs(left - target), std::abs(right - target)});
    }
  return worst;
}

}  // namespace

GelfandEF gelfand_ef(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                     const Tolerances& tol, std::uint64_t seed) {
  const BowtieAlgebra bt = build_bowtie(a, b, action, tol);
  const GelfandSet delta_a = characters(a, tol, seed);
  const GelfandSet delta_b = characters(b, tol, seed);

  GelfandEF out{GelfandSet(tol.dedup), GelfandSet(tol.dedup), {}};
  auto add = [&](GelfandSet& target, Functional candidate) {
    if (auto c = Character::try_verify(bt.carrier, candidate, tol.character))
      target.insert(std::move(*c));
    else
      out.unverified.push_back(std::move(candidate));
  };

  for (const auto& phi : delta_a.members()) add(out.e, concat(phi.functional(), Functional::zero(b.dim())));

  std::vector<Functional> phi_candidates;
  for (const auto& phi : delta_a.members()) phi_candidates.push_back(phi.functional());
  phi_candidates.push_back(Functional::zero(a.dim()));
  for (const auto& psi : delta_b.members())
    for (const auto& phi : phi_candidates)
      if (compatibility_defect(action, phi, psi.functional()) <= tol.character)
        add(out.f, concat(phi, psi.functional()));

  out.e.canonicalize();
  out.f.canonicalize();
  return out;
}

Verdict verify_prop24(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                      const Tolerances& tol, std::uint64_t seed) {
  const BowtieAlgebra bt = build_bowtie(a, b, action, tol);
  const GelfandSet spectrum = characters(bt.carrier, tol, seed);
  const GelfandEF ef = gelfand_ef(a, b, action, tol, seed);

  GelfandSet predicted(tol.dedup);
  for (const auto& c : ef.e.members()) predicted.insert(c);
  for (const auto& c : ef.f.members()) predicted.insert(c);
  const SetComparison cmp = compare_sets(spectrum, predicted, tol.dedup);

  Verdict v;
  v.check = "gelfand-space";
  v.biconditional = false;
  v.lhs = v.rhs = true;
  v.agree = cmp.equal && ef.unverified.empty();
  std::ostringstream note;
  note << "|Δ(A⋈B)| = " << spectrum.size() << ", |E| = " << ef.e.size() << ", |F| = " << ef.f.size();
  v.note = note.str();
  auto describe = [](const std::string& tag, const Functional& phi) {
    std::ostringstream os;
    os << tag << " [";
    for (std::size_t i = 0; i < phi.size(); ++i) os << (i ? ", " : "") << phi[i].real() << (phi[i].imag() >= 0 ? "+" : "") << phi[i].imag() << "i";
    os << "]";
    return os.str();
  };
  for (const auto& phi : cmp.only_in_first) v.witnesses.push_back(describe("only in Δ(A⋈B)", phi));
  for (const auto& phi : cmp.only_in_second) v.witnesses.push_back(describe("only in E ∪ F", phi));
  for (const auto& phi : ef.unverified) v.witnesses.push_back(describe("E ∪ F member not multiplicative", phi));
  double worst = 0.0;
  for (const auto& c : spectrum.members()) worst = std::max(worst, c.residual());
  v.residuals.push_back({"max character residual", worst, tol.character, ""});
  return v;
}

Verdict check_corollary25(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                          const Tolerances& tol) {
  if (!is_commutative(a, tol)) throw HypothesisError("semisimplicity: A is not commutative");
  if (!is_commutative(b, tol)) throw HypothesisError("semisimplicity: B is not commutative");
  if (!is_symmetric(action, tol)) throw HypothesisError("semisimplicity: the action is not symmetric");
  if (!validate_bimodule(a, b, action, tol).pass() || !is_algebraic(a, b, action, tol))
    throw HypothesisError("semisimplicity: B is not an algebraic Banach A-bimodule");
  const BowtieAlgebra bt = build_bowtie(a, b, action, tol);

  const Ideal rad = jacobson_radical(bt.carrier, tol);
  const Ideal rad_a = jacobson_radical(a, tol);
  const Ideal rad_b = jacobson_radical(b, tol);
  Verdict v;
  v.check = "semisimplicity";
  v.lhs = rad.dim() == 0;
  v.rhs = rad_a.dim() == 0 && rad_b.dim() == 0;
  v.agree = v.lhs == v.rhs;
  v.note = "dim rad(A⋈B) = " + std::to_string(rad.dim()) + ", dim rad(A) = " + std::to_string(rad_a.dim()) +
           ", dim rad(B) = " + std::to_string(rad_b.dim());
  return v;
}

}  // namespace balg
