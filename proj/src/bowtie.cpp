#include "balg/bowtie.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "balg/errors.hpp"
#include "balg/linalg.hpp"

namespace balg {

std::string Verdict::label() const {
  if (!agree) return "mismatch";
  if (!biconditional) return "agree";
  if (lhs && rhs) return "agree (both true)";
  if (!lhs && !rhs) return "agree (both false)";
  return "agree";
}

namespace {

Element concat(const Element& a, const Element& b) {
  Vector v(static_cast<Eigen::Index>(a.size() + b.size()));
  v << a.coeffs, b.coeffs;
  return Element(v);
}

std::string describe_failure(const std::string& what, const Residual& r) {
  std::ostringstream os;
  os << what << ": " << r.name << " fails (residual " << r.value << " > " << r.tolerance;
  if (!r.location.empty()) os << " at " << r.location;
  os << ")";
  return os.str();
}

void refuse_on_failure(const ValidationReport& report, const std::string& what) {
  if (const auto* r = report.first_failure()) throw ConstructionError(describe_failure(what, *r));
}

}  // namespace

Element BowtieAlgebra::embed_a(const Element& a) const {
  if (a.size() != dim_a) throw DimensionError("embed_a: element length mismatch");
  return concat(a, Element::zero(dim_b));
}

Element BowtieAlgebra::embed_b(const Element& b) const {
  if (b.size() != dim_b) throw DimensionError("embed_b: element length mismatch");
  return concat(Element::zero(dim_a), b);
}

Element BowtieAlgebra::pair(const Element& a, const Element& b) const {
  if (a.size() != dim_a || b.size() != dim_b) throw DimensionError("pair: element length mismatch");
  return concat(a, b);
}

Element BowtieAlgebra::project_a(const Element& u) const {
  if (u.size() != dim_a + dim_b) throw DimensionError("project_a: element length mismatch");
  return Element(u.coeffs.head(static_cast<Eigen::Index>(dim_a)));
}

Element BowtieAlgebra::project_b(const Element& u) const {
  if (u.size() != dim_a + dim_b) throw DimensionError("project_b: element length mismatch");
  return Element(u.coeffs.tail(static_cast<Eigen::Index>(dim_b)));
}

FiniteDimAlgebra assemble_bowtie(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action) {
  const std::size_t n = a.dim(), m = b.dim();
  if (action.dim_a != n || action.dim_b != m) throw DimensionError("assemble_bowtie: action dimensions do not match");
  Tensor3 mul(n + m, n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mul(i, j, k) = a.c(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        mul(i, n + p, n + q) = action.left(i, p, q);
        mul(n + p, i, n + q) = action.right(p, i, q);
      }
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t r = 0; r < m; ++r) mul(n + p, n + q, n + r) = b.c(p, q, r);

  std::vector<std::string> labels;
  labels.reserve(n + m);
  for (const auto& l : a.labels()) labels.push_back("A." + l);
  for (const auto& l : b.labels()) labels.push_back("B." + l);
  return FiniteDimAlgebra(std::move(labels), std::move(mul));
}

BimoduleAction require_algebraic(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                                 const Tolerances& tol) {
  refuse_on_failure(validate(a, tol), "algebra A");
  refuse_on_failure(validate(b, tol), "algebra B");
  if (action.dim_a != a.dim() || action.dim_b != b.dim())
    throw ConstructionError("bimodule action dimensions do not match the algebras");
  refuse_on_failure(validate_bimodule(a, b, action, tol), "bimodule");
  refuse_on_failure(check_algebraic(a, b, action, tol), "algebraic bimodule");
  return action;
}

BowtieAlgebra build_bowtie(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                           const Tolerances& tol) {
  require_algebraic(a, b, action, tol);
  BowtieAlgebra out{assemble_bowtie(a, b, action), a.dim(), b.dim()};
  refuse_on_failure(validate(out.carrier, tol), "assembled product");
  return out;
}

BowtieAlgebra direct_product(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const Tolerances& tol) {
  return build_bowtie(a, b, BimoduleAction::zero(a.dim(), b.dim()), tol);
}

BowtieAlgebra module_extension(const FiniteDimAlgebra& a, const BimoduleAction& x_action, const Tolerances& tol) {
  const std::size_t m = x_action.dim_b;
  const FiniteDimAlgebra x(default_labels(m, "x"), Tensor3(m, m, m));
  return build_bowtie(a, x, x_action, tol);
}

BowtieAlgebra theta_lau(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const Functional& theta,
                        const Tolerances& tol) {
  if (theta.size() != a.dim()) throw ConstructionError("theta_lau: functional length does not match dim(A)");
  if (linf_norm(theta) <= tol.character) throw ConstructionError("theta_lau: theta is the zero functional");
  const double residual = multiplicativity_residual(a, theta);
  if (!(residual <= tol.character)) {
    std::ostringstream os;
    os << "theta_lau: theta is not multiplicative (residual " << residual << ")";
    throw ConstructionError(os.str());
  }
  if (linf_norm(theta) > 1.0 + tol.norm) throw ConstructionError("theta_lau: |theta| exceeds 1");
  return build_bowtie(a, b, theta_action(theta, b.dim()), tol);
}

double homomorphism_residual(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const Matrix& t) {
  const std::size_t n = a.dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector lhs = t * a.basis_product(i, j).coeffs;
      const Element rhs = multiply(b, Element(t.col(static_cast<Eigen::Index>(i))),
                                   Element(t.col(static_cast<Eigen::Index>(j))));
      const double r = lhs.size() ? max_abs(lhs - rhs.coeffs) : 0.0;
      worst = std::isnan(r) ? HUGE_VAL : std::max(worst, r);
    }
  return worst;
}

double l1_operator_norm(const Matrix& t) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < t.cols(); ++j) worst = std::max(worst, t.col(j).cwiseAbs().sum());
  return worst;
}

BowtieAlgebra t_lau(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const Matrix& t, const Tolerances& tol) {
  if (static_cast<std::size_t>(t.rows()) != b.dim() || static_cast<std::size_t>(t.cols()) != a.dim())
    throw ConstructionError("t_lau: T must be a dim(B) x dim(A) matrix");
  const double residual = homomorphism_residual(a, b, t);
  if (!(residual <= tol.assoc)) {
    std::ostringstream os;
    os << "t_lau: T is not an algebra homomorphism (residual " << residual << ")";
    throw ConstructionError(os.str());
  }
  if (l1_operator_norm(t) > 1.0 + tol.norm) throw ConstructionError("t_lau: |T| exceeds 1");
  return build_bowtie(a, b, homomorphism_action(b, t), tol);
}

// ---------------------------------------------------------------------------
// Characterization checkers

Verdict check_prop21(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                     const Tolerances& tol) {
  const BowtieAlgebra bt = build_bowtie(a, b, action, tol);
  Verdict v;
  v.check = "commutativity";
  v.lhs = is_commutative(bt.carrier, tol);
  const bool ca = is_commutative(a, tol), cb = is_commutative(b, tol), sym = is_symmetric(action, tol);
  v.rhs = ca && cb && sym;
  v.agree = v.lhs == v.rhs;
  v.note = std::string("A commutative: ") + (ca ? "yes" : "no") + ", B commutative: " + (cb ? "yes" : "no") +
           ", action symmetric: " + (sym ? "yes" : "no");
  return v;
}

namespace {

// Stacked linear conditions on z = (a0, b0). With two_sided, the rows encode
//   a0 e_i = e_i = e_i a0,  b0.e_i = 0 = e_i.b0,  a0.f_p + b0 f_p = f_p = f_p.a0 + f_p b0;
// otherwise only the left-identity half:
//   a0 e_i = e_i,  b0.e_i = 0,  a0.f_p + b0 f_p = f_p.
struct ConditionSystem {
  Matrix system;
  Vector rhs;
};

ConditionSystem identity_conditions(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                                    bool two_sided) {
  const std::size_t n = a.dim(), m = b.dim();
  const int sides = two_sided ? 2 : 1;
  const auto rows = static_cast<Eigen::Index>(sides * (n * n + n * m + m * m));
  ConditionSystem cs{Matrix::Zero(rows, static_cast<Eigen::Index>(n + m)), Vector::Zero(rows)};
  Eigen::Index row = 0;
  auto col_a = [](std::size_t j) { return static_cast<Eigen::Index>(j); };
  auto col_b = [n](std::size_t r) { return static_cast<Eigen::Index>(n + r); };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k, ++row) {
      for (std::size_t j = 0; j < n; ++j) cs.system(row, col_a(j)) = a.c(j, i, k);
      cs.rhs(row) = i == k ? 1.0 : 0.0;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < m; ++q, ++row)
      for (std::size_t p = 0; p < m; ++p) cs.system(row, col_b(p)) = action.right(p, i, q);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q, ++row) {
      for (std::size_t j = 0; j < n; ++j) cs.system(row, col_a(j)) = action.left(j, p, q);
      for (std::size_t r = 0; r < m; ++r) cs.system(row, col_b(r)) = b.c(r, p, q);
      cs.rhs(row) = p == q ? 1.0 : 0.0;
    }
  if (two_sided) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k, ++row) {
        for (std::size_t j = 0; j < n; ++j) cs.system(row, col_a(j)) = a.c(i, j, k);
        cs.rhs(row) = i == k ? 1.0 : 0.0;
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t q = 0; q < m; ++q, ++row)
        for (std::size_t p = 0; p < m; ++p) cs.system(row, col_b(p)) = action.left(i, p, q);
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q, ++row) {
        for (std::size_t j = 0; j < n; ++j) cs.system(row, col_a(j)) = action.right(p, j, q);
        for (std::size_t r = 0; r < m; ++r) cs.system(row, col_b(r)) = b.c(p, r, q);
        cs.rhs(row) = p == q ? 1.0 : 0.0;
      }
  }
  return cs;
}

// Direct evaluation of the block conditions through the public operations.
double identity_condition_defect(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                                 const Element& a0, const Element& b0, bool two_sided) {
  const std::size_t n = a.dim(), m = b.dim();
  double worst = 0.0;
  auto track = [&worst](const Element& got, const Element& want) {
    if (got.size()) worst = std::max(worst, max_abs(got.coeffs - want.coeffs));
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Element e = Element::basis(n, i);
    track(multiply(a, a0, e), e);
    track(act_right(action, b0, e), Element::zero(m));
    if (two_sided) {
      track(multiply(a, e, a0), e);
      track(act_left(action, e, b0), Element::zero(m));
    }
  }
  for (std::size_t p = 0; p < m; ++p) {
    const Element f = Element::basis(m, p);
    track(act_left(action, a0, f) + multiply(b, b0, f), f);
    if (two_sided) track(act_right(action, f, a0) + multiply(b, f, b0), f);
  }
  return worst;
}

double identity_defect(const FiniteDimAlgebra& carrier, const Element& u, bool two_sided) {
  const std::size_t n = carrier.dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Element e = Element::basis(n, i);
    worst = std::max(worst, max_abs(multiply(carrier, u, e).coeffs - e.coeffs));
    if (two_sided) worst = std::max(worst, max_abs(multiply(carrier, e, u).coeffs - e.coeffs));
  }
  return worst;
}

}  // namespace

Verdict check_prop22(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                     const Tolerances& tol) {
  const BowtieAlgebra bt = build_bowtie(a, b, action, tol);
  Verdict v;
  v.check = "identity";
  const auto identity = find_identity(bt.carrier, tol);
  const auto cs = identity_conditions(a, b, action, true);
  const auto sol = linalg::solve(cs.system, cs.rhs, tol.identity, tol.rank);
  v.lhs = identity.has_value();
  v.rhs = sol.consistent;
  v.residuals.push_back({"condition system residual", sol.residual, tol.identity, ""});
  v.agree = v.lhs == v.rhs;
  if (v.lhs && v.rhs) {
    const Element a0 = bt.project_a(*identity), b0 = bt.project_b(*identity);
    const double forward = identity_condition_defect(a, b, action, a0, b0, true);
    const Element z(sol.particular);
    const double converse = identity_defect(bt.carrier, z, true);
    const double gap = max_abs(identity->coeffs - z.coeffs);
    v.residuals.push_back({"conditions at identity of A⋈B", forward, tol.identity, ""});
    v.residuals.push_back({"condition solution as identity of A⋈B", converse, tol.identity, ""});
    v.residuals.push_back({"distance between the two identities", gap, 1e3 * tol.identity, ""});
    for (const auto& r : v.residuals)
      if (!r.ok()) {
        v.agree = false;
        v.witnesses.push_back(r.name);
      }
  }
  v.note = v.lhs ? "A⋈B is unital" : "A⋈B has no identity";
  return v;
}

Verdict check_prop23(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                     const Tolerances& tol) {
  const BowtieAlgebra bt = build_bowtie(a, b, action, tol);
  Verdict v;
  v.check = "left-identity";
  const AffineSet lhs = find_left_identities(bt.carrier, tol);
  const auto cs = identity_conditions(a, b, action, false);
  const auto sol = linalg::solve(cs.system, cs.rhs, tol.identity, tol.rank);
  AffineSet rhs;
  if (sol.consistent) {
    rhs.particular = Element(sol.particular);
    rhs.directions = sol.null_basis;
  }
  v.lhs = !lhs.empty();
  v.rhs = !rhs.empty();
  v.agree = same_affine_set(lhs, rhs, 1e3 * tol.identity);
  v.residuals.push_back({"condition system residual", sol.residual, tol.identity, ""});
  if (v.lhs && v.rhs) {
    const double forward = identity_condition_defect(a, b, action, bt.project_a(*lhs.particular),
                                                     bt.project_b(*lhs.particular), false);
    const double converse = identity_defect(bt.carrier, *rhs.particular, false);
    v.residuals.push_back({"conditions at a left identity of A⋈B", forward, tol.identity, ""});
    v.residuals.push_back({"condition solution as left identity of A⋈B", converse, tol.identity, ""});
    for (const auto& r : v.residuals)
      if (!r.ok()) {
        v.agree = false;
        v.witnesses.push_back(r.name);
      }
  }
  v.note = "exact left identities (finite-dimensional form of bounded left approximate identities); solution set dimension " +
           std::to_string(lhs.empty() ? 0 : lhs.dimension());
  return v;
}

}  // namespace balg
