#pragma once

#include "balg/bimodule.hpp"
#include "balg/verdict.hpp"

namespace balg {

/// A ⋈ B on the basis (e_1..e_n, f_1..f_m) with product
///   (a1, b1)(a2, b2) = (a1 a2, a1.b2 + b1.a2 + b1 b2)
/// and norm |(a, b)| = |a|_1 + |b|_1.
struct BowtieAlgebra {
  FiniteDimAlgebra carrier;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;

  Element embed_a(const Element& a) const;
  Element embed_b(const Element& b) const;
  Element pair(const Element& a, const Element& b) const;
  /// Quotient homomorphism onto A; its kernel is the B-block.
  Element project_a(const Element& u) const;
  Element project_b(const Element& u) const;
};

/// Block assembly only; the caller is responsible for the inputs being valid.
FiniteDimAlgebra assemble_bowtie(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action);

/// Validates A, B, the bimodule axioms and the algebraic identities, then
/// re-validates the assembled carrier. Throws ConstructionError naming the
/// first failed axiom.
BimoduleAction require_algebraic(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                                 const Tolerances& tol);
BowtieAlgebra build_bowtie(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                           const Tolerances& tol = {});

BowtieAlgebra direct_product(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const Tolerances& tol = {});
/// B is the zero-product algebra on the module space.
BowtieAlgebra module_extension(const FiniteDimAlgebra& a, const BimoduleAction& x_action, const Tolerances& tol = {});
/// a.b = b.a = theta(a) b; theta must be a character of A.
BowtieAlgebra theta_lau(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const Functional& theta,
                        const Tolerances& tol = {});
/// a.b = T(a) b, b.a = b T(a); T must be a contractive homomorphism A -> B.
BowtieAlgebra t_lau(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const Matrix& t, const Tolerances& tol = {});

/// Max |T(e_i e_j) - T(e_i) T(e_j)| over basis pairs.
double homomorphism_residual(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const Matrix& t);
/// l1 operator norm: largest column l1 norm.
double l1_operator_norm(const Matrix& t);

/// A ⋈ B commutative  <=>  A, B commutative and the action symmetric.
Verdict check_prop21(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                     const Tolerances& tol = {});
/// Identity of A ⋈ B versus the block conditions on (a0, b0).
Verdict check_prop22(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                     const Tolerances& tol = {});
/// Exact left identities of A ⋈ B versus the block conditions; this is the
/// finite-dimensional form of the bounded left approximate identity statement.
Verdict check_prop23(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                     const Tolerances& tol = {});

}  // namespace balg
