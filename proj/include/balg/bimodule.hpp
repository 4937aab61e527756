#pragma once

#include "balg/algebra.hpp"

namespace balg {

/// Left and right actions of an n-dimensional algebra A on an m-dimensional space B:
///   e_i . f_p = sum_q left(i, p, q) f_q        f_p . e_i = sum_q right(p, i, q) f_q
struct BimoduleAction {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  Tensor3 left;   // n x m x m
  Tensor3 right;  // m x n x m

  BimoduleAction() = default;
  /// Throws DimensionError unless the tensor shapes match (n, m).
  BimoduleAction(std::size_t n, std::size_t m, Tensor3 left_action, Tensor3 right_action);

  static BimoduleAction zero(std::size_t n, std::size_t m);
};

Element act_left(const BimoduleAction& action, const Element& a, const Element& b);
Element act_right(const BimoduleAction& action, const Element& b, const Element& a);

/// Three module axioms and contractivity of both actions, over all basis tuples.
ValidationReport validate_bimodule(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b,
                                   const BimoduleAction& action, const Tolerances& tol = {});

/// The compatibility identities with B's product:
///   a.(b1 b2) = (a.b1) b2,   (b1 b2).a = b1 (b2.a),   (b1.a) b2 = b1 (a.b2).
ValidationReport check_algebraic(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b,
                                 const BimoduleAction& action, const Tolerances& tol = {});
inline bool is_algebraic(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                         const Tolerances& tol = {}) {
  return check_algebraic(a, b, action, tol).pass();
}

/// a.b = b.a for all basis pairs.
bool is_symmetric(const BimoduleAction& action, const Tolerances& tol = {});

// --- standard actions -------------------------------------------------------

/// X = A with a.x = ax and x.a = xa.
BimoduleAction regular_bimodule(const FiniteDimAlgebra& a);
/// X = A with a.x = ax and x.a = 0.
BimoduleAction left_regular_bimodule(const FiniteDimAlgebra& a);
/// X = A with a.x = 0 and x.a = xa.
BimoduleAction right_regular_bimodule(const FiniteDimAlgebra& a);
/// X = C^m with a.x = theta_left(a) x and x.a = theta_right(a) x.
BimoduleAction character_bimodule(const Functional& theta_left, const Functional& theta_right, std::size_t m);
/// a.b = b.a = theta(a) b on an m-dimensional B.
inline BimoduleAction theta_action(const Functional& theta, std::size_t m) {
  return character_bimodule(theta, theta, m);
}
/// a.b = T(a) b and b.a = b T(a); column j of t is T(e_j) in B's basis.
BimoduleAction homomorphism_action(const FiniteDimAlgebra& b, const Matrix& t);
/// X1 (+) X2 as A-bimodules; both must share dim_a.
BimoduleAction direct_sum(const BimoduleAction& x1, const BimoduleAction& x2);

}  // namespace balg
