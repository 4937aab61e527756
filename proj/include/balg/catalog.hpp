#pragma once

// Standard small algebras used as fixtures and as fuzzing building blocks.
// Every algebra here satisfies max_{i,j} |e_i e_j|_1 <= 1 in its declared basis.

#include <vector>

#include "balg/algebra.hpp"

namespace balg::catalog {

FiniteDimAlgebra zero_algebra(std::size_t k);
/// C^k with pointwise product.
FiniteDimAlgebra diagonal_algebra(std::size_t k);
inline FiniteDimAlgebra complex_field() { return diagonal_algebra(1); }
/// C[t]/(t^k), basis 1, t, ..., t^{k-1}.
FiniteDimAlgebra truncated_polynomial(std::size_t k);
/// t C[t]/(t^{k+1}), basis t, ..., t^k (non-unital, nilpotent).
FiniteDimAlgebra nilpotent_polynomial(std::size_t k);
/// M_k(C), basis E_ij at index i*k + j.
FiniteDimAlgebra matrix_algebra(std::size_t k);
/// span{E11, E12}: left identities E11 + mu E12, no right identity.
FiniteDimAlgebra matrix_unit_row();
/// span{E11, E21}: right identities E11 + mu E21, no left identity.
FiniteDimAlgebra matrix_unit_column();
/// Upper triangular 2x2 matrices, basis E11, E12, E22.
FiniteDimAlgebra upper_triangular();

FiniteDimAlgebra direct_sum(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b);

/// Structure constants in the basis g_a = sum_i basis(i, a) e_i. Throws on singular basis.
FiniteDimAlgebra change_basis(const FiniteDimAlgebra& a, const Matrix& basis);
/// Relabels e_i as position perm[i] of the result.
FiniteDimAlgebra permute(const FiniteDimAlgebra& a, const std::vector<std::size_t>& perm);
/// Product rescaled by s: x * y = s x y.
FiniteDimAlgebra rescale(const FiniteDimAlgebra& a, double s);

/// Largest |e_i e_j|_1.
double basis_product_bound(const FiniteDimAlgebra& a);

}  // namespace balg::catalog
