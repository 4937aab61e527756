#pragma once

// Dense complex linear-algebra helpers shared by the algebra modules.
// All rank decisions use a threshold relative to max(1, largest singular value).

#include "balg/types.hpp"

namespace balg::linalg {

struct LinearSolution {
  Vector particular;   // minimum-norm least-squares solution
  Matrix null_basis;   // orthonormal columns spanning ker(M)
  double residual = 0.0;  // max |M x - rhs|
  bool consistent = false;
};

LinearSolution solve(const Matrix& system, const Vector& rhs, double residual_tol, double rank_tol);

/// Orthonormal basis (as columns) of the column span.
Matrix orthonormal_span(const Matrix& columns, double rank_tol);

Matrix null_space(const Matrix& system, double rank_tol);

/// Columns of `extra` spanning a space not already in span(basis) are appended; returns the new basis.
Matrix extend_span(const Matrix& basis, const Matrix& extra, double rank_tol);

/// Max distance of a column of `vectors` from span(basis); basis must be orthonormal.
double distance_from_span(const Matrix& basis, const Matrix& vectors);

bool same_subspace(const Matrix& u, const Matrix& v, double tol);

/// Orthonormal basis of span(u) ∩ span(v).
Matrix intersect(const Matrix& u, const Matrix& v, double rank_tol);

Matrix hstack(const Matrix& left, const Matrix& right);

}  // namespace balg::linalg
