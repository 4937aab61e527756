#include "balg/linalg.hpp"

#include <algorithm>

#include "balg/errors.hpp"

namespace balg::linalg {

namespace {

double cutoff(const Eigen::VectorXd& singular, double rank_tol) {
  const double top = singular.size() > 0 ? singular(0) : 0.0;
  return rank_tol * std::max(1.0, top);
}

}  // namespace

LinearSolution solve(const Matrix& system, const Vector& rhs, double residual_tol, double rank_tol) {
  if (system.rows() != rhs.size()) throw DimensionError("linalg::solve: rhs length mismatch");
  const Eigen::Index cols = system.cols();
  LinearSolution out;
  if (cols == 0) {
    out.particular = Vector::Zero(0);
    out.null_basis = Matrix::Zero(0, 0);
    out.residual = rhs.size() ? rhs.cwiseAbs().maxCoeff() : 0.0;
    out.consistent = out.residual <= residual_tol;
    return out;
  }
  if (system.rows() == 0) {
    out.particular = Vector::Zero(cols);
    out.null_basis = Matrix::Identity(cols, cols);
    out.consistent = true;
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(system, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = cutoff(s, rank_tol);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;

  const Matrix& u = svd.matrixU();
  const Matrix& v = svd.matrixV();
  Vector x = Vector::Zero(cols);
  for (Eigen::Index r = 0; r < rank; ++r) {
    x += v.col(r) * (u.col(r).adjoint() * rhs)(0) / s(r);
  }
  out.particular = x;
  out.null_basis = v.rightCols(cols - rank);
  const Vector defect = system * x - rhs;
  out.residual = defect.size() ? defect.cwiseAbs().maxCoeff() : 0.0;
  out.consistent = out.residual <= residual_tol;
  return out;
}

Matrix orthonormal_span(const Matrix& columns, double rank_tol) {
  if (columns.cols() == 0 || columns.rows() == 0) return Matrix::Zero(columns.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double cut = cutoff(s, rank_tol);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  return svd.matrixU().leftCols(rank);
}

Matrix null_space(const Matrix& system, double rank_tol) {
  const Eigen::Index cols = system.cols();
  if (cols == 0) return Matrix::Zero(0, 0);
  if (system.rows() == 0) return Matrix::Identity(cols, cols);
  Eigen::JacobiSVD<Matrix> svd(system, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = cutoff(s, rank_tol);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  return svd.matrixV().rightCols(cols - rank);
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.cols() == 0) return right;
  if (right.cols() == 0) return left;
  if (left.rows() != right.rows()) throw DimensionError("linalg::hstack: row mismatch");
  Matrix out(left.rows(), left.cols() + right.cols());
  out << left, right;
  return out;
}

Matrix extend_span(const Matrix& basis, const Matrix& extra, double rank_tol) {
  if (extra.cols() == 0) return basis;
  // Project the new vectors off the current span before deciding rank, so
  // the cutoff is judged on genuinely new directions only.
  Matrix residual = extra;
  if (basis.cols() > 0) residual -= basis * (basis.adjoint() * extra);
  const double scale = std::max(1.0, max_abs(extra));
  Matrix fresh = orthonormal_span(residual / scale, rank_tol);
  if (fresh.cols() == 0) return basis;
  // One re-orthogonalisation pass against the old basis.
  if (basis.cols() > 0) {
    fresh -= basis * (basis.adjoint() * fresh);
    fresh = orthonormal_span(fresh, rank_tol);
  }
  return hstack(basis, fresh);
}

double distance_from_span(const Matrix& basis, const Matrix& vectors) {
  if (vectors.cols() == 0) return 0.0;
  Matrix residual = vectors;
  if (basis.cols() > 0) residual -= basis * (basis.adjoint() * vectors);
  double worst = 0.0;
  for (Eigen::Index c = 0; c < residual.cols(); ++c) worst = std::max(worst, residual.col(c).norm());
  return worst;
}

bool same_subspace(const Matrix& u, const Matrix& v, double tol) {
  if (u.cols() != v.cols()) return false;
  return distance_from_span(u, v) <= tol && distance_from_span(v, u) <= tol;
}

Matrix intersect(const Matrix& u, const Matrix& v, double rank_tol) {
  if (u.cols() == 0 || v.cols() == 0) return Matrix::Zero(u.rows(), 0);
  // x = U s = V t  <=>  [U, -V] (s; t) = 0
  const Matrix kernel = null_space(hstack(u, -v), rank_tol);
  if (kernel.cols() == 0) return Matrix::Zero(u.rows(), 0);
  return orthonormal_span(u * kernel.topRows(u.cols()), rank_tol);
}

}  // namespace balg::linalg
