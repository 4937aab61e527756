#include "balg/catalog.hpp"

#include <algorithm>
#include <string>

#include "balg/errors.hpp"

namespace balg::catalog {

FiniteDimAlgebra zero_algebra(std::size_t k) { return FiniteDimAlgebra(default_labels(k, "z"), Tensor3(k, k, k)); }

FiniteDimAlgebra diagonal_algebra(std::size_t k) {
  Tensor3 mul(k, k, k);
  for (std::size_t i = 0; i < k; ++i) mul(i, i, i) = 1.0;
  return FiniteDimAlgebra(default_labels(k, "d"), std::move(mul));
}

FiniteDimAlgebra truncated_polynomial(std::size_t k) {
  Tensor3 mul(k, k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; i + j < k; ++j) mul(i, j, i + j) = 1.0;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
  return FiniteDimAlgebra(std::move(labels), std::move(mul));
}

FiniteDimAlgebra nilpotent_polynomial(std::size_t k) {
  // index r holds t^{r+1}
  Tensor3 mul(k, k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; i + j + 1 < k; ++j) mul(i, j, i + j + 1) = 1.0;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(i == 0 ? "t" : "t^" + std::to_string(i + 1));
  return FiniteDimAlgebra(std::move(labels), std::move(mul));
}

FiniteDimAlgebra matrix_algebra(std::size_t k) {
  const std::size_t n = k * k;
  Tensor3 mul(n, n, n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t l = 0; l < k; ++l) mul(i * k + j, j * k + l, i * k + l) = 1.0;
    }
  return FiniteDimAlgebra(std::move(labels), std::move(mul));
}

FiniteDimAlgebra matrix_unit_row() {
  // E11 E11 = E11, E11 E12 = E12, E12 E11 = 0, E12 E12 = 0
  Tensor3 mul(2, 2, 2);
  mul(0, 0, 0) = 1.0;
  mul(0, 1, 1) = 1.0;
  return FiniteDimAlgebra({"E11", "E12"}, std::move(mul));
}

FiniteDimAlgebra matrix_unit_column() {
  // E11 E11 = E11, E21 E11 = E21
  Tensor3 mul(2, 2, 2);
  mul(0, 0, 0) = 1.0;
  mul(1, 0, 1) = 1.0;
  return FiniteDimAlgebra({"E11", "E21"}, std::move(mul));
}

FiniteDimAlgebra upper_triangular() {
  Tensor3 mul(3, 3, 3);
  mul(0, 0, 0) = 1.0;  // E11 E11
  mul(0, 1, 1) = 1.0;  // E11 E12
  mul(1, 2, 1) = 1.0;  // E12 E22
  mul(2, 2, 2) = 1.0;  // E22 E22
  return FiniteDimAlgebra({"E11", "E12", "E22"}, std::move(mul));
}

FiniteDimAlgebra direct_sum(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b) {
  const std::size_t n = a.dim(), m = b.dim();
  Tensor3 mul(n + m, n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mul(i, j, k) = a.c(i, j, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) mul(n + i, n + j, n + k) = b.c(i, j, k);
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("L." + l);
  for (const auto& l : b.labels()) labels.push_back("R." + l);
  return FiniteDimAlgebra(std::move(labels), std::move(mul));
}

FiniteDimAlgebra change_basis(const FiniteDimAlgebra& a, const Matrix& basis) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  if (basis.rows() != n || basis.cols() != n) throw DimensionError("change_basis: basis matrix must be square of size dim");
  if (n == 0) return a;
  Eigen::FullPivLU<Matrix> lu(basis);
  if (!lu.isInvertible()) throw NumericalError("change_basis: basis matrix is singular");
  const Matrix inverse = lu.inverse();
  Tensor3 mul(a.dim(), a.dim(), a.dim());
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = 0; q < n; ++q) {
      const Element prod = multiply(a, Element(basis.col(p)), Element(basis.col(q)));
      const Vector coords = inverse * prod.coeffs;
      for (Eigen::Index r = 0; r < n; ++r)
        mul(static_cast<std::size_t>(p), static_cast<std::size_t>(q), static_cast<std::size_t>(r)) = coords(r);
    }
  return FiniteDimAlgebra(default_labels(a.dim(), "g"), std::move(mul));
}

FiniteDimAlgebra permute(const FiniteDimAlgebra& a, const std::vector<std::size_t>& perm) {
  const std::size_t n = a.dim();
  if (perm.size() != n) throw DimensionError("permute: permutation length mismatch");
  Tensor3 mul(n, n, n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[perm[i]] = a.labels()[i];
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mul(perm[i], perm[j], perm[k]) = a.c(i, j, k);
  }
  return FiniteDimAlgebra(std::move(labels), std::move(mul));
}

FiniteDimAlgebra rescale(const FiniteDimAlgebra& a, double s) {
  Tensor3 mul = a.mul();
  mul *= s;
  return FiniteDimAlgebra(a.labels(), std::move(mul));
}

double basis_product_bound(const FiniteDimAlgebra& a) {
  double worst = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += std::abs(a.c(i, j, k));
      worst = std::max(worst, s);
    }
  return worst;
}

}  // namespace balg::catalog
