#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace balg {

using Scalar = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Dense rank-3 tensor of complex scalars, row-major in (i, j, k).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
      : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, Scalar{0.0, 0.0}) {}

  std::size_t extent(int axis) const { return axis == 0 ? d0_ : axis == 1 ? d1_ : d2_; }
  std::size_t size() const { return data_.size(); }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * d1_ + j) * d2_ + k];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d1_ + j) * d2_ + k];
  }

  const std::vector<Scalar>& data() const { return data_; }
  std::vector<Scalar>& data() { return data_; }

  /// Largest entrywise modulus of the difference; infinite on shape mismatch.
  double max_deviation(const Tensor3& other) const;

  Tensor3& operator*=(double s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

 private:
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Scalar> data_;
};

/// Largest entry modulus; 0 for an empty matrix.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

/// Coordinates of an algebra or module element in the declared basis.
struct Element {
  Vector coeffs;

  Element() = default;
  explicit Element(Vector v) : coeffs(std::move(v)) {}
  Element(std::initializer_list<Scalar> values);

  static Element zero(std::size_t n) { return Element(Vector::Zero(static_cast<Eigen::Index>(n))); }
  static Element basis(std::size_t n, std::size_t i);

  std::size_t size() const { return static_cast<std::size_t>(coeffs.size()); }
  Scalar operator[](std::size_t i) const { return coeffs(static_cast<Eigen::Index>(i)); }

  friend Element operator+(const Element& x, const Element& y) { return Element(x.coeffs + y.coeffs); }
  friend Element operator-(const Element& x, const Element& y) { return Element(x.coeffs - y.coeffs); }
  friend Element operator*(Scalar s, const Element& x) { return Element(s * x.coeffs); }
};

/// Linear functional acting by the bilinear pairing phi(x) = sum_i phi_i x_i.
struct Functional {
  Vector coeffs;

  Functional() = default;
  explicit Functional(Vector v) : coeffs(std::move(v)) {}
  Functional(std::initializer_list<Scalar> values);

  static Functional zero(std::size_t n) {
    return Functional(Vector::Zero(static_cast<Eigen::Index>(n)));
  }

  std::size_t size() const { return static_cast<std::size_t>(coeffs.size()); }
  Scalar operator[](std::size_t i) const { return coeffs(static_cast<Eigen::Index>(i)); }

  /// Throws DimensionError on length mismatch.
  Scalar operator()(const Element& x) const;
};

double l1_norm(const Element& x);
/// Dual (sup) norm of a functional against the l1 basis norm.
double linf_norm(const Functional& phi);
double linf_distance(const Functional& phi, const Functional& chi);

}  // namespace balg
