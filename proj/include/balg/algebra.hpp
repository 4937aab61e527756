#pragma once

#include <optional>
#include <string>
#include <vector>

#include "balg/types.hpp"

namespace balg {

/// Numerical tolerances; one instance is threaded through a run.
struct Tolerances {
  double assoc = 1e-9;
  double norm = 1e-9;
  double identity = 1e-9;   // residual certifying a solved identity
  double rank = 1e-9;       // relative singular-value cutoff
  double character = 1e-8;
  double dedup = 1e-6;
  int character_retries = 20;
};

struct Residual {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  std::string location;

  bool ok() const { return value <= tolerance; }
};

struct ValidationReport {
  std::vector<Residual> residuals;

  bool pass() const;
  /// First residual over tolerance, or nullptr.
  const Residual* first_failure() const;
  const Residual* find(const std::string& name) const;
  void merge(const ValidationReport& other);
};

/// Finite-dimensional complex algebra given by structure constants:
/// e_i e_j = sum_k mul(i, j, k) e_k. Carries the l1 norm of its basis.
class FiniteDimAlgebra {
 public:
  FiniteDimAlgebra() = default;
  /// Throws DimensionError unless mul is dim x dim x dim with dim = labels.size().
  FiniteDimAlgebra(std::vector<std::string> labels, Tensor3 mul);
  /// Labels default to e0, e1, ...
  explicit FiniteDimAlgebra(Tensor3 mul);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Tensor3& mul() const { return mul_; }
  Scalar c(std::size_t i, std::size_t j, std::size_t k) const { return mul_(i, j, k); }

  /// Coordinates of e_i e_j.
  Element basis_product(std::size_t i, std::size_t j) const;
  /// Matrix of y -> x y.
  Matrix left_multiplication(const Element& x) const;
  /// Matrix of y -> y x.
  Matrix right_multiplication(const Element& x) const;

 private:
  std::vector<std::string> labels_;
  Tensor3 mul_;
};

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix = "e");

Element multiply(const FiniteDimAlgebra& a, const Element& x, const Element& y);

/// Associativity residual, submultiplicativity excess, finiteness.
ValidationReport validate(const FiniteDimAlgebra& a, const Tolerances& tol = {});
inline bool is_valid(const FiniteDimAlgebra& a, const Tolerances& tol = {}) {
  return validate(a, tol).pass();
}

/// The two-sided identity, if the solved system certifies one.
std::optional<Element> find_identity(const FiniteDimAlgebra& a, const Tolerances& tol = {});

/// Affine subspace: particular + span(directions), or empty.
struct AffineSet {
  std::optional<Element> particular;
  Matrix directions;  // orthonormal columns

  bool empty() const { return !particular.has_value(); }
  std::size_t dimension() const { return static_cast<std::size_t>(directions.cols()); }
  bool contains(const Element& x, double tol) const;
};

bool same_affine_set(const AffineSet& s, const AffineSet& t, double tol);

/// Solution set of x e_i = e_i for all i.
AffineSet find_left_identities(const FiniteDimAlgebra& a, const Tolerances& tol = {});

bool is_commutative(const FiniteDimAlgebra& a, const Tolerances& tol = {});

/// Max |phi(e_i e_j) - phi(e_i) phi(e_j)| over basis pairs.
double multiplicativity_residual(const FiniteDimAlgebra& a, const Functional& phi);

struct Unitization {
  FiniteDimAlgebra algebra;  // basis (u, e_1..e_n)
  Matrix embedding;          // (n+1) x n, isometric onto span(e_1..e_n)

  Element embed(const Element& x) const { return Element(embedding * x.coeffs); }
};

Unitization unitize(const FiniteDimAlgebra& a);

}  // namespace balg
