#include "balg/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "balg/errors.hpp"
#include "balg/linalg.hpp"

namespace balg {

// ---------------------------------------------------------------------------
// types.hpp out-of-line members

double Tensor3::max_deviation(const Tensor3& other) const {
  if (d0_ != other.d0_ || d1_ != other.d1_ || d2_ != other.d2_) return HUGE_VAL;
  double worst = 0.0;
  for (std::size_t t = 0; t < data_.size(); ++t) worst = std::max(worst, std::abs(data_[t] - other.data_[t]));
  return worst;
}

Element::Element(std::initializer_list<Scalar> values) : coeffs(static_cast<Eigen::Index>(values.size())) {
  Eigen::Index i = 0;
  for (const auto& v : values) coeffs(i++) = v;
}

Element Element::basis(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionError("Element::basis: index out of range");
  Element e = zero(n);
  e.coeffs(static_cast<Eigen::Index>(i)) = 1.0;
  return e;
}

Functional::Functional(std::initializer_list<Scalar> values) : coeffs(static_cast<Eigen::Index>(values.size())) {
  Eigen::Index i = 0;
  for (const auto& v : values) coeffs(i++) = v;
}

Scalar Functional::operator()(const Element& x) const {
  if (x.size() != size()) throw DimensionError("Functional: pairing length mismatch");
  return coeffs.transpose() * x.coeffs;
}

double l1_norm(const Element& x) { return x.coeffs.cwiseAbs().sum(); }

double linf_norm(const Functional& phi) { return phi.size() ? phi.coeffs.cwiseAbs().maxCoeff() : 0.0; }

double linf_distance(const Functional& phi, const Functional& chi) {
  if (phi.size() != chi.size()) return HUGE_VAL;
  return phi.size() ? (phi.coeffs - chi.coeffs).cwiseAbs().maxCoeff() : 0.0;
}

// ---------------------------------------------------------------------------

bool ValidationReport::pass() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.ok(); });
}

const Residual* ValidationReport::first_failure() const {
  for (const auto& r : residuals)
    if (!r.ok()) return &r;
  return nullptr;
}

const Residual* ValidationReport::find(const std::string& name) const {
  for (const auto& r : residuals)
    if (r.name == name) return &r;
  return nullptr;
}

void ValidationReport::merge(const ValidationReport& other) {
  residuals.insert(residuals.end(), other.residuals.begin(), other.residuals.end());
}

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

FiniteDimAlgebra::FiniteDimAlgebra(std::vector<std::string> labels, Tensor3 mul)
    : labels_(std::move(labels)), mul_(std::move(mul)) {
  const std::size_t n = labels_.size();
  if (mul_.extent(0) != n || mul_.extent(1) != n || mul_.extent(2) != n) {
    throw DimensionError("FiniteDimAlgebra: structure tensor shape does not match basis size " +
                         std::to_string(n));
  }
}

FiniteDimAlgebra::FiniteDimAlgebra(Tensor3 mul)
    : FiniteDimAlgebra(default_labels(mul.extent(0)), std::move(mul)) {}

Element FiniteDimAlgebra::basis_product(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  Element out = Element::zero(n);
  for (std::size_t k = 0; k < n; ++k) out.coeffs(static_cast<Eigen::Index>(k)) = mul_(i, j, k);
  return out;
}

Matrix FiniteDimAlgebra::left_multiplication(const Element& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw DimensionError("left_multiplication: element length mismatch");
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar xi = x[i];
    if (xi == Scalar{}) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) += xi * mul_(i, j, k);
  }
  return m;
}

Matrix FiniteDimAlgebra::right_multiplication(const Element& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw DimensionError("right_multiplication: element length mismatch");
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const Scalar xj = x[j];
    if (xj == Scalar{}) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) += xj * mul_(i, j, k);
  }
  return m;
}

Element multiply(const FiniteDimAlgebra& a, const Element& x, const Element& y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n) {
    throw DimensionError("multiply: operands of length " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()) + " in an algebra of dimension " + std::to_string(n));
  }
  Element out = Element::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == Scalar{}) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar w = x[i] * y[j];
      if (w == Scalar{}) continue;
      for (std::size_t k = 0; k < n; ++k) out.coeffs(static_cast<Eigen::Index>(k)) += w * a.c(i, j, k);
    }
  }
  return out;
}

namespace {

std::string tuple_location(std::initializer_list<std::size_t> idx) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (auto v : idx) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace

ValidationReport validate(const FiniteDimAlgebra& a, const Tolerances& tol) {
  const std::size_t n = a.dim();
  const Tensor3& c = a.mul();
  ValidationReport report;

  bool finite = true;
  for (const auto& v : c.data()) finite = finite && std::isfinite(v.real()) && std::isfinite(v.imag());
  report.residuals.push_back({"finite", finite ? 0.0 : HUGE_VAL, 0.0, ""});

  double assoc = 0.0;
  std::string assoc_at;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Scalar lhs{}, rhs{};
          for (std::size_t m = 0; m < n; ++m) {
            lhs += c(i, j, m) * c(m, k, l);
            rhs += c(j, k, m) * c(i, m, l);
          }
          const double r = std::abs(lhs - rhs);
          if (r > assoc || std::isnan(r)) {
            assoc = std::isnan(r) ? HUGE_VAL : r;
            assoc_at = tuple_location({i, j, k, l});
          }
        }
  report.residuals.push_back({"associativity", assoc, tol.assoc, assoc_at});

  double worst = 0.0;
  std::string worst_at;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += std::abs(c(i, j, k));
      if (s > worst) {
        worst = s;
        worst_at = tuple_location({i, j});
      }
    }
  report.residuals.push_back({"submultiplicativity", std::max(0.0, worst - 1.0), tol.norm, worst_at});
  return report;
}

std::optional<Element> find_identity(const FiniteDimAlgebra& a, const Tolerances& tol) {
  const std::size_t n = a.dim();
  const auto rows = static_cast<Eigen::Index>(2 * n * n);
  Matrix system = Matrix::Zero(rows, static_cast<Eigen::Index>(n));
  Vector rhs = Vector::Zero(rows);
  Eigen::Index row = 0;
  // x e_i = e_i, then e_i x = e_i, one row per output coordinate k.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k, ++row) {
      for (std::size_t j = 0; j < n; ++j) system(row, static_cast<Eigen::Index>(j)) = a.c(j, i, k);
      rhs(row) = (i == k) ? 1.0 : 0.0;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k, ++row) {
      for (std::size_t j = 0; j < n; ++j) system(row, static_cast<Eigen::Index>(j)) = a.c(i, j, k);
      rhs(row) = (i == k) ? 1.0 : 0.0;
    }
  const auto sol = linalg::solve(system, rhs, tol.identity, tol.rank);
  if (!sol.consistent) return std::nullopt;
  // Coordinates within rounding of Gaussian integers are snapped when that
  // certifies at least as well.
  Vector snapped = sol.particular;
  for (auto& z : snapped) {
    const Scalar r(std::round(z.real()), std::round(z.imag()));
    if (std::abs(z - r) <= 1e-12) z = r;
  }
  if (max_abs(system * snapped - rhs) <= max_abs(system * sol.particular - rhs)) return Element(snapped);
  return Element(sol.particular);
}

bool AffineSet::contains(const Element& x, double tol) const {
  if (!particular) return false;
  if (x.size() != particular->size()) return false;
  const Matrix diff = x.coeffs - particular->coeffs;
  return linalg::distance_from_span(directions, diff) <= tol;
}

bool same_affine_set(const AffineSet& s, const AffineSet& t, double tol) {
  if (s.empty() || t.empty()) return s.empty() == t.empty();
  if (s.dimension() != t.dimension()) return false;
  if (!linalg::same_subspace(s.directions, t.directions, tol)) return false;
  return s.contains(*t.particular, tol) && t.contains(*s.particular, tol);
}

AffineSet find_left_identities(const FiniteDimAlgebra& a, const Tolerances& tol) {
  const std::size_t n = a.dim();
  const auto rows = static_cast<Eigen::Index>(n * n);
  Matrix system = Matrix::Zero(rows, static_cast<Eigen::Index>(n));
  Vector rhs = Vector::Zero(rows);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k, ++row) {
      for (std::size_t j = 0; j < n; ++j) system(row, static_cast<Eigen::Index>(j)) = a.c(j, i, k);
      rhs(row) = (i == k) ? 1.0 : 0.0;
    }
  const auto sol = linalg::solve(system, rhs, tol.identity, tol.rank);
  AffineSet out;
  if (!sol.consistent) return out;
  out.particular = Element(sol.particular);
  out.directions = sol.null_basis;
  return out;
}

bool is_commutative(const FiniteDimAlgebra& a, const Tolerances& tol) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(std::abs(a.c(i, j, k) - a.c(j, i, k)) <= tol.assoc)) return false;
  return true;
}

double multiplicativity_residual(const FiniteDimAlgebra& a, const Functional& phi) {
  const std::size_t n = a.dim();
  if (phi.size() != n) throw DimensionError("multiplicativity_residual: functional length mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar image{};
      for (std::size_t k = 0; k < n; ++k) image += phi[k] * a.c(i, j, k);
      const double r = std::abs(image - phi[i] * phi[j]);
      worst = std::isnan(r) ? HUGE_VAL : std::max(worst, r);
    }
  return worst;
}

Unitization unitize(const FiniteDimAlgebra& a) {
  const std::size_t n = a.dim();
  Tensor3 mul(n + 1, n + 1, n + 1);
  mul(0, 0, 0) = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    mul(0, j + 1, j + 1) = 1.0;
    mul(j + 1, 0, j + 1) = 1.0;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mul(i + 1, j + 1, k + 1) = a.c(i, j, k);
  std::vector<std::string> labels{"1"};
  labels.insert(labels.end(), a.labels().begin(), a.labels().end());

  Unitization out{FiniteDimAlgebra(std::move(labels), std::move(mul)),
                  Matrix::Zero(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n))};
  for (std::size_t j = 0; j < n; ++j)
    out.embedding(static_cast<Eigen::Index>(j + 1), static_cast<Eigen::Index>(j)) = 1.0;
  return out;
}

}  // namespace balg
