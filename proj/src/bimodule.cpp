#include "balg/bimodule.hpp"

#include <cmath>
#include <string>

#include "balg/errors.hpp"

namespace balg {

BimoduleAction::BimoduleAction(std::size_t n, std::size_t m, Tensor3 left_action, Tensor3 right_action)
    : dim_a(n), dim_b(m), left(std::move(left_action)), right(std::move(right_action)) {
  if (left.extent(0) != n || left.extent(1) != m || left.extent(2) != m)
    throw DimensionError("BimoduleAction: left tensor must be dim_a x dim_b x dim_b");
  if (right.extent(0) != m || right.extent(1) != n || right.extent(2) != m)
    throw DimensionError("BimoduleAction: right tensor must be dim_b x dim_a x dim_b");
}

BimoduleAction BimoduleAction::zero(std::size_t n, std::size_t m) {
  return BimoduleAction(n, m, Tensor3(n, m, m), Tensor3(m, n, m));
}

Element act_left(const BimoduleAction& action, const Element& a, const Element& b) {
  if (a.size() != action.dim_a || b.size() != action.dim_b) throw DimensionError("act_left: operand length mismatch");
  Element out = Element::zero(action.dim_b);
  for (std::size_t i = 0; i < action.dim_a; ++i)
    for (std::size_t p = 0; p < action.dim_b; ++p) {
      const Scalar w = a[i] * b[p];
      if (w == Scalar{}) continue;
      for (std::size_t q = 0; q < action.dim_b; ++q)
        out.coeffs(static_cast<Eigen::Index>(q)) += w * action.left(i, p, q);
    }
  return out;
}

Element act_right(const BimoduleAction& action, const Element& b, const Element& a) {
  if (a.size() != action.dim_a || b.size() != action.dim_b) throw DimensionError("act_right: operand length mismatch");
  Element out = Element::zero(action.dim_b);
  for (std::size_t p = 0; p < action.dim_b; ++p)
    for (std::size_t i = 0; i < action.dim_a; ++i) {
      const Scalar w = b[p] * a[i];
      if (w == Scalar{}) continue;
      for (std::size_t q = 0; q < action.dim_b; ++q)
        out.coeffs(static_cast<Eigen::Index>(q)) += w * action.right(p, i, q);
    }
  return out;
}

namespace {

// Running maximum of |lhs - rhs| with the index tuple where it occurred.
struct MaxTracker {
  double value = 0.0;
  std::string at;

  void observe(Scalar lhs, Scalar rhs, std::initializer_list<std::size_t> idx) {
    double r = std::abs(lhs - rhs);
    if (std::isnan(r)) r = HUGE_VAL;
    if (r > value) {
      value = r;
      at = "(";
      bool first = true;
      for (auto v : idx) {
        at += (first ? "" : ",") + std::to_string(v);
        first = false;
      }
      at += ")";
    }
  }
};

void require_shapes(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action) {
  if (action.dim_a != a.dim() || action.dim_b != b.dim())
    throw DimensionError("bimodule action dimensions (" + std::to_string(action.dim_a) + "," +
                         std::to_string(action.dim_b) + ") do not match algebras (" + std::to_string(a.dim()) +
                         "," + std::to_string(b.dim()) + ")");
}

}  // namespace

ValidationReport validate_bimodule(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b,
                                   const BimoduleAction& action, const Tolerances& tol) {
  require_shapes(a, b, action);
  const std::size_t n = a.dim(), m = b.dim();
  const Tensor3& c = a.mul();
  const Tensor3& L = action.left;
  const Tensor3& R = action.right;

  MaxTracker left_assoc, right_assoc, middle;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
          // (e_i e_j).f_p = e_i.(e_j.f_p)
          Scalar lhs{}, rhs{};
          for (std::size_t k = 0; k < n; ++k) lhs += c(i, j, k) * L(k, p, q);
          for (std::size_t r = 0; r < m; ++r) rhs += L(j, p, r) * L(i, r, q);
          left_assoc.observe(lhs, rhs, {i, j, p, q});
          // f_p.(e_i e_j) = (f_p.e_i).e_j
          lhs = rhs = Scalar{};
          for (std::size_t k = 0; k < n; ++k) lhs += c(i, j, k) * R(p, k, q);
          for (std::size_t r = 0; r < m; ++r) rhs += R(p, i, r) * R(r, j, q);
          right_assoc.observe(lhs, rhs, {p, i, j, q});
          // (e_i.f_p).e_j = e_i.(f_p.e_j)
          lhs = rhs = Scalar{};
          for (std::size_t r = 0; r < m; ++r) {
            lhs += L(i, p, r) * R(r, j, q);
            rhs += R(p, j, r) * L(i, r, q);
          }
          middle.observe(lhs, rhs, {i, p, j, q});
        }

  double left_bound = 0.0, right_bound = 0.0;
  std::string left_at, right_at;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p) {
      double sl = 0.0, sr = 0.0;
      for (std::size_t q = 0; q < m; ++q) {
        sl += std::abs(L(i, p, q));
        sr += std::abs(R(p, i, q));
      }
      if (sl > left_bound) {
        left_bound = sl;
        left_at = "(" + std::to_string(i) + "," + std::to_string(p) + ")";
      }
      if (sr > right_bound) {
        right_bound = sr;
        right_at = "(" + std::to_string(p) + "," + std::to_string(i) + ")";
      }
    }

  ValidationReport report;
  report.residuals.push_back({"left module axiom (e_i e_j).f = e_i.(e_j.f)", left_assoc.value, tol.assoc, left_assoc.at});
  report.residuals.push_back({"right module axiom f.(e_i e_j) = (f.e_i).e_j", right_assoc.value, tol.assoc, right_assoc.at});
  report.residuals.push_back({"bimodule axiom (e_i.f).e_j = e_i.(f.e_j)", middle.value, tol.assoc, middle.at});
  report.residuals.push_back({"left action contractivity", std::max(0.0, left_bound - 1.0), tol.norm, left_at});
  report.residuals.push_back({"right action contractivity", std::max(0.0, right_bound - 1.0), tol.norm, right_at});
  return report;
}

ValidationReport check_algebraic(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b,
                                 const BimoduleAction& action, const Tolerances& tol) {
  require_shapes(a, b, action);
  const std::size_t n = a.dim(), m = b.dim();
  const Tensor3& d = b.mul();
  const Tensor3& L = action.left;
  const Tensor3& R = action.right;

  MaxTracker first, second, third;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q)
        for (std::size_t s = 0; s < m; ++s) {
          // e_i.(f_p f_q) = (e_i.f_p) f_q
          Scalar lhs{}, rhs{};
          for (std::size_t r = 0; r < m; ++r) {
            lhs += d(p, q, r) * L(i, r, s);
            rhs += L(i, p, r) * d(r, q, s);
          }
          first.observe(lhs, rhs, {i, p, q, s});
          // (f_p f_q).e_i = f_p (f_q.e_i)
          lhs = rhs = Scalar{};
          for (std::size_t r = 0; r < m; ++r) {
            lhs += d(p, q, r) * R(r, i, s);
            rhs += R(q, i, r) * d(p, r, s);
          }
          second.observe(lhs, rhs, {p, q, i, s});
          // (f_p.e_i) f_q = f_p (e_i.f_q)
          lhs = rhs = Scalar{};
          for (std::size_t r = 0; r < m; ++r) {
            lhs += R(p, i, r) * d(r, q, s);
            rhs += L(i, q, r) * d(p, r, s);
          }
          third.observe(lhs, rhs, {p, i, q, s});
        }

  ValidationReport report;
  report.residuals.push_back({"algebraic identity a.(b1 b2) = (a.b1) b2", first.value, tol.assoc, first.at});
  report.residuals.push_back({"algebraic identity (b1 b2).a = b1 (b2.a)", second.value, tol.assoc, second.at});
  report.residuals.push_back({"algebraic identity (b1.a) b2 = b1 (a.b2)", third.value, tol.assoc, third.at});
  return report;
}

bool is_symmetric(const BimoduleAction& action, const Tolerances& tol) {
  for (std::size_t i = 0; i < action.dim_a; ++i)
    for (std::size_t p = 0; p < action.dim_b; ++p)
      for (std::size_t q = 0; q < action.dim_b; ++q)
        if (!(std::abs(action.left(i, p, q) - action.right(p, i, q)) <= tol.assoc)) return false;
  return true;
}

BimoduleAction regular_bimodule(const FiniteDimAlgebra& a) {
  const std::size_t n = a.dim();
  BimoduleAction out = BimoduleAction::zero(n, n);
  out.left = a.mul();
  out.right = a.mul();
  return out;
}

BimoduleAction left_regular_bimodule(const FiniteDimAlgebra& a) {
  BimoduleAction out = BimoduleAction::zero(a.dim(), a.dim());
  out.left = a.mul();
  return out;
}

BimoduleAction right_regular_bimodule(const FiniteDimAlgebra& a) {
  BimoduleAction out = BimoduleAction::zero(a.dim(), a.dim());
  out.right = a.mul();
  return out;
}

BimoduleAction character_bimodule(const Functional& theta_left, const Functional& theta_right, std::size_t m) {
  if (theta_left.size() != theta_right.size()) throw DimensionError("character_bimodule: functional lengths differ");
  const std::size_t n = theta_left.size();
  BimoduleAction out = BimoduleAction::zero(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p) {
      out.left(i, p, p) = theta_left[i];
      out.right(p, i, p) = theta_right[i];
    }
  return out;
}

BimoduleAction homomorphism_action(const FiniteDimAlgebra& b, const Matrix& t) {
  const std::size_t m = b.dim();
  if (static_cast<std::size_t>(t.rows()) != m) throw DimensionError("homomorphism_action: T must have dim(B) rows");
  const auto n = static_cast<std::size_t>(t.cols());
  BimoduleAction out = BimoduleAction::zero(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    const Element image(t.col(static_cast<Eigen::Index>(i)));
    for (std::size_t p = 0; p < m; ++p) {
      const Element f = Element::basis(m, p);
      const Element lhs = multiply(b, image, f);
      const Element rhs = multiply(b, f, image);
      for (std::size_t q = 0; q < m; ++q) {
        out.left(i, p, q) = lhs[q];
        out.right(p, i, q) = rhs[q];
      }
    }
  }
  return out;
}

BimoduleAction direct_sum(const BimoduleAction& x1, const BimoduleAction& x2) {
  if (x1.dim_a != x2.dim_a) throw DimensionError("direct_sum: bimodules over different algebras");
  const std::size_t n = x1.dim_a, m1 = x1.dim_b, m = x1.dim_b + x2.dim_b;
  BimoduleAction out = BimoduleAction::zero(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < m1; ++p)
      for (std::size_t q = 0; q < m1; ++q) {
        out.left(i, p, q) = x1.left(i, p, q);
        out.right(p, i, q) = x1.right(p, i, q);
      }
    for (std::size_t p = 0; p < x2.dim_b; ++p)
      for (std::size_t q = 0; q < x2.dim_b; ++q) {
        out.left(i, m1 + p, m1 + q) = x2.left(i, p, q);
        out.right(m1 + p, i, m1 + q) = x2.right(p, i, q);
      }
  }
  return out;
}

}  // namespace balg
