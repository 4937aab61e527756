#include <doctest.h>

#include <random>

#include "balg/algebra.hpp"
#include "balg/bowtie.hpp"
#include "balg/catalog.hpp"
#include "balg/errors.hpp"
#include "balg/linalg.hpp"
#include "balg/spectrum.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace balg;

namespace {

FiniteDimAlgebra random_algebra(std::uint64_t seed, std::size_t dim) {
  Rng rng(seed);
  FiniteDimAlgebra a = random_block_algebra(rng, dim, false);
  FiniteDimAlgebra none = catalog::zero_algebra(0);
  BimoduleAction act = BimoduleAction::zero(dim, 0);
  transport(a, none, act, random_basis(rng, dim, false), Matrix());
  return a;
}

}  // namespace

TEST_SUITE("algcore") {
  TEST_CASE("multiply on small fixtures") {
    const auto c2 = catalog::diagonal_algebra(2);
    const Element xy = multiply(c2, Element{1.0, 2.0}, Element{3.0, 4.0});
    CHECK(xy[0] == Scalar(3.0));
    CHECK(xy[1] == Scalar(8.0));

    const auto dual = catalog::truncated_polynomial(2);
    const Element tt = multiply(dual, Element{0.0, 1.0}, Element{0.0, 1.0});
    CHECK(l1_norm(tt) == 0.0);
  }

  TEST_CASE("multiply matches the triple-loop contraction") {
    std::mt19937_64 rng(11);
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto a = random_algebra(100 + s, 3);
      const auto c = oracle::from(a.mul());
      const auto x = oracle::random_vec(rng, 3), y = oracle::random_vec(rng, 3);
      CHECK(oracle::dist(oracle::vec(multiply(a, to_element(x), to_element(y))), oracle::multiply(c, x, y)) < 1e-14);
    }
  }

  TEST_CASE("multiply rejects mismatched lengths") {
    CHECK_THROWS_AS(multiply(catalog::diagonal_algebra(2), Element{1.0}, Element{1.0, 2.0}), DimensionError);
    CHECK_THROWS_AS(FiniteDimAlgebra({"a", "b"}, Tensor3(2, 2, 3)), DimensionError);
  }

  TEST_CASE("l1 norm") {
    CHECK(l1_norm(Element{1.0, -1.0}) == doctest::Approx(2.0));
    CHECK(l1_norm(Element::zero(3)) == 0.0);
    CHECK(l1_norm(Element{Scalar(3.0, 4.0), 0.0}) == doctest::Approx(5.0));
  }

  TEST_CASE("validate reports residuals") {
    const auto ok = validate(catalog::diagonal_algebra(2));
    CHECK(ok.pass());
    CHECK(ok.find("associativity")->value == 0.0);

    Tensor3 t(1, 1, 1);
    t(0, 0, 0) = 2.0;
    const auto big = validate(FiniteDimAlgebra(t));
    CHECK_FALSE(big.pass());
    CHECK(big.first_failure()->name == "submultiplicativity");
    CHECK(big.find("submultiplicativity")->value == doctest::Approx(1.0));
  }

  TEST_CASE("validate detects a perturbed associativity slot") {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto a = random_algebra(200 + s, 4);
      Tensor3 t = a.mul();
      std::mt19937_64 rng(s);
      const std::size_t i = rng() % 4, j = rng() % 4, k = rng() % 4;
      t(i, j, k) += Scalar(0.05, -0.02);
      const FiniteDimAlgebra bad(a.labels(), t);
      const double expected = oracle::associativity_residual(oracle::from(t));
      const auto report = validate(bad);
      CHECK(report.find("associativity")->value == doctest::Approx(expected).epsilon(1e-9));
      if (expected > 1e-9) CHECK_FALSE(report.pass());
      CHECK(oracle::associativity_residual(oracle::from(a.mul())) < 1e-9);
    }
  }

  TEST_CASE("non-finite constants are invalid") {
    Tensor3 t(1, 1, 1);
    t(0, 0, 0) = Scalar(std::nan(""), 0.0);
    CHECK_FALSE(is_valid(FiniteDimAlgebra(t)));
  }

  TEST_CASE("dimension zero is vacuously valid") {
    const auto z = catalog::zero_algebra(0);
    CHECK(is_valid(z));
    CHECK(is_commutative(z));
    CHECK(find_identity(z).has_value());
    CHECK(find_identity(z)->size() == 0);
  }

  TEST_CASE("find_identity") {
    const auto c2 = find_identity(catalog::diagonal_algebra(2));
    REQUIRE(c2);
    CHECK(oracle::dist(oracle::vec(*c2), {1.0, 1.0}) < 1e-12);

    const auto dual = find_identity(catalog::truncated_polynomial(2));
    REQUIRE(dual);
    CHECK(oracle::dist(oracle::vec(*dual), {1.0, 0.0}) < 1e-12);

    CHECK_FALSE(find_identity(catalog::zero_algebra(1)));
    CHECK_FALSE(find_identity(catalog::matrix_unit_row()));
    const auto m2 = find_identity(catalog::matrix_algebra(2));
    REQUIRE(m2);
    CHECK(oracle::dist(oracle::vec(*m2), {1.0, 0.0, 0.0, 1.0}) < 1e-12);
  }

  TEST_CASE("identity acts as identity on random elements") {
    std::mt19937_64 rng(5);
    int unital = 0;
    for (std::uint64_t s = 0; s < 40; ++s) {
      const auto a = random_algebra(300 + s, 1 + s % 5);
      const auto id = find_identity(a);
      if (!id) continue;
      ++unital;
      const auto c = oracle::from(a.mul());
      for (int r = 0; r < 100; ++r) {
        const auto x = oracle::random_vec(rng, a.dim());
        CHECK(oracle::dist(oracle::multiply(c, oracle::vec(*id), x), x) < 1e-10);
        CHECK(oracle::dist(oracle::multiply(c, x, oracle::vec(*id)), x) < 1e-10);
      }
    }
    CHECK(unital > 3);
  }

  TEST_CASE("find_left_identities") {
    const auto c2 = find_left_identities(catalog::diagonal_algebra(2));
    REQUIRE_FALSE(c2.empty());
    CHECK(c2.dimension() == 0);
    CHECK(c2.contains(Element{1.0, 1.0}, 1e-10));

    CHECK(find_left_identities(catalog::zero_algebra(1)).empty());

    // span{E11, E12}: x e_i = e_i for x = E11 + mu E12, any mu.
    const auto row = catalog::matrix_unit_row();
    const auto set = find_left_identities(row);
    REQUIRE_FALSE(set.empty());
    CHECK(set.dimension() == 1);
    const auto c = oracle::from(row.mul());
    std::mt19937_64 rng(3);
    for (int r = 0; r < 10; ++r) {
      const Scalar mu(std::uniform_real_distribution<double>(-2, 2)(rng), 0.5);
      const oracle::Vec x = {1.0, mu};
      CHECK(set.contains(to_element(x), 1e-9));
      for (std::size_t i = 0; i < 2; ++i) {
        oracle::Vec e(2);
        e[i] = 1.0;
        CHECK(oracle::dist(oracle::multiply(c, x, e), e) < 1e-12);
      }
    }
    CHECK_FALSE(set.contains(Element{0.0, 1.0}, 1e-6));
    CHECK(find_left_identities(catalog::matrix_unit_column()).empty());
  }

  TEST_CASE("is_commutative") {
    CHECK(is_commutative(catalog::diagonal_algebra(2)));
    CHECK_FALSE(is_commutative(catalog::matrix_unit_row()));
    const auto bt = theta_lau(catalog::diagonal_algebra(2), catalog::truncated_polynomial(2), Functional{1.0, 0.0});
    CHECK(is_commutative(bt.carrier));
  }

  TEST_CASE("unitize") {
    const auto u = unitize(catalog::zero_algebra(1));
    CHECK(u.algebra.dim() == 2);
    const auto id = find_identity(u.algebra);
    REQUIRE(id);
    CHECK(oracle::dist(oracle::vec(*id), {1.0, 0.0}) < 1e-12);

    const auto uc = unitize(catalog::complex_field());
    CHECK(characters(uc.algebra).size() == 2);
    CHECK(u.embed(Element{Scalar(2.0, 1.0)}).coeffs(1) == Scalar(2.0, 1.0));
  }

  TEST_CASE("unitize equals the theta-Lau product of C with the identity character") {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto a = random_algebra(400 + s, s % 5);
      const auto u = unitize(a);
      const auto bt = theta_lau(catalog::complex_field(), a, Functional{1.0});
      CHECK(u.algebra.mul().max_deviation(bt.carrier.mul()) < 1e-15);
      CHECK(is_valid(u.algebra));
      const auto id = find_identity(u.algebra);
      REQUIRE(id);
      CHECK(std::abs((*id)[0] - 1.0) < 1e-10);
      CHECK(l1_norm(*id) == doctest::Approx(1.0));
      // Embedding is an isometry onto the second block.
      std::mt19937_64 rng(s);
      const auto x = to_element(oracle::random_vec(rng, a.dim()));
      CHECK(l1_norm(u.embed(x)) == doctest::Approx(l1_norm(x)));
    }
  }

  TEST_CASE("norm bound and bilinearity on fuzzed elements") {
    std::mt19937_64 rng(99);
    for (std::uint64_t s = 0; s < 30; ++s) {
      const auto a = random_algebra(500 + s, 1 + s % 6);
      const std::size_t n = a.dim();
      const auto x = to_element(oracle::random_vec(rng, n)), y = to_element(oracle::random_vec(rng, n)),
                 z = to_element(oracle::random_vec(rng, n));
      CHECK(l1_norm(multiply(a, x, y)) <= l1_norm(x) * l1_norm(y) * (1 + 1e-12) + 1e-15);
      const Scalar alpha(0.3, -1.2);
      const Element lhs = multiply(a, alpha * x + z, y);
      const Element rhs = alpha * multiply(a, x, y) + multiply(a, z, y);
      CHECK(max_abs(lhs.coeffs - rhs.coeffs) < 1e-12);
      const Element lhs2 = multiply(a, y, alpha * x + z);
      const Element rhs2 = alpha * multiply(a, y, x) + multiply(a, y, z);
      CHECK(max_abs(lhs2.coeffs - rhs2.coeffs) < 1e-12);
    }
  }

  TEST_CASE("multiplicativity residual") {
    const auto c2 = catalog::diagonal_algebra(2);
    CHECK(multiplicativity_residual(c2, Functional{1.0, 0.0}) == 0.0);
    CHECK(multiplicativity_residual(c2, Functional{1.0, 1.0}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(multiplicativity_residual(c2, Functional{1.0}), DimensionError);
  }
}

TEST_SUITE("catalog") {
  TEST_CASE("building blocks are valid Banach algebras") {
    for (std::size_t k = 1; k <= 4; ++k) {
      CHECK(is_valid(catalog::zero_algebra(k)));
      CHECK(is_valid(catalog::diagonal_algebra(k)));
      CHECK(is_valid(catalog::truncated_polynomial(k)));
      CHECK(is_valid(catalog::nilpotent_polynomial(k)));
    }
    CHECK(is_valid(catalog::matrix_algebra(2)));
    CHECK(is_valid(catalog::matrix_algebra(3)));
    CHECK(is_valid(catalog::matrix_unit_row()));
    CHECK(is_valid(catalog::matrix_unit_column()));
    CHECK(is_valid(catalog::upper_triangular()));
  }

  TEST_CASE("change of basis preserves the algebra") {
    const auto a = catalog::upper_triangular();
    Matrix p(3, 3);
    p << 1, 0.5, 0, 0, 1, 0.25, 0.1, 0, 1;
    const auto b = catalog::change_basis(a, p);
    CHECK(oracle::associativity_residual(oracle::from(b.mul())) < 1e-12);
    // g_i g_j computed in the old basis equals the new structure constants pushed forward.
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 3; ++j) {
        const Element old = multiply(a, Element(p.col(i)), Element(p.col(j)));
        const Vector pushed = p * b.basis_product(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).coeffs;
        CHECK(max_abs(old.coeffs - pushed) < 1e-12);
      }
    CHECK_THROWS_AS(catalog::change_basis(a, Matrix::Zero(3, 3)), NumericalError);
    CHECK_THROWS_AS(catalog::change_basis(a, Matrix::Identity(2, 2)), DimensionError);
  }

  TEST_CASE("direct sum, permute, rescale") {
    const auto s = catalog::direct_sum(catalog::complex_field(), catalog::truncated_polynomial(2));
    CHECK(s.dim() == 3);
    CHECK(is_commutative(s));
    CHECK(find_identity(s).has_value());
    const auto p = catalog::permute(catalog::diagonal_algebra(3), {2, 0, 1});
    CHECK(p.mul().max_deviation(catalog::diagonal_algebra(3).mul()) == 0.0);
    const auto r = catalog::rescale(catalog::diagonal_algebra(2), 0.5);
    CHECK(catalog::basis_product_bound(r) == doctest::Approx(0.5));
  }

  TEST_CASE("transport rescales into the unit ball") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto a = random_algebra(600 + s, 1 + s % 6);
      CHECK(catalog::basis_product_bound(a) <= 1.0 + 1e-12);
      CHECK(is_valid(a));
    }
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("solve returns the minimum-norm solution and null space") {
    Matrix m(2, 3);
    m << 1, 0, 0, 0, 1, 0;
    Vector rhs(2);
    rhs << 2, 3;
    const auto sol = linalg::solve(m, rhs, 1e-12, 1e-12);
    CHECK(sol.consistent);
    CHECK(std::abs(sol.particular(0) - 2.0) < 1e-12);
    CHECK(std::abs(sol.particular(2)) < 1e-12);
    CHECK(sol.null_basis.cols() == 1);
    Matrix rank1(2, 1);
    rank1 << 1, 1;
    Vector inconsistent(2);
    inconsistent << 1, -1;
    CHECK_FALSE(linalg::solve(rank1, inconsistent, 1e-9, 1e-12).consistent);
  }

  TEST_CASE("spans and intersections") {
    Matrix u(3, 2), v(3, 2);
    u << 1, 0, 0, 1, 0, 0;
    v << 0, 0, 1, 0, 0, 1;
    const Matrix w = linalg::intersect(linalg::orthonormal_span(u, 1e-12), linalg::orthonormal_span(v, 1e-12), 1e-12);
    CHECK(w.cols() == 1);
    CHECK(std::abs(std::abs(w(1, 0)) - 1.0) < 1e-12);
    CHECK(linalg::same_subspace(u, linalg::orthonormal_span(u * Matrix::Identity(2, 2) * 3.0, 1e-12), 1e-12));
    CHECK(linalg::null_space(Matrix::Identity(3, 3), 1e-12).cols() == 0);
  }
}
