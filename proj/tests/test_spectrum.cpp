#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "balg/bowtie.hpp"
#include "balg/catalog.hpp"
#include "balg/errors.hpp"
#include "balg/spectrum.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace balg;

namespace {

bool has_member(const GelfandSet& s, const oracle::Vec& phi, double tol = 1e-8) {
  for (const auto& c : s.members())
    if (oracle::dist(oracle::vec(c.functional()), phi) <= tol) return true;
  return false;
}

GelfandSet multistart(const FiniteDimAlgebra& a) { return characters_bruteforce(a, {}, 77, 256); }

}  // namespace

TEST_SUITE("ideals") {
  TEST_CASE("commutator ideal") {
    CHECK(commutator_ideal(catalog::truncated_polynomial(3)).dim() == 0);
    const auto row = commutator_ideal(catalog::matrix_unit_row());
    CHECK(row.dim() == 1);
    CHECK(row.contains(Element{0.0, 1.0}, 1e-12));
    CHECK_FALSE(row.contains(Element{1.0, 0.0}, 1e-6));
    CHECK(commutator_ideal(catalog::matrix_algebra(2)).dim() == 4);
    const auto t2 = commutator_ideal(catalog::upper_triangular());
    CHECK(t2.dim() == 1);
    CHECK(t2.contains(Element{0.0, 1.0, 0.0}, 1e-12));
  }

  TEST_CASE("ideal closure") {
    const auto m2 = catalog::matrix_algebra(2);
    CHECK(ideal_closure(m2, Element::basis(4, 1).coeffs).dim() == 4);
    const auto dual = catalog::truncated_polynomial(3);
    const auto t = ideal_closure(dual, Element::basis(3, 1).coeffs);
    CHECK(t.dim() == 2);
    CHECK(ideal_residual(dual, t) < 1e-12);
  }

  TEST_CASE("quotient by the B-block recovers A exactly") {
    for (const auto& inst : sample_all(5, 211)) {
      const auto bt = build_bowtie(inst.a, inst.b, inst.action);
      const std::size_t n = inst.a.dim(), m = inst.b.dim();
      Ideal block{Matrix::Zero(static_cast<Eigen::Index>(n + m), static_cast<Eigen::Index>(m)), n + m};
      for (std::size_t p = 0; p < m; ++p) block.basis(static_cast<Eigen::Index>(n + p), static_cast<Eigen::Index>(p)) = 1.0;
      const auto q = quotient(bt.carrier, block);
      CHECK(q.algebra.dim() == n);
      CHECK(q.algebra.mul().max_deviation(inst.a.mul()) == 0.0);
    }
  }

  TEST_CASE("quotient examples and refusal") {
    const auto m2 = catalog::matrix_algebra(2);
    CHECK(quotient(m2, commutator_ideal(m2)).algebra.dim() == 0);
    const auto dual = catalog::truncated_polynomial(2);
    Ideal t{Matrix(Element{0.0, 1.0}.coeffs), 2};
    const auto q = quotient(dual, t);
    CHECK(q.algebra.mul().max_deviation(catalog::complex_field().mul()) < 1e-15);
    const Ideal not_ideal{Matrix(Element{1.0, 0.0}.coeffs), 2};
    CHECK_THROWS_AS(quotient(catalog::matrix_unit_row(), not_ideal), ConstructionError);
  }

  TEST_CASE("projection is a homomorphism") {
    std::mt19937_64 rng(3);
    const auto a = catalog::direct_sum(catalog::upper_triangular(), catalog::truncated_polynomial(3));
    for (const Ideal& ideal : {commutator_ideal(a), jacobson_radical(a)}) {
      const auto q = quotient(a, ideal);
      for (int r = 0; r < 5; ++r) {
        const auto x = to_element(oracle::random_vec(rng, a.dim())), y = to_element(oracle::random_vec(rng, a.dim()));
        const Vector lhs = q.projection * multiply(a, x, y).coeffs;
        const Vector rhs =
            multiply(q.algebra, Element(q.projection * x.coeffs), Element(q.projection * y.coeffs)).coeffs;
        CHECK(max_abs(lhs - rhs) < 1e-12);
      }
    }
  }
}

TEST_SUITE("radical") {
  TEST_CASE("jacobson radical examples") {
    const auto dual = jacobson_radical(catalog::truncated_polynomial(2));
    CHECK(dual.dim() == 1);
    CHECK(dual.contains(Element{0.0, 1.0}, 1e-12));
    CHECK(jacobson_radical(catalog::diagonal_algebra(2)).dim() == 0);
    CHECK(jacobson_radical(catalog::matrix_algebra(2)).dim() == 0);
    CHECK(jacobson_radical(catalog::upper_triangular()).dim() == 1);
    CHECK(jacobson_radical(catalog::nilpotent_polynomial(3)).dim() == 3);
    CHECK(jacobson_radical(catalog::zero_algebra(0)).dim() == 0);
  }

  TEST_CASE("module extension of a semisimple algebra has the module as radical") {
    const auto a = catalog::direct_sum(catalog::diagonal_algebra(2), catalog::matrix_algebra(2));
    const auto bt = module_extension(a, regular_bimodule(a));
    const auto rad = jacobson_radical(bt.carrier);
    CHECK(rad.dim() == 6);
    for (std::size_t p = 0; p < 6; ++p) CHECK(rad.contains(bt.embed_b(Element::basis(6, p)), 1e-10));
  }

  TEST_CASE("is_semisimple") {
    CHECK(is_semisimple(catalog::diagonal_algebra(2)));
    CHECK_FALSE(is_semisimple(catalog::truncated_polynomial(2)));
    CHECK(is_semisimple(catalog::matrix_algebra(2)));
  }

  TEST_CASE("radical is a nilpotent ideal on fuzzed algebras") {
    for (const auto& inst : sample_all(10, 221, 6)) {
      const auto bt = build_bowtie(inst.a, inst.b, inst.action);
      for (const FiniteDimAlgebra* alg : {&inst.a, &inst.b, &bt.carrier}) {
        const auto rad = jacobson_radical(*alg);
        CHECK(ideal_residual(*alg, rad) < 1e-8);
        CHECK(nilpotency_index(*alg, rad).has_value());
        // Quotient by the radical is semisimple.
        if (rad.dim() < alg->dim()) CHECK(is_semisimple(quotient(*alg, rad).algebra));
      }
    }
  }
}

TEST_SUITE("characters") {
  TEST_CASE("coordinate functionals of C^n") {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto set = characters(catalog::diagonal_algebra(n));
      CHECK(set.size() == n);
      for (std::size_t i = 0; i < n; ++i) {
        oracle::Vec e(n);
        e[i] = 1.0;
        CHECK(has_member(set, e));
      }
    }
  }

  TEST_CASE("small examples") {
    const auto dual = characters(catalog::truncated_polynomial(2));
    REQUIRE(dual.size() == 1);
    CHECK(has_member(dual, {1.0, 0.0}));
    CHECK(characters(catalog::matrix_algebra(2)).empty());
    CHECK(characters(catalog::zero_algebra(3)).empty());
    CHECK(characters(catalog::matrix_unit_row()).size() == 1);
    CHECK(characters(catalog::zero_algebra(0)).empty());
  }

  TEST_CASE("bruteforce drops the degenerate neighbourhood of zero") {
    CHECK(characters_bruteforce(catalog::nilpotent_polynomial(3)).empty());
    CHECK(characters_bruteforce(catalog::direct_sum(catalog::nilpotent_polynomial(3), catalog::complex_field())).size() == 1);
  }

  TEST_CASE("bruteforce examples") {
    const auto c2 = characters_bruteforce(catalog::diagonal_algebra(2));
    CHECK(c2.size() == 2);
    CHECK(has_member(c2, {1.0, 0.0}));
    CHECK(has_member(c2, {0.0, 1.0}));
    CHECK(characters_bruteforce(catalog::truncated_polynomial(2)).size() == 1);
    CHECK(characters_bruteforce(catalog::zero_algebra(2)).empty());
  }

  TEST_CASE("every returned character is verified") {
    for (const auto& inst : sample_all(8, 231, 6)) {
      const auto set = characters(inst.a);
      for (const auto& c : set.members()) {
        CHECK(c.residual() <= 1e-8);
        CHECK(oracle::multiplicativity_residual(oracle::from(inst.a.mul()), oracle::vec(c.functional())) <= 1e-8);
        CHECK(linf_norm(c.functional()) > 1e-6);
        CHECK(linf_norm(c.functional()) <= 1.0 + 1e-8);
      }
    }
  }

  TEST_CASE("Character construction checks") {
    const auto c2 = catalog::diagonal_algebra(2);
    CHECK_THROWS_AS(Character::verified(c2, Functional{1.0, 1.0}, 1e-8), NumericalError);
    CHECK_THROWS_AS(Character::verified(c2, Functional{0.0, 0.0}, 1e-8), NumericalError);
    CHECK_FALSE(Character::try_verify(c2, Functional{0.5, 0.0}, 1e-8));
    CHECK(Character::try_verify(c2, Functional{0.0, 1.0}, 1e-8));
  }

  TEST_CASE("GelfandSet deduplicates and compares") {
    const auto c2 = catalog::diagonal_algebra(2);
    GelfandSet s(1e-6);
    CHECK(s.insert(Character::verified(c2, Functional{1.0, 0.0}, 1e-8)));
    CHECK_FALSE(s.insert(Character::verified(c2, Functional{1.0 + 1e-9, 0.0}, 1e-8)));
    CHECK(s.insert(Character::verified(c2, Functional{0.0, 1.0}, 1e-8)));
    CHECK(s.size() == 2);
    CHECK(compare_sets(s, characters(c2), 1e-6).equal);
    GelfandSet t(1e-6);
    t.insert(Character::verified(c2, Functional{0.0, 1.0}, 1e-8));
    const auto cmp = compare_sets(s, t, 1e-6);
    CHECK_FALSE(cmp.equal);
    CHECK(cmp.only_in_first.size() == 1);
    s.canonicalize();
    CHECK(std::abs(s.members()[0].functional()[0]) < 1e-12);
  }

  TEST_CASE("invariant under basis permutation") {
    std::mt19937_64 rng(5);
    for (const auto& inst : sample(Family::Direct, 10, 241, 6)) {
      const auto base = characters(inst.a);
      const std::size_t n = inst.a.dim();
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto permuted = characters(catalog::permute(inst.a, perm));
      REQUIRE(permuted.size() == base.size());
      for (const auto& c : base.members()) {
        oracle::Vec moved(n);
        for (std::size_t i = 0; i < n; ++i) moved[perm[i]] = c.functional()[i];
        CHECK(has_member(permuted, moved, 1e-6));
      }
    }
  }

  TEST_CASE("characters pull back from the radical quotient") {
    for (const auto& inst : sample_all(5, 251, 5)) {
      const auto rad = jacobson_radical(inst.a);
      const auto q = quotient(inst.a, rad);
      const auto below = characters(q.algebra);
      const auto above = characters(inst.a);
      CHECK(below.size() == above.size());
      for (const auto& c : below.members()) {
        const Functional pulled(q.projection.transpose() * c.functional().coeffs);
        CHECK(has_member(above, oracle::vec(pulled), 1e-6));
      }
    }
  }

  TEST_CASE("multistart solver agrees on small algebras") {
    int equal = 0, total = 0;
    for (const auto& inst : sample_all(10, 261, 4)) {
      const auto fast = characters(inst.a);
      const auto slow = multistart(inst.a);
      for (const auto& c : slow.members()) {
        double nearest = HUGE_VAL;
        for (const auto& f : fast.members()) nearest = std::min(nearest, linf_distance(c.functional(), f.functional()));
        CHECK(nearest <= kBruteforceClusterRadius);
      }
      ++total;
      if (compare_sets(fast, slow, kBruteforceClusterRadius).equal) ++equal;
    }
    CHECK(equal >= total * 9 / 10);
  }

  TEST_CASE("unitization of C has two characters") {
    const auto u = unitize(catalog::complex_field());
    const auto set = characters(u.algebra);
    CHECK(set.size() == 2);
    CHECK(has_member(set, {1.0, 0.0}));
    CHECK(has_member(set, {1.0, 1.0}));
  }
}

TEST_SUITE("gelfand space of the product") {
  TEST_CASE("theta-Lau: F pairs theta with every character of B") {
    const auto a = catalog::diagonal_algebra(2);
    const auto b = catalog::diagonal_algebra(3);
    const Functional theta{0.0, 1.0};
    const auto ef = gelfand_ef(a, b, theta_action(theta, 3));
    CHECK(ef.e.size() == 2);
    CHECK(ef.f.size() == 3);
    for (const auto& c : ef.f.members()) {
      CHECK(std::abs(c.functional()[0]) < 1e-12);
      CHECK(std::abs(c.functional()[1] - 1.0) < 1e-12);
    }
    CHECK(ef.unverified.empty());
  }

  TEST_CASE("module extension: F is empty") {
    const auto a = catalog::direct_sum(catalog::diagonal_algebra(2), catalog::truncated_polynomial(2));
    const auto ef = gelfand_ef(a, catalog::zero_algebra(4), regular_bimodule(a));
    CHECK(ef.f.empty());
    CHECK(ef.e.size() == 3);
  }

  TEST_CASE("direct product: F has zero A-part") {
    const auto a = catalog::diagonal_algebra(2);
    const auto b = catalog::truncated_polynomial(2);
    const auto ef = gelfand_ef(a, b, BimoduleAction::zero(2, 2));
    REQUIRE(ef.f.size() == 1);
    CHECK(oracle::dist(oracle::vec(ef.f.members()[0].functional()), {0.0, 0.0, 1.0, 0.0}) < 1e-12);
    const auto all = characters(direct_product(a, b).carrier);
    CHECK(all.size() == 3);
  }

  TEST_CASE("verify on small products") {
    const auto unit = verify_prop24(catalog::complex_field(), catalog::complex_field(), theta_action(Functional{1.0}, 1));
    CHECK(unit.agree);
    CHECK(unit.label() == "agree");
    const auto lau =
        verify_prop24(catalog::diagonal_algebra(2), catalog::complex_field(), theta_action(Functional{1.0, 0.0}, 1));
    CHECK(lau.agree);
    CHECK(lau.note.find("3") != std::string::npos);
  }

  TEST_CASE("set equality on fuzzed instances of every family") {
    for (const auto& inst : sample_all(20, 271, 5)) CHECK(verify_prop24(inst.a, inst.b, inst.action).agree);
  }

  TEST_CASE("module extensions have spectrum E") {
    for (const auto& inst : sample(Family::ModuleExt, 15, 281, 5)) {
      const auto ef = gelfand_ef(inst.a, inst.b, inst.action);
      CHECK(ef.f.empty());
      const auto all = characters(build_bowtie(inst.a, inst.b, inst.action).carrier);
      CHECK(compare_sets(all, ef.e, 1e-6).equal);
    }
  }
}

TEST_SUITE("semisimplicity") {
  TEST_CASE("examples") {
    const auto c = catalog::complex_field();
    CHECK(check_corollary25(c, c, theta_action(Functional{1.0}, 1)).label() == "agree (both true)");
    const auto dual = catalog::truncated_polynomial(2);
    CHECK(check_corollary25(c, dual, theta_action(Functional{1.0}, 2)).label() == "agree (both false)");
    CHECK(check_corollary25(dual, c, BimoduleAction::zero(2, 1)).label() == "agree (both false)");
    const auto c2 = catalog::diagonal_algebra(2);
    CHECK(check_corollary25(c2, dual, theta_action(Functional{0.0, 1.0}, 2)).label() == "agree (both false)");
    CHECK(check_corollary25(c2, c2, theta_action(Functional{1.0, 0.0}, 2)).label() == "agree (both true)");
  }

  TEST_CASE("hypotheses are enforced") {
    const auto row = catalog::matrix_unit_row();
    const auto c = catalog::complex_field();
    CHECK_THROWS_AS(check_corollary25(row, c, BimoduleAction::zero(2, 1)), HypothesisError);
    CHECK_THROWS_AS(check_corollary25(c, row, BimoduleAction::zero(1, 2)), HypothesisError);
    CHECK_THROWS_AS(check_corollary25(c, catalog::zero_algebra(1), character_bimodule(Functional{1.0}, Functional{0.0}, 1)),
                    HypothesisError);
  }

  TEST_CASE("agrees on commutative symmetric fuzzed instances") {
    for (auto f : {Family::Direct, Family::ModuleExt, Family::ThetaLau, Family::TLau})
      for (const auto& inst : sample(f, 10, 291, 5, true)) {
        REQUIRE(is_commutative(inst.a));
        REQUIRE(is_commutative(inst.b));
        REQUIRE(is_symmetric(inst.action));
        CHECK(check_corollary25(inst.a, inst.b, inst.action).agree);
      }
  }
}
