#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "balg/bimodule.hpp"
#include "balg/verdict.hpp"

namespace balg {

/// A nonzero multiplicative functional, verified on construction.
class Character {
 public:
  /// Throws NumericalError if phi is zero or its multiplicativity residual exceeds tol.
  static Character verified(const FiniteDimAlgebra& a, Functional phi, double tol);
  static std::optional<Character> try_verify(const FiniteDimAlgebra& a, Functional phi, double tol);

  const Functional& functional() const { return phi_; }
  double residual() const { return residual_; }

 private:
  Character(Functional phi, double residual) : phi_(std::move(phi)), residual_(residual) {}
  Functional phi_;
  double residual_ = 0.0;
};

/// Finite set of characters, deduplicated at l-infinity distance `tolerance`.
class GelfandSet {
 public:
  explicit GelfandSet(double tolerance = 1e-6) : tolerance_(tolerance) {}

  /// False (and no insertion) when an existing member is within tolerance.
  bool insert(Character c);
  std::optional<std::size_t> find(const Functional& phi) const;

  const std::vector<Character>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  double tolerance() const { return tolerance_; }

  /// Lexicographic order on (re, im) of the coefficients, rounded at 1e-9.
  void canonicalize();

 private:
  double tolerance_;
  std::vector<Character> members_;
};

struct SetComparison {
  bool equal = false;
  std::vector<Functional> only_in_first;
  std::vector<Functional> only_in_second;
};

/// Bijective matching up to l-infinity distance tol.
SetComparison compare_sets(const GelfandSet& first, const GelfandSet& second, double tol);

/// Subspace of an algebra given by orthonormal coordinate columns.
struct Ideal {
  Matrix basis;  // parent_dim x dim
  std::size_t parent_dim = 0;

  std::size_t dim() const { return static_cast<std::size_t>(basis.cols()); }
  bool contains(const Element& x, double tol) const;
};

/// Smallest two-sided ideal containing the columns of `generators`.
Ideal ideal_closure(const FiniteDimAlgebra& a, const Matrix& generators, const Tolerances& tol = {});
/// Max distance of e_i v and v e_i from the subspace, over basis vectors v.
double ideal_residual(const FiniteDimAlgebra& a, const Ideal& ideal);

Ideal commutator_ideal(const FiniteDimAlgebra& a, const Tolerances& tol = {});

struct Quotient {
  FiniteDimAlgebra algebra;
  Matrix projection;  // q x n homomorphism with kernel the ideal
  Matrix lift;        // n x q, coordinate vectors spanning a complement
};

/// Complement spanned by coordinate vectors chosen by pivoting. Throws
/// ConstructionError if the subspace is not an ideal.
Quotient quotient(const FiniteDimAlgebra& a, const Ideal& ideal, const Tolerances& tol = {});

/// Trace-form kernel in the unitization, verified to be a nilpotent ideal.
/// Throws NumericalError when verification fails.
Ideal jacobson_radical(const FiniteDimAlgebra& a, const Tolerances& tol = {});
bool is_semisimple(const FiniteDimAlgebra& a, const Tolerances& tol = {});

/// Smallest k with I^k = 0 (0 for the zero ideal), or nullopt if none up to dim + 1.
std::optional<std::size_t> nilpotency_index(const FiniteDimAlgebra& a, const Ideal& ideal, const Tolerances& tol = {});

inline constexpr std::uint64_t kDefaultSpectrumSeed = 0x5eed5eedULL;

/// Every character of A: reduce the unitization modulo commutators and radical,
/// then read characters off as joint left eigenvectors of the multiplication operators.
GelfandSet characters(const FiniteDimAlgebra& a, const Tolerances& tol = {},
                      std::uint64_t seed = kDefaultSpectrumSeed);

inline constexpr double kBruteforceClusterRadius = 1e-2;

/// Multi-start damped Newton on phi_i phi_j = sum_k c_ijk phi_k. Oracle only;
/// may miss roots. Intended for dim <= 4. Converged points within
/// kBruteforceClusterRadius are merged into their centroid, so members near
/// degenerate roots are accurate to roughly 1e-16^(1/multiplicity), not 1e-8.
/// Clusters whose centroid lies within the radius of zero are dropped.
GelfandSet characters_bruteforce(const FiniteDimAlgebra& a, const Tolerances& tol = {},
                                 std::uint64_t seed = kDefaultSpectrumSeed, int starts = 256);

struct GelfandEF {
  GelfandSet e;
  GelfandSet f;
  std::vector<Functional> unverified;  // assembled members failing verification on A⋈B
};

/// E = {(phi, 0)}, F = {(phi, psi) : phi in Δ(A) ∪ {0}, psi in Δ(B), psi(a.b) = psi(b.a) = phi(a) psi(b)},
/// packaged as functionals on A⋈B.
GelfandEF gelfand_ef(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                     const Tolerances& tol = {}, std::uint64_t seed = kDefaultSpectrumSeed);

/// characters(A⋈B) against E ∪ F as sets.
Verdict verify_prop24(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                      const Tolerances& tol = {}, std::uint64_t seed = kDefaultSpectrumSeed);

/// Requires A, B commutative and the action symmetric and algebraic (HypothesisError otherwise).
Verdict check_corollary25(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b, const BimoduleAction& action,
                          const Tolerances& tol = {});

}  // namespace balg
