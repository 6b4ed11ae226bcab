#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bolext/extension.hpp"

namespace bolext {

/// (alpha, beta) in Aut(B) x Aut(V).
template <class F>
struct AutPair {
  Matrix<F> alpha;
  Matrix<F> beta;

  bool operator==(const AutPair& o) const { return alpha == o.alpha && beta == o.beta; }
};

template <class F>
AutPair<F> identity_pair(const BolAlgebra<F>& base, const BolAlgebra<F>& fiber) {
  return {Matrix<F>::identity(base.field(), base.dim()), Matrix<F>::identity(fiber.field(), fiber.dim())};
}

template <class F>
AutPair<F> compose(const AutPair<F>& p2, const AutPair<F>& p1) {
  return {p2.alpha * p1.alpha, p2.beta * p1.beta};
}

/// Throws UsageError unless alpha and beta are invertible morphisms of base and fiber.
template <class F>
void check_aut_pair(const AutPair<F>& pair, const BolAlgebra<F>& base, const BolAlgebra<F>& fiber);

/// omega'(x,y,z) = beta omega(a^-1 x, a^-1 y, a^-1 z), nu' likewise,
/// theta'(x,y) = beta theta(a^-1 x, a^-1 y) beta^-1, D' and mu' likewise.
template <class F>
NonAbelianCocycle<F> act_on_cocycle(const NonAbelianCocycle<F>& c, const AutPair<F>& pair);

/// The inducibility identities for phi : B -> V against the cocycle of (e, s):
///   Iam1  beta omega(x,y,z) - omega(ax,ay,az) = theta(ax,az)phi(y) - theta(ay,az)phi(x)
///         - D(ax,ay)phi(z) + phi([x,y,z]) - [phi x,phi y,phi z]
///   Iam2  beta nu(x,y) - nu(ax,ay) = phi(x)*phi(y) + phi(x*y) - mu(ax)phi(y) + mu(ay)phi(x)
///   Iam3  beta(theta(x,y)a) - theta(ax,ay)beta(a) = [beta a,phi x,phi y]
///   Iam4  beta D(x,y)a - D(ax,ay)beta(a) = [phi x,phi y,beta a]
///   Iam5  beta mu(x)a - mu(ax)beta(a) = beta(a)*phi(x)
/// The bracket in Iam1 is read in B. kCorrected adds the conditions the lift
/// also needs when V has a nonzero bracket:
///   X10 [a,b,phi(x)] = 0    X11 [a,phi(x),b] = 0
template <class F>
ValidationReport<F> inducible_via(const Extension<F>& e, const Matrix<F>& s, const AutPair<F>& pair,
                                  const Matrix<F>& phi, Variant variant = Variant::kCorrected,
                                  std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Looks for phi satisfying inducible_via for the canonical section. With an
/// abelian fiber the phi-free conditions are checked first (AEE3: theta and mu
/// intertwined; AEE4: D intertwined) and the rest is solved exactly; otherwise
/// exhaustive over GF(p) within the bound, undecided over Q.
template <class F>
SearchResult<F> solve_inducibility(const Extension<F>& e, const AutPair<F>& pair,
                                   Variant variant = Variant::kCorrected, const SearchBounds& bounds = {});

/// gamma(i a + s x) = i beta(a) - i phi(x) + s alpha(x), verified to be an
/// automorphism with gamma i = i beta and p gamma = alpha p. Throws UsageError
/// if phi does not satisfy inducible_via.
template <class F>
Matrix<F> lift_automorphism(const Extension<F>& e, const Matrix<F>& s, const AutPair<F>& pair,
                            const Matrix<F>& phi, Variant variant = Variant::kCorrected);

/// Throws UsageError unless gamma is an automorphism of the total algebra with gamma(i V) = i V.
template <class F>
void check_fiber_automorphism(const Extension<F>& e, const Matrix<F>& gamma);

/// (p gamma s, gamma restricted to V in V-coordinates).
template <class F>
AutPair<F> kappa(const Extension<F>& e, const Matrix<F>& s, const Matrix<F>& gamma);

/// phi(x) = s(x) - gamma s(x) in V-coordinates; gamma must satisfy kappa = (id, id).
template <class F>
Matrix<F> s_map(const Extension<F>& e, const Matrix<F>& s, const Matrix<F>& gamma);

/// Non-abelian 1-cocycle conditions on phi : B -> V:
///   W5a a*phi(x) = 0     W5b [a,phi(x),b] = 0     W5c [b,a,phi(x)] = 0
///   W5d mu(x)phi(y) - mu(y)phi(x) = phi(x*y) + phi(x)*phi(y)
///   W5e theta(x,z)phi(y) - theta(y,z)phi(x) - D(x,y)phi(z) = [phi x,phi y,phi z] - phi[x,y,z]
template <class F>
ValidationReport<F> is_nab_one_cocycle(const NonAbelianCocycle<F>& c, const Matrix<F>& phi,
                                       std::size_t limit = std::numeric_limits<std::size_t>::max());

template <class F>
struct Z1Result {
  /// kFound when the set was determined, kUndecided otherwise.
  Verdict verdict = Verdict::kUndecided;
  std::string method;
  /// Linear path: the solution space in map coordinates.
  std::optional<Subspace<F>> space;
  /// Exhaustive path: every solution in coordinate order.
  std::vector<Matrix<F>> maps;
  /// Exhaustive path: whether the sum of any two solutions is again a solution.
  std::optional<bool> closed_under_addition;
};

template <class F>
Z1Result<F> z1_nab(const NonAbelianCocycle<F>& c, const SearchBounds& bounds = {});

/// beta theta(x,y) = theta(ax,ay) beta and beta mu(x) = mu(ax) beta on basis elements.
template <class F>
bool is_compatible(const AutPair<F>& pair, const Actions<F>& actions);

/// Compatible pairs (alpha, beta) in Aut(B) x GL(V) for a module r over b.
std::vector<AutPair<PrimeField>> compatible_pairs(const BolAlgebra<PrimeField>& b, const Representation<PrimeField>& r,
                                                  const SearchBounds& bounds = {});

template <class F>
struct WellsReport {
  AutPair<F> pair;
  /// The fiber is abelian, so the pair is first tested for compatibility.
  bool abelian_mode = false;
  bool compatible = true;
  NonAbelianCocycle<F> original;
  NonAbelianCocycle<F> acted;
  /// solve_equivalence(acted, original); kFound means the difference class is zero.
  SearchResult<F> equivalence;

  Verdict class_zero() const { return equivalence.verdict; }
};

/// Compares the cocycle of (e, s) with its image under the pair; s defaults
/// to the canonical section. An incompatible pair in abelian mode is reported
/// with verdict kNone and failing tag "incompatible pair".
template <class F>
WellsReport<F> wells_map(const Extension<F>& e, const AutPair<F>& pair, const SearchBounds& bounds = {},
                         const std::optional<Matrix<F>>& section = std::nullopt);

/// Every automorphism of the total algebra mapping i(V) onto itself, found by
/// testing all bijections of the block form gamma(s x + i a) = s alpha(x) + i(X x + beta a)
/// with alpha in GL(B), beta in GL(V), X arbitrary; ordered by (alpha, beta, X).
std::vector<Matrix<PrimeField>> enumerate_fiber_automorphisms(const Extension<PrimeField>& e,
                                                              const SearchBounds& bounds = {});

struct PairRecord {
  std::size_t alpha_index = 0;
  std::size_t beta_index = 0;
  bool in_image_kappa = false;
  Verdict inducible = Verdict::kUndecided;
  Verdict wells_zero = Verdict::kUndecided;
  std::string inducible_tag;
};

struct ExactnessReport {
  std::string field;
  std::size_t base_dim = 0;
  std::size_t fiber_dim = 0;
  std::size_t aut_base = 0;
  std::size_t aut_fiber = 0;
  std::size_t pairs = 0;
  std::size_t aut_v_total = 0;
  std::size_t kernel_kappa = 0;
  std::size_t z1 = 0;
  std::size_t image_kappa = 0;
  std::size_t kernel_wells = 0;
  std::size_t inducible = 0;
  std::size_t undecided = 0;
  std::string z1_method;
  bool z1_closed = true;
  bool kernel_kappa_is_image_i = false;
  bool kernel_wells_is_image_kappa = false;
  bool s_bijective = false;
  bool kappa_homomorphism = false;
  bool s_homomorphism = false;
  bool order_identity = false;
  bool inducible_matches_lifts = false;
  bool inducible_matches_wells = false;
  std::vector<PairRecord> records;

  bool exact() const {
    return kernel_kappa_is_image_i && kernel_wells_is_image_kappa && s_bijective && kappa_homomorphism &&
           s_homomorphism && order_identity && undecided == 0;
  }
};

/// Brute-force check of the Wells sequence for e over GF(p): Ker K = Im I,
/// Ker W = Im K over all of Aut(B) x Aut(V), and S : Ker K -> Z1 bijective.
/// Also records, per pair, solve_inducibility against the existence of a lift.
ExactnessReport verify_wells_exactness(const Extension<PrimeField>& e, Variant variant = Variant::kCorrected,
                                       const SearchBounds& bounds = {});

}  // namespace bolext
