#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bolext/nonabelian.hpp"

namespace bolext {

/// A sequence 0 -> V -i-> E -p-> B -> 0 given by the three algebras and the
/// matrices of i (dim E x dim V) and p (dim B x dim E).
template <class F>
struct Extension {
  BolAlgebra<F> fiber;
  BolAlgebra<F> total;
  BolAlgebra<F> base;
  Matrix<F> inj;
  Matrix<F> proj;

  const F& field() const { return total.field(); }
};

/// Tags: "shape", "morphism-i", "morphism-p", "injective", "surjective",
/// "exact" (image of i equals kernel of p).
template <class F>
ValidationReport<F> validate_extension(const Extension<F>& e);

/// Throws UsageError unless s (dim E x dim B) satisfies p s = id.
template <class F>
void check_section(const Extension<F>& e, const Matrix<F>& s);

/// s(e_j) is the preimage of e_j inside the span of the standard basis vectors
/// at the non-pivot positions of the reduced kernel basis of p. Throws
/// UsageError if e is not valid.
template <class F>
Matrix<F> canonical_section(const Extension<F>& e);

/// Coordinates of E in the basis (s(e_1), ..., s(e_n), i(e_1), ..., i(e_m)):
/// the inverse of [s | i]. Rows 0..n-1 give the B part, rows n.. the V part.
template <class F>
Matrix<F> adapted_coordinates(const Extension<F>& e, const Matrix<F>& s);

/// V-coordinates of an element of i(V); ConsistencyError if w is not in i(V).
template <class F>
Vector<F> fiber_coordinates(const Extension<F>& e, const Vector<F>& w);

/// nu(x,y) = s(x)*s(y) - s(x*y), omega(x,y,z) = [s x,s y,s z] - s[x,y,z],
/// mu(x)a = s(x)*a, theta(x,y)a = [a,s x,s y], D(x,y)a = [s x,s y,a], all
/// read in V-coordinates. Brackets with two arguments in V and one s(x) are
/// not part of the cocycle data and are not recorded.
template <class F>
NonAbelianCocycle<F> extract_cocycle(const Extension<F>& e, const Matrix<F>& s);

/// The extension B + V -> B built from c, with V the last coordinates.
template <class F>
Extension<F> as_extension(const NonAbelianCocycle<F>& c);

/// Cocycle of e for its canonical section.
template <class F>
NonAbelianCocycle<F> theta_map(const Extension<F>& e);

template <class F>
struct ExtensionEquivalence {
  /// Search over phi : B -> V; the witness is phi.
  SearchResult<F> search;
  /// f : E1 -> E2, f(s1 x + i1 a) = s2 x - i2 phi(x) + i2 a; verified bijective and a morphism.
  std::optional<Matrix<F>> f;
};

/// Looks for a morphism f : E1 -> E2 with f i1 = i2 and p2 f = p1. Solved
/// exactly when products and brackets with two arguments in i2(V) vanish in E2,
/// exhaustively over GF(p) within the bound, undecided otherwise.
template <class F>
ExtensionEquivalence<F> extensions_equivalent(const Extension<F>& e1, const Extension<F>& e2,
                                              const SearchBounds& bounds = {});

struct ClassificationSummary {
  std::uint64_t candidates = 0;
  std::size_t cocycles = 0;
  std::size_t classes = 0;
  /// Number of valid cocycles in each class, in order of first member.
  std::vector<std::size_t> class_sizes;
};

template <class F>
struct Classification {
  ClassificationSummary summary;
  std::vector<NonAbelianCocycle<F>> representatives;
};

/// Enumerates every (nu, omega) over GF(p) with the given fixed action maps,
/// keeps the valid cocycles and partitions them by solve_equivalence. Throws
/// UnsupportedEnumeration over Q, over the bound, or on an undecided pair.
Classification<PrimeField> classify_corpus(const BolAlgebra<PrimeField>& base, const BolAlgebra<PrimeField>& fiber,
                                           const Actions<PrimeField>& actions, Variant variant = Variant::kCorrected,
                                           const SearchBounds& bounds = {});

}  // namespace bolext
