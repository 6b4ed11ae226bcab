#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "bolext/cochains.hpp"
#include "bolext/representation.hpp"

namespace bolext {

/// Which reading of the cocycle identities to check. kLiteral evaluates the
/// identities verbatim as originally printed, dropping terms that are not
/// type-correct; kCorrected uses the forms that hold in every extension algebra.
enum class Variant { kCorrected, kLiteral };

std::string_view variant_name(Variant v);
/// "corrected" or "literal"; throws UsageError otherwise.
Variant parse_variant(std::string_view s);

/// The (2,3)-cocycle identities on basis tuples. Tags: "cochain-skew" (input
/// not skew), "cocycle-cyclic", "cocycle-product" (omega on a product),
/// "cocycle-bracket" (omega on a bracket). In the product identity the
/// corrected variant contains the term mu(x1*x2) nu(y1,y2); the literal
/// variant omits it.
template <class F>
ValidationReport<F> is_cocycle23(const BolAlgebra<F>& a, const Representation<F>& r, const CochainPair<F>& c,
                                 Variant variant = Variant::kCorrected,
                                 std::size_t limit = std::numeric_limits<std::size_t>::max());

/// nu(x,y) = mu(x)f(y) - mu(y)f(x) + (D(x,y) - mu(x*y))chi - f(x*y),
/// omega(x,y,z) = theta(y,z)f(x) - theta(x,z)f(y) + D(x,y)f(z) - f([x,y,z]).
template <class F>
CochainPair<F> coboundary(const Matrix<F>& f, const Vector<F>& chi, const BolAlgebra<F>& a,
                          const Representation<F>& r);

template <class F>
struct CohomologyResult {
  std::size_t z_dim = 0;
  std::size_t b_dim = 0;
  std::size_t h_dim = 0;
  Subspace<F> z_basis;
  Subspace<F> b_basis;
  /// One cocycle per dimension of the quotient: the first z_basis rows that
  /// are independent of b_basis and of the rows chosen before them.
  std::vector<CochainPair<F>> representatives;
};

/// Cocycle constraints as a matrix on the free cochain coordinates (see CochainCoordinates).
template <class F>
Matrix<F> cocycle_constraint_matrix(const BolAlgebra<F>& a, const Representation<F>& r, Variant variant);

/// The coboundary operator from (f, chi) coordinates (f(e_1), ..., f(e_n), chi)
/// to free cochain coordinates.
template <class F>
Matrix<F> coboundary_matrix(const BolAlgebra<F>& a, const Representation<F>& r);

/// Throws ContainmentError if some coboundary fails the chosen cocycle identities.
template <class F>
CohomologyResult<F> cohomology23(const BolAlgebra<F>& a, const Representation<F>& r,
                                 Variant variant = Variant::kCorrected);

template <class F>
struct CoboundaryPreimage {
  Matrix<F> f;
  Vector<F> chi;
};

/// A canonical (f, chi) whose coboundary is c1 - c2, if one exists.
template <class F>
std::optional<CoboundaryPreimage<F>> cocycles_cohomologous(const BolAlgebra<F>& a, const Representation<F>& r,
                                                           const CochainPair<F>& c1, const CochainPair<F>& c2,
                                                           Variant variant = Variant::kCorrected);

}  // namespace bolext
