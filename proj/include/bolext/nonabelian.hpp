#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bolext/abelian_cohomology.hpp"
#include "bolext/search.hpp"

namespace bolext {

/// Data (nu, omega, mu, theta, D) of a non-abelian (2,3)-cochain on `base`
/// with values in the algebra `fiber`.
template <class F>
struct NonAbelianCocycle {
  BolAlgebra<F> base;
  BolAlgebra<F> fiber;
  Cochain2<F> nu;
  Cochain3<F> omega;
  Actions<F> actions;

  static NonAbelianCocycle zero(const BolAlgebra<F>& base, const BolAlgebra<F>& fiber) {
    const F& f = base.field();
    const std::size_t n = base.dim(), m = fiber.dim();
    return {base, fiber, Cochain2<F>(f, n, m), Cochain3<F>(f, n, m), Actions<F>(f, n, m)};
  }

  std::size_t base_dim() const { return base.dim(); }
  std::size_t fiber_dim() const { return fiber.dim(); }
  const F& field() const { return base.field(); }

  bool operator==(const NonAbelianCocycle& o) const {
    return base == o.base && fiber == o.fiber && nu == o.nu && omega == o.omega && actions == o.actions;
  }
};

/// Throws UsageError on inconsistent dimensions or fields.
template <class F>
void check_cocycle_shape(const NonAbelianCocycle<F>& c);

/// Checks the non-abelian cocycle identities on basis tuples. Tags, in
/// evaluation order: B00 (skewness of nu and omega), B12 (cyclic omega), B01
/// (D skew), B13 (D through theta), B22 (omega on a product), B23 (D against
/// mu), B24 (D on a V-product), B25 (V-bracket with nu), B31 (theta on a
/// bracket), B32 (theta on a product), B2 (D against theta), B3 (D against D),
/// B4 (D derivation of the V-bracket), B1 (omega on a bracket).
/// kLiteral checks those identities exactly as printed, reading the undefined
/// mu(u) in B32 as mu(x). kCorrected replaces B22, B23, B24, B25, B32 by the
/// forms that hold in every extension algebra and adds X1..X9, the conditions
/// coupling mu, theta, omega with the V-operations that the printed list omits:
///   X1  b*(theta(x,y)a) = (mu(y)b)*(mu(x)a)
///   X2  [a,b,mu(w)c] = mu(w)[a,b,c] - (mu(w)c)*(a*b)
///   X3  [b,c,mu(y)a] = (b*c)*(mu(y)a)
///   X4  [a,omega(x,y,z),c] = 0          X5  [a,b,omega(x,y,z)] = 0
///   X6  [b,theta(x,y)a,c] = 0           X7  [b,c,theta(x,y)a] = 0
///   X8  [a,b,D(x,y)c] = D(x,y)[a,b,c]   X9  [a,b,theta(x,y)c] = theta(x,y)[a,b,c]
/// With this set, c is valid exactly when build_extension_algebra(c) satisfies
/// the Bol identities.
template <class F>
ValidationReport<F> validate_nab_cocycle(const NonAbelianCocycle<F>& c, Variant variant = Variant::kCorrected,
                                         std::size_t limit = std::numeric_limits<std::size_t>::max());

/// B + V with (x+a)*(y+b) = x*y + nu(x,y) + mu(x)b - mu(y)a + a*b and
/// [x+a,y+b,z+c] = [x,y,z] + omega(x,y,z) + D(x,y)c + theta(y,z)a - theta(x,z)b + [a,b,c];
/// B coordinates first. Does not require c to be valid.
template <class F>
BolAlgebra<F> build_extension_algebra(const NonAbelianCocycle<F>& c);

/// Equivalence identities E1..E5 for the given phi : B -> V (m x n):
///   E1  omega1 - omega2 = theta2(x,z)phi(y) - D2(x,y)phi(z) - theta2(y,z)phi(x) - [phi x,phi y,phi z] + phi[x,y,z]
///   E2  nu1 - nu2 = phi(x)*phi(y) + phi(x*y) - mu2(x)phi(y) + mu2(y)phi(x)
///   E3  mu1(x)a - mu2(x)a = a*phi(x)
///   E4  theta1(x,y)a - theta2(x,y)a = [a,phi x,phi y]
///   E5  D1(x,y)a - D2(x,y)a = [phi x,phi y,a]
template <class F>
ValidationReport<F> cocycles_equivalent_via(const NonAbelianCocycle<F>& c1, const NonAbelianCocycle<F>& c2,
                                            const Matrix<F>& phi,
                                            std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Looks for phi making c1 and c2 equivalent: exact linear solve when the
/// fiber algebra is abelian, exhaustive search over GF(p) within the bound,
/// undecided otherwise.
template <class F>
SearchResult<F> solve_equivalence(const NonAbelianCocycle<F>& c1, const NonAbelianCocycle<F>& c2,
                                  const SearchBounds& bounds = {});

}  // namespace bolext
