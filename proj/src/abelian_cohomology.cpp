#include "bolext/abelian_cohomology.hpp"

#include <string>

namespace bolext {

std::string_view variant_name(Variant v) { return v == Variant::kCorrected ? "corrected" : "literal"; }

Variant parse_variant(std::string_view s) {
  if (s == "corrected") return Variant::kCorrected;
  if (s == "literal") return Variant::kLiteral;
  throw UsageError("unknown variant \"" + std::string(s) + "\" (expected corrected or literal)");
}

namespace {

template <class F>
void check_cochain_shape(const BolAlgebra<F>& a, const Representation<F>& r, const CochainPair<F>& c) {
  check_actions_shape(a, r);
  const std::size_t n = a.dim(), m = r.module_dim();
  if (c.nu.algebra_dim() != n || c.nu.module_dim() != m || c.omega.algebra_dim() != n || c.omega.module_dim() != m)
    throw UsageError("cochain dimensions do not match the algebra and module");
}

template <class F, class Sink>
void visit_cocycle(const BolAlgebra<F>& a, const Representation<F>& r, const CochainPair<F>& c, Variant variant,
                   Sink& sink) {
  const std::size_t n = a.dim();
  const Cochain2<F>& nu = c.nu;
  const Cochain3<F>& om = c.omega;
  auto P = [&](std::size_t i, std::size_t j) { return a.basis_product(i, j); };
  auto T = [&](std::size_t i, std::size_t j, std::size_t k) { return a.basis_bracket(i, j, k); };
  auto unit = [&](std::size_t i) { return Vector<F>::unit(a.field(), n, i); };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!sink("cocycle-cyclic", {i, j, k}, om.at(i, j, k) + om.at(j, k, i) + om.at(k, i, j))) return;
      }

  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t y1 = 0; y1 < n; ++y1)
        for (std::size_t y2 = 0; y2 < n; ++y2) {
          const Vector<F> px = P(x1, x2), py = P(y1, y2);
          const Vector<F> ex1 = unit(x1), ex2 = unit(x2);
          Vector<F> lhs = om.eval(ex1, ex2, py) + r.dd(x1, x2) * nu.at(y1, y2);
          Vector<F> rhs = om.eval(unit(y1), unit(y2), px) + r.dd(y1, y2) * nu.at(x1, x2) +
                          nu.eval(T(x1, x2, y1), y2) + nu.eval(y1, T(x1, x2, y2)) +
                          r.mu(y1) * om.at(x1, x2, y2) - r.mu(y2) * om.at(x1, x2, y1) -
                          r.mu_at(py) * nu.at(x1, x2) - nu.eval(py, px);
          if (variant == Variant::kCorrected) rhs += r.mu_at(px) * nu.at(y1, y2);
          if (!sink("cocycle-product", {x1, x2, y1, y2}, lhs - rhs)) return;
        }

  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t y1 = 0; y1 < n; ++y1)
        for (std::size_t y2 = 0; y2 < n; ++y2)
          for (std::size_t y3 = 0; y3 < n; ++y3) {
            const Vector<F> ex1 = unit(x1), ex2 = unit(x2), ey1 = unit(y1), ey2 = unit(y2), ey3 = unit(y3);
            Vector<F> lhs = om.eval(ex1, ex2, T(y1, y2, y3)) + r.dd(x1, x2) * om.at(y1, y2, y3);
            Vector<F> rhs = om.eval(T(x1, x2, y1), ey2, ey3) + om.eval(ey1, T(x1, x2, y2), ey3) +
                            om.eval(ey1, ey2, T(x1, x2, y3)) + r.dd(y1, y2) * om.at(x1, x2, y3) +
                            r.theta(y2, y3) * om.at(x1, x2, y1) - r.theta(y1, y3) * om.at(x1, x2, y2);
            if (!sink("cocycle-bracket", {x1, x2, y1, y2, y3}, lhs - rhs)) return;
          }
}

}  // namespace

template <class F>
ValidationReport<F> is_cocycle23(const BolAlgebra<F>& a, const Representation<F>& r, const CochainPair<F>& c,
                                 Variant variant, std::size_t limit) {
  check_cochain_shape(a, r, c);
  ValidationReport<F> report(a.field(), limit);
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!report.record("cochain-skew", {i, j}, c.nu.at(i, j) + c.nu.at(j, i))) return report;
      for (std::size_t k = 0; k < n; ++k) {
        if (!report.record("cochain-skew", {i, j, k}, c.omega.at(i, j, k) + c.omega.at(j, i, k))) return report;
      }
    }
  visit_cocycle(a, r, c, variant, report);
  if (variant == Variant::kCorrected)
    report.notes.push_back("product identity evaluated with the term mu(x1*x2) nu(y1,y2)");
  else
    report.notes.push_back("product identity evaluated without the ill-typed nu(x1*x2) nu(y1,y2) term");
  return report;
}

template <class F>
CochainPair<F> coboundary(const Matrix<F>& fmap, const Vector<F>& chi, const BolAlgebra<F>& a,
                          const Representation<F>& r) {
  check_actions_shape(a, r);
  const std::size_t n = a.dim(), m = r.module_dim();
  if (fmap.rows() != m || fmap.cols() != n || chi.size() != m)
    throw UsageError("coboundary: map must be " + std::to_string(m) + "x" + std::to_string(n) +
                     " and the companion must have length " + std::to_string(m));
  CochainPair<F> out{Cochain2<F>(a.field(), n, m), Cochain3<F>(a.field(), n, m)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vector<F> xy = a.basis_product(x, y);
      out.nu.at(x, y) = r.mu(x) * fmap.column(y) - r.mu(y) * fmap.column(x) + (r.dd(x, y) - r.mu_at(xy)) * chi -
                        fmap * xy;
      for (std::size_t z = 0; z < n; ++z) {
        out.omega.at(x, y, z) = r.theta(y, z) * fmap.column(x) - r.theta(x, z) * fmap.column(y) +
                                r.dd(x, y) * fmap.column(z) - fmap * a.basis_bracket(x, y, z);
      }
    }
  return out;
}

template <class F>
Matrix<F> cocycle_constraint_matrix(const BolAlgebra<F>& a, const Representation<F>& r, Variant variant) {
  check_actions_shape(a, r);
  const CochainCoordinates<F> coords(a.field(), a.dim(), r.module_dim());
  auto sys = probe_affine(a.field(), coords.size(), [&](const Vector<F>& x, ResidualCollector<F>& sink) {
    visit_cocycle(a, r, coords.from_coords(x), variant, sink);
  });
  return sys.a;
}

template <class F>
Matrix<F> coboundary_matrix(const BolAlgebra<F>& a, const Representation<F>& r) {
  check_actions_shape(a, r);
  const F& f = a.field();
  const std::size_t n = a.dim(), m = r.module_dim();
  const CochainCoordinates<F> coords(f, n, m);
  Matrix<F> out(f, coords.size(), n * m + m);
  for (std::size_t c = 0; c < n * m + m; ++c) {
    Matrix<F> fmap(f, m, n);
    Vector<F> chi(f, m);
    if (c < n * m)
      fmap(c % m, c / m) = f.one();
    else
      chi[c - n * m] = f.one();
    out.set_column(c, coords.to_coords(coboundary(fmap, chi, a, r)));
  }
  return out;
}

template <class F>
CohomologyResult<F> cohomology23(const BolAlgebra<F>& a, const Representation<F>& r, Variant variant) {
  const CochainCoordinates<F> coords(a.field(), a.dim(), r.module_dim());
  Subspace<F> z = kernel_basis(cocycle_constraint_matrix(a, r, variant));
  Subspace<F> b = image_basis(coboundary_matrix(a, r));
  if (!z.contains(b))
    throw ContainmentError(std::string("coboundaries are not contained in the cocycles under the ") +
                           std::string(variant_name(variant)) + " reading");
  CohomologyResult<F> out{z.dim(), b.dim(), quotient_dim(z, b), z, b, {}};
  Matrix<F> span = b.basis();
  std::size_t current = b.dim();
  for (std::size_t k = 0; k < z.dim() && out.representatives.size() < out.h_dim; ++k) {
    Matrix<F> trial = vstack(span, z.basis().block(k, 0, 1, z.ambient_dim()));
    if (rank(trial) > current) {
      span = std::move(trial);
      ++current;
      out.representatives.push_back(coords.from_coords(z.basis_vector(k)));
    }
  }
  return out;
}

template <class F>
std::optional<CoboundaryPreimage<F>> cocycles_cohomologous(const BolAlgebra<F>& a, const Representation<F>& r,
                                                           const CochainPair<F>& c1, const CochainPair<F>& c2,
                                                           Variant variant) {
  if (!is_cocycle23(a, r, c1, variant, 1).valid()) throw UsageError("first pair is not a (2,3)-cocycle");
  if (!is_cocycle23(a, r, c2, variant, 1).valid()) throw UsageError("second pair is not a (2,3)-cocycle");
  const F& f = a.field();
  const std::size_t n = a.dim(), m = r.module_dim();
  const CochainCoordinates<F> coords(f, n, m);
  CochainPair<F> diff{c1.nu - c2.nu, c1.omega - c2.omega};
  auto x = canonical_solution(coboundary_matrix(a, r), coords.to_coords(diff));
  if (!x) return std::nullopt;
  CoboundaryPreimage<F> out{Matrix<F>(f, m, n), Vector<F>(f, m)};
  for (std::size_t c = 0; c < n * m; ++c) out.f(c % m, c / m) = (*x)[c];
  for (std::size_t k = 0; k < m; ++k) out.chi[k] = (*x)[n * m + k];
  return out;
}

#define BOLEXT_INSTANTIATE(F)                                                                                    \
  template ValidationReport<F> is_cocycle23(const BolAlgebra<F>&, const Representation<F>&, const CochainPair<F>&, \
                                            Variant, std::size_t);                                               \
  template CochainPair<F> coboundary(const Matrix<F>&, const Vector<F>&, const BolAlgebra<F>&,                    \
                                     const Representation<F>&);                                                  \
  template Matrix<F> cocycle_constraint_matrix(const BolAlgebra<F>&, const Representation<F>&, Variant);         \
  template Matrix<F> coboundary_matrix(const BolAlgebra<F>&, const Representation<F>&);                          \
  template CohomologyResult<F> cohomology23(const BolAlgebra<F>&, const Representation<F>&, Variant);            \
  template std::optional<CoboundaryPreimage<F>> cocycles_cohomologous(                                           \
      const BolAlgebra<F>&, const Representation<F>&, const CochainPair<F>&, const CochainPair<F>&, Variant);

BOLEXT_INSTANTIATE(Rationals)
BOLEXT_INSTANTIATE(PrimeField)

}  // namespace bolext
