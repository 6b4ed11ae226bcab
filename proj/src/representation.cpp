#include <string>

#include "bolext/representation.hpp"

namespace bolext {

template <class F>
void check_actions_shape(const BolAlgebra<F>& a, const Actions<F>& r) {
  if (!(a.field() == r.field())) throw UsageError("algebra and action data are over different fields");
  if (r.algebra_dim() != a.dim())
    throw UsageError("action data is for an algebra of dimension " + std::to_string(r.algebra_dim()) +
                     ", algebra has dimension " + std::to_string(a.dim()));
}

namespace {

template <class F, class Sink>
void visit_representation(const BolAlgebra<F>& a, const Representation<F>& r, Sink& sink) {
  const std::size_t n = a.dim();
  std::vector<Vector<F>> prod;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod.push_back(a.basis_product(i, j));
  std::vector<Vector<F>> br;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) br.push_back(a.basis_bracket(i, j, k));
  auto P = [&](std::size_t i, std::size_t j) -> const Vector<F>& { return prod[i * n + j]; };
  auto T = [&](std::size_t i, std::size_t j, std::size_t k) -> const Vector<F>& { return br[(i * n + j) * n + k]; };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<F> res = r.dd(i, j) + r.theta(i, j) - r.theta(j, i);
      if (!sink("2.9", {i, j}, res.flatten())) return;
    }

  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t y1 = 0; y1 < n; ++y1) {
        const Matrix<F>& d = r.dd(x1, x2);
        const Matrix<F>& my = r.mu(y1);
        Matrix<F> mx = r.mu_at(P(x1, x2));
        Matrix<F> res = d * my - my * d - r.mu_at(T(x1, x2, y1)) + r.theta_at(y1, P(x1, x2)) - mx * my;
        if (!sink("2.10", {x1, x2, y1}, res.flatten())) return;
      }

  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t y1 = 0; y1 < n; ++y1)
      for (std::size_t y2 = 0; y2 < n; ++y2) {
        Matrix<F> res = r.theta_at(x1, P(y1, y2)) - r.mu(y1) * r.theta(x1, y2) + r.mu(y2) * r.theta(x1, y1) +
                        (r.dd(y1, y2) - r.mu_at(P(y1, y2))) * r.mu(x1);
        if (!sink("2.11", {x1, y1, y2}, res.flatten())) return;
      }

  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t y1 = 0; y1 < n; ++y1)
        for (std::size_t y2 = 0; y2 < n; ++y2) {
          const Matrix<F>& d = r.dd(x1, x2);
          const Matrix<F>& dy = r.dd(y1, y2);
          Matrix<F> res = d * dy - dy * d - r.dd_at(T(x1, x2, y1), y2) - r.dd_at(y1, T(x1, x2, y2));
          if (!sink("2.12", {x1, x2, y1, y2}, res.flatten())) return;
        }

  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t y1 = 0; y1 < n; ++y1)
        for (std::size_t y2 = 0; y2 < n; ++y2) {
          const Matrix<F>& d = r.dd(x1, x2);
          const Matrix<F>& ty = r.theta(y1, y2);
          Matrix<F> res = d * ty - ty * d - r.theta_at(T(x1, x2, y1), y2) - r.theta_at(y1, T(x1, x2, y2));
          if (!sink("2.13", {x1, x2, y1, y2}, res.flatten())) return;
        }

  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t y1 = 0; y1 < n; ++y1)
      for (std::size_t y2 = 0; y2 < n; ++y2)
        for (std::size_t y3 = 0; y3 < n; ++y3) {
          Matrix<F> res = r.theta_at(x1, T(y1, y2, y3)) - r.theta(y2, y3) * r.theta(x1, y1) +
                          r.theta(y1, y3) * r.theta(x1, y2) - r.dd(y1, y2) * r.theta(x1, y3);
          if (!sink("2.7", {x1, y1, y2, y3}, res.flatten())) return;
        }
}

}  // namespace

template <class F>
ValidationReport<F> validate_representation(const BolAlgebra<F>& a, const Representation<F>& r, std::size_t limit) {
  check_actions_shape(a, r);
  ValidationReport<F> report(a.field(), limit);
  visit_representation(a, r, report);
  return report;
}

template <class F>
BolAlgebra<F> semidirect_product(const BolAlgebra<F>& a, const Representation<F>& r) {
  check_actions_shape(a, r);
  const F& f = a.field();
  const std::size_t n = a.dim(), m = r.module_dim(), N = n + m;
  BolAlgebra<F> e(f, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) e.bil(i, j, k) = a.bil(i, j, k);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) e.tri(i, j, k, l) = a.tri(i, j, k, l);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t s = 0; s < m; ++s) {
        e.bil(i, n + q, n + s) = r.mu(i)(s, q);
        e.bil(n + q, i, n + s) = f.neg(r.mu(i)(s, q));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t q = 0; q < m; ++q)
        for (std::size_t s = 0; s < m; ++s) {
          e.tri(n + q, i, j, n + s) = r.theta(i, j)(s, q);
          e.tri(i, n + q, j, n + s) = f.neg(r.theta(i, j)(s, q));
          e.tri(i, j, n + q, n + s) = r.dd(i, j)(s, q);
        }
  return e;
}

template <class F>
bool is_pseudoderivation(const Matrix<F>& fmap, const Vector<F>& chi, const BolAlgebra<F>& a,
                         const Representation<F>& r) {
  check_actions_shape(a, r);
  const std::size_t n = a.dim(), m = r.module_dim();
  if (fmap.rows() != m || fmap.cols() != n || chi.size() != m)
    throw UsageError("is_pseudoderivation: map or companion has the wrong shape");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vector<F> xy = a.basis_product(x, y);
      Vector<F> rhs = r.mu(x) * fmap.column(y) - r.mu(y) * fmap.column(x) + (r.dd(x, y) - r.mu_at(xy)) * chi;
      if (!(fmap * xy == rhs)) return false;
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vector<F> rhs = r.theta(y, z) * fmap.column(x) - r.theta(x, z) * fmap.column(y) + r.dd(x, y) * fmap.column(z);
        if (!(fmap * a.basis_bracket(x, y, z) == rhs)) return false;
      }
  return true;
}

#define BOLEXT_INSTANTIATE(F)                                                                               \
  template void check_actions_shape(const BolAlgebra<F>&, const Actions<F>&);                               \
  template ValidationReport<F> validate_representation(const BolAlgebra<F>&, const Representation<F>&,      \
                                                       std::size_t);                                        \
  template BolAlgebra<F> semidirect_product(const BolAlgebra<F>&, const Representation<F>&);                \
  template bool is_pseudoderivation(const Matrix<F>&, const Vector<F>&, const BolAlgebra<F>&,               \
                                    const Representation<F>&);

BOLEXT_INSTANTIATE(Rationals)
BOLEXT_INSTANTIATE(PrimeField)

}  // namespace bolext
