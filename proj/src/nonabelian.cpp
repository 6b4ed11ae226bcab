#include "bolext/nonabelian.hpp"

#include <string>

namespace bolext {

template <class F>
void check_cocycle_shape(const NonAbelianCocycle<F>& c) {
  const F& f = c.base.field();
  const std::size_t n = c.base.dim(), m = c.fiber.dim();
  if (!(c.fiber.field() == f) || !(c.actions.field() == f) || !(c.nu.field() == f) || !(c.omega.field() == f))
    throw UsageError("cocycle components are over different fields");
  if (c.nu.algebra_dim() != n || c.nu.module_dim() != m || c.omega.algebra_dim() != n ||
      c.omega.module_dim() != m || c.actions.algebra_dim() != n || c.actions.module_dim() != m)
    throw UsageError("cocycle components do not match base dimension " + std::to_string(n) +
                     " and fiber dimension " + std::to_string(m));
}

namespace {

template <class F>
struct CocycleView {
  explicit CocycleView(const NonAbelianCocycle<F>& c)
      : c(c), f(c.field()), n(c.base_dim()), m(c.fiber_dim()), V(c.fiber), A(c.actions) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) prod.push_back(c.base.basis_product(i, j));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) br.push_back(c.base.basis_bracket(i, j, k));
    for (std::size_t i = 0; i < n; ++i) eb.push_back(Vector<F>::unit(f, n, i));
    for (std::size_t a = 0; a < m; ++a) ev.push_back(Vector<F>::unit(f, m, a));
  }
  const Vector<F>& P(std::size_t i, std::size_t j) const { return prod[i * n + j]; }
  const Vector<F>& T(std::size_t i, std::size_t j, std::size_t k) const { return br[(i * n + j) * n + k]; }
  Vector<F> vp(const Vector<F>& a, const Vector<F>& b) const { return V.product(a, b); }
  Vector<F> vb(const Vector<F>& a, const Vector<F>& b, const Vector<F>& d) const { return V.bracket(a, b, d); }

  const NonAbelianCocycle<F>& c;
  const F& f;
  std::size_t n, m;
  const BolAlgebra<F>& V;
  const Actions<F>& A;
  std::vector<Vector<F>> prod, br, eb, ev;
};

template <class F, class Sink>
void visit_nab(const NonAbelianCocycle<F>& c, Variant variant, Sink& sink) {
  const CocycleView<F> w(c);
  const std::size_t n = w.n, m = w.m;
  const Cochain2<F>& nu = c.nu;
  const Cochain3<F>& om = c.omega;
  const Actions<F>& A = c.actions;
  const bool corrected = variant == Variant::kCorrected;
  using Idx = std::size_t;

  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      if (!sink("B00", {x, y}, nu.at(x, y) + nu.at(y, x))) return;
    }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z) {
        if (!sink("B00", {x, y, z}, om.at(x, y, z) + om.at(y, x, z))) return;
      }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z) {
        if (!sink("B12", {x, y, z}, om.at(x, y, z) + om.at(y, z, x) + om.at(z, x, y))) return;
      }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      if (!sink("B01", {x, y}, (A.dd(x, y) + A.dd(y, x)).flatten())) return;
    }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      if (!sink("B13", {x, y}, (A.dd(x, y) - A.theta(y, x) + A.theta(x, y)).flatten())) return;
    }

  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z)
        for (Idx v = 0; v < n; ++v) {
          const Vector<F>& pxy = w.P(x, y);
          const Vector<F>& pzw = w.P(z, v);
          Vector<F> lhs = A.dd(x, y) * nu.at(z, v) + om.eval(w.eb[x], w.eb[y], pzw);
          Vector<F> rhs = nu.eval(w.T(x, y, z), v) - A.mu(v) * om.at(x, y, z) + A.mu(z) * om.at(x, y, v) +
                          nu.eval(z, w.T(x, y, v)) + om.eval(w.eb[z], w.eb[v], pxy) + A.dd(z, v) * nu.at(x, y) -
                          nu.eval(pzw, pxy) + A.mu_at(pxy) * nu.at(z, v);
          if (corrected) {
            rhs -= A.mu_at(pzw) * nu.at(x, y);
            rhs -= w.vp(nu.at(z, v), nu.at(x, y));
          } else {
            rhs -= A.mu_at(pxy) * nu.at(x, y);
          }
          if (!sink("B22", {x, y, z, v}, lhs - rhs)) return;
        }

  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z)
        for (Idx a = 0; a < m; ++a) {
          const Vector<F>& ea = w.ev[a];
          const Vector<F>& pxy = w.P(x, y);
          Vector<F> mza = A.mu(z) * ea;
          Vector<F> lhs = A.dd(x, y) * mza + A.theta_at(z, pxy) * ea;
          Vector<F> rhs = A.mu_at(w.T(x, y, z)) * ea + w.vp(om.at(x, y, z), ea) + A.mu(z) * (A.dd(x, y) * ea) +
                          A.mu_at(pxy) * mza;
          if (corrected) rhs -= w.vp(mza, nu.at(x, y));
          if (!sink("B23", {x, y, z, a}, lhs - rhs)) return;
        }

  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx a = 0; a < m; ++a)
        for (Idx b = 0; b < m; ++b) {
          const Vector<F>& ea = w.ev[a];
          const Vector<F>& eb = w.ev[b];
          const Matrix<F>& d = A.dd(x, y);
          Vector<F> ab = w.vp(ea, eb);
          Vector<F> mxy_ab = A.mu_at(w.P(x, y)) * ab;
          Vector<F> res = d * ab - w.vp(d * ea, eb) - w.vp(ea, d * eb) - w.vb(ea, eb, nu.at(x, y));
          if (corrected) {
            res -= mxy_ab;
            res += w.vp(ab, nu.at(x, y));
          } else {
            res += mxy_ab;
          }
          if (!sink("B24", {x, y, a, b}, res)) return;
        }

  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx a = 0; a < m; ++a)
        for (Idx b = 0; b < m; ++b) {
          Vector<F> ab = w.vp(w.ev[a], w.ev[b]);
          Vector<F> bracket = w.vb(w.ev[a], w.ev[b], nu.at(x, y));
          Vector<F> dab = A.dd(x, y) * ab;
          Vector<F> mab = A.mu_at(w.P(x, y)) * ab;
          Vector<F> res = corrected ? bracket - dab + mab + w.vp(nu.at(x, y), ab) : bracket + dab + mab;
          if (!sink("B25", {x, y, a, b}, res)) return;
        }

  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z)
        for (Idx v = 0; v < n; ++v) {
          Matrix<F> res = A.theta_at(x, w.T(y, z, v)) - A.theta(z, v) * A.theta(x, y) +
                          A.theta(y, v) * A.theta(x, z) - A.dd(y, z) * A.theta(x, v);
          if (!sink("B31", {x, y, z, v}, res.flatten())) return;
        }

  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z)
        for (Idx a = 0; a < m; ++a) {
          const Vector<F>& ea = w.ev[a];
          const Vector<F>& pyz = w.P(y, z);
          Vector<F> mxa = A.mu(x) * ea;
          Vector<F> res = A.theta_at(x, pyz) * ea - A.mu(y) * (A.theta(x, z) * ea) +
                          A.mu(z) * (A.theta(x, y) * ea) + A.dd(y, z) * mxa - A.mu_at(pyz) * mxa;
          if (corrected) res -= w.vp(nu.at(y, z), mxa);
          if (!sink("B32", {x, y, z, a}, res)) return;
        }

  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z)
        for (Idx v = 0; v < n; ++v) {
          const Matrix<F>& d = A.dd(x, y);
          const Matrix<F>& t = A.theta(z, v);
          Matrix<F> res = d * t - t * d - A.theta_at(w.T(x, y, z), v) - A.theta_at(z, w.T(x, y, v));
          if (!sink("B2", {x, y, z, v}, res.flatten())) return;
        }

  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z)
        for (Idx v = 0; v < n; ++v) {
          const Matrix<F>& d = A.dd(x, y);
          const Matrix<F>& e = A.dd(z, v);
          Matrix<F> res = d * e - e * d - A.dd_at(w.T(x, y, z), v) - A.dd_at(z, w.T(x, y, v));
          if (!sink("B3", {x, y, z, v}, res.flatten())) return;
        }

  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx a = 0; a < m; ++a)
        for (Idx b = 0; b < m; ++b)
          for (Idx cc = 0; cc < m; ++cc) {
            const Matrix<F>& d = A.dd(x, y);
            const Vector<F>& ea = w.ev[a];
            const Vector<F>& eb = w.ev[b];
            const Vector<F>& ec = w.ev[cc];
            Vector<F> res = d * w.vb(ea, eb, ec) - w.vb(d * ea, eb, ec) - w.vb(ea, d * eb, ec) -
                            w.vb(ea, eb, d * ec);
            if (!sink("B4", {x, y, a, b, cc}, res)) return;
          }

  for (Idx x1 = 0; x1 < n; ++x1)
    for (Idx x2 = 0; x2 < n; ++x2)
      for (Idx y1 = 0; y1 < n; ++y1)
        for (Idx y2 = 0; y2 < n; ++y2)
          for (Idx y3 = 0; y3 < n; ++y3) {
            const auto& e = w.eb;
            Vector<F> lhs = A.dd(x1, x2) * om.at(y1, y2, y3) + om.eval(e[x1], e[x2], w.T(y1, y2, y3));
            Vector<F> rhs = om.eval(w.T(x1, x2, y1), e[y2], e[y3]) + A.theta(y2, y3) * om.at(x1, x2, y1) +
                            om.eval(e[y1], w.T(x1, x2, y2), e[y3]) - A.theta(y1, y3) * om.at(x1, x2, y2) +
                            om.eval(e[y1], e[y2], w.T(x1, x2, y3)) + A.dd(y1, y2) * om.at(x1, x2, y3);
            if (!sink("B1", {x1, x2, y1, y2, y3}, lhs - rhs)) return;
          }

  if (!corrected) return;

  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx a = 0; a < m; ++a)
        for (Idx b = 0; b < m; ++b) {
          const Vector<F>& ea = w.ev[a];
          const Vector<F>& eb = w.ev[b];
          Vector<F> res = w.vp(eb, A.theta(x, y) * ea) - w.vp(A.mu(y) * eb, A.mu(x) * ea);
          if (!sink("X1", {x, y, a, b}, res)) return;
        }
  for (Idx v = 0; v < n; ++v)
    for (Idx a = 0; a < m; ++a)
      for (Idx b = 0; b < m; ++b)
        for (Idx cc = 0; cc < m; ++cc) {
          const Vector<F>& ea = w.ev[a];
          const Vector<F>& eb = w.ev[b];
          Vector<F> mc = A.mu(v) * w.ev[cc];
          Vector<F> res = w.vb(ea, eb, mc) - A.mu(v) * w.vb(ea, eb, w.ev[cc]) + w.vp(mc, w.vp(ea, eb));
          if (!sink("X2", {v, a, b, cc}, res)) return;
        }
  for (Idx y = 0; y < n; ++y)
    for (Idx a = 0; a < m; ++a)
      for (Idx b = 0; b < m; ++b)
        for (Idx cc = 0; cc < m; ++cc) {
          const Vector<F>& eb = w.ev[b];
          const Vector<F>& ec = w.ev[cc];
          Vector<F> ma = A.mu(y) * w.ev[a];
          Vector<F> res = w.vb(eb, ec, ma) - w.vp(w.vp(eb, ec), ma);
          if (!sink("X3", {y, a, b, cc}, res)) return;
        }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z)
        for (Idx a = 0; a < m; ++a)
          for (Idx cc = 0; cc < m; ++cc) {
            if (!sink("X4", {x, y, z, a, cc}, w.vb(w.ev[a], om.at(x, y, z), w.ev[cc]))) return;
          }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z)
        for (Idx a = 0; a < m; ++a)
          for (Idx b = 0; b < m; ++b) {
            if (!sink("X5", {x, y, z, a, b}, w.vb(w.ev[a], w.ev[b], om.at(x, y, z)))) return;
          }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx a = 0; a < m; ++a)
        for (Idx b = 0; b < m; ++b)
          for (Idx cc = 0; cc < m; ++cc) {
            if (!sink("X6", {x, y, a, b, cc}, w.vb(w.ev[b], A.theta(x, y) * w.ev[a], w.ev[cc]))) return;
          }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx a = 0; a < m; ++a)
        for (Idx b = 0; b < m; ++b)
          for (Idx cc = 0; cc < m; ++cc) {
            if (!sink("X7", {x, y, a, b, cc}, w.vb(w.ev[b], w.ev[cc], A.theta(x, y) * w.ev[a]))) return;
          }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx a = 0; a < m; ++a)
        for (Idx b = 0; b < m; ++b)
          for (Idx cc = 0; cc < m; ++cc) {
            const Matrix<F>& d = A.dd(x, y);
            Vector<F> res = w.vb(w.ev[a], w.ev[b], d * w.ev[cc]) - d * w.vb(w.ev[a], w.ev[b], w.ev[cc]);
            if (!sink("X8", {x, y, a, b, cc}, res)) return;
          }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx a = 0; a < m; ++a)
        for (Idx b = 0; b < m; ++b)
          for (Idx cc = 0; cc < m; ++cc) {
            const Matrix<F>& t = A.theta(x, y);
            Vector<F> res = w.vb(w.ev[a], w.ev[b], t * w.ev[cc]) - t * w.vb(w.ev[a], w.ev[b], w.ev[cc]);
            if (!sink("X9", {x, y, a, b, cc}, res)) return;
          }
}

template <class F, class Sink>
void visit_equivalence(const NonAbelianCocycle<F>& c1, const NonAbelianCocycle<F>& c2, const Matrix<F>& phi,
                       Sink& sink) {
  const CocycleView<F> w(c2);
  const std::size_t n = w.n, m = w.m;
  const Actions<F>& A1 = c1.actions;
  const Actions<F>& A2 = c2.actions;
  std::vector<Vector<F>> px;
  for (std::size_t x = 0; x < n; ++x) px.push_back(phi.column(x));
  using Idx = std::size_t;

  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z) {
        Vector<F> res = c1.omega.at(x, y, z) - c2.omega.at(x, y, z) - A2.theta(x, z) * px[y] +
                        A2.dd(x, y) * px[z] + A2.theta(y, z) * px[x] + w.vb(px[x], px[y], px[z]) -
                        phi * w.T(x, y, z);
        if (!sink("E1", {x, y, z}, res)) return;
      }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      Vector<F> res = c1.nu.at(x, y) - c2.nu.at(x, y) - w.vp(px[x], px[y]) - phi * w.P(x, y) +
                      A2.mu(x) * px[y] - A2.mu(y) * px[x];
      if (!sink("E2", {x, y}, res)) return;
    }
  for (Idx x = 0; x < n; ++x)
    for (Idx a = 0; a < m; ++a) {
      const Vector<F>& ea = w.ev[a];
      Vector<F> res = A1.mu(x) * ea - A2.mu(x) * ea - w.vp(ea, px[x]);
      if (!sink("E3", {x, a}, res)) return;
    }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx a = 0; a < m; ++a) {
        const Vector<F>& ea = w.ev[a];
        Vector<F> res = A1.theta(x, y) * ea - A2.theta(x, y) * ea - w.vb(ea, px[x], px[y]);
        if (!sink("E4", {x, y, a}, res)) return;
      }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx a = 0; a < m; ++a) {
        const Vector<F>& ea = w.ev[a];
        Vector<F> res = A1.dd(x, y) * ea - A2.dd(x, y) * ea - w.vb(px[x], px[y], ea);
        if (!sink("E5", {x, y, a}, res)) return;
      }
}

template <class F>
void check_same_shape(const NonAbelianCocycle<F>& c1, const NonAbelianCocycle<F>& c2) {
  check_cocycle_shape(c1);
  check_cocycle_shape(c2);
  if (!(c1.base == c2.base)) throw UsageError("cocycles have different base algebras");
  if (!(c1.fiber == c2.fiber)) throw UsageError("cocycles have different fiber algebras");
}

}  // namespace

template <class F>
ValidationReport<F> validate_nab_cocycle(const NonAbelianCocycle<F>& c, Variant variant, std::size_t limit) {
  check_cocycle_shape(c);
  ValidationReport<F> report(c.field(), limit);
  visit_nab(c, variant, report);
  if (variant == Variant::kLiteral)
    report.notes.push_back("identities checked as printed; mu(u) in B32 read as mu(x)");
  return report;
}

template <class F>
BolAlgebra<F> build_extension_algebra(const NonAbelianCocycle<F>& c) {
  check_cocycle_shape(c);
  const F& f = c.field();
  const std::size_t n = c.base_dim(), m = c.fiber_dim();
  const Actions<F>& A = c.actions;
  BolAlgebra<F> e(f, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) e.bil(i, j, k) = c.base.bil(i, j, k);
      for (std::size_t s = 0; s < m; ++s) e.bil(i, j, n + s) = c.nu.at(i, j)[s];
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) e.tri(i, j, k, l) = c.base.tri(i, j, k, l);
        for (std::size_t s = 0; s < m; ++s) e.tri(i, j, k, n + s) = c.omega.at(i, j, k)[s];
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t s = 0; s < m; ++s) {
        e.bil(i, n + q, n + s) = A.mu(i)(s, q);
        e.bil(n + q, i, n + s) = f.neg(A.mu(i)(s, q));
      }
  for (std::size_t q = 0; q < m; ++q)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s) e.bil(n + q, n + r, n + s) = c.fiber.bil(q, r, s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t q = 0; q < m; ++q)
        for (std::size_t s = 0; s < m; ++s) {
          e.tri(i, j, n + q, n + s) = A.dd(i, j)(s, q);
          e.tri(n + q, i, j, n + s) = A.theta(i, j)(s, q);
          e.tri(i, n + q, j, n + s) = f.neg(A.theta(i, j)(s, q));
        }
  for (std::size_t q = 0; q < m; ++q)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t t = 0; t < m; ++t)
        for (std::size_t s = 0; s < m; ++s) e.tri(n + q, n + r, n + t, n + s) = c.fiber.tri(q, r, t, s);
  return e;
}

template <class F>
ValidationReport<F> cocycles_equivalent_via(const NonAbelianCocycle<F>& c1, const NonAbelianCocycle<F>& c2,
                                            const Matrix<F>& phi, std::size_t limit) {
  check_same_shape(c1, c2);
  if (phi.rows() != c1.fiber_dim() || phi.cols() != c1.base_dim())
    throw UsageError("equivalence map must be " + std::to_string(c1.fiber_dim()) + "x" +
                     std::to_string(c1.base_dim()));
  ValidationReport<F> report(c1.field(), limit);
  visit_equivalence(c1, c2, phi, report);
  return report;
}

template <class F>
SearchResult<F> solve_equivalence(const NonAbelianCocycle<F>& c1, const NonAbelianCocycle<F>& c2,
                                  const SearchBounds& bounds) {
  check_same_shape(c1, c2);
  return search_linear_map(c1.field(), c1.fiber_dim(), c1.base_dim(), c1.fiber.is_abelian(), bounds,
                           [&](const Matrix<F>& phi, auto& sink) { visit_equivalence(c1, c2, phi, sink); });
}

#define BOLEXT_INSTANTIATE(F)                                                                                  \
  template void check_cocycle_shape(const NonAbelianCocycle<F>&);                                              \
  template ValidationReport<F> validate_nab_cocycle(const NonAbelianCocycle<F>&, Variant, std::size_t);        \
  template BolAlgebra<F> build_extension_algebra(const NonAbelianCocycle<F>&);                                 \
  template ValidationReport<F> cocycles_equivalent_via(const NonAbelianCocycle<F>&, const NonAbelianCocycle<F>&, \
                                                       const Matrix<F>&, std::size_t);                         \
  template SearchResult<F> solve_equivalence(const NonAbelianCocycle<F>&, const NonAbelianCocycle<F>&,         \
                                             const SearchBounds&);

BOLEXT_INSTANTIATE(Rationals)
BOLEXT_INSTANTIATE(PrimeField)

}  // namespace bolext
