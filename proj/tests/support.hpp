#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "bolext/fixtures.hpp"
#include "bolext/io.hpp"

namespace bolext::test {

const std::filesystem::path& corpus_dir();
const std::filesystem::path& cli_path();

using Rng = std::mt19937_64;

inline PrimeField gf5() { return PrimeField(5); }

template <class F>
typename F::Element random_scalar(const F& f, Rng& rng) {
  if constexpr (std::is_same_v<F, Rationals>) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    return f.parse(std::to_string(num(rng)) + "/" + std::to_string(den(rng)));
  } else {
    std::uniform_int_distribution<std::uint32_t> d(0, f.modulus() - 1);
    return d(rng);
  }
}

template <class F>
Vector<F> random_vector(const F& f, std::size_t n, Rng& rng) {
  Vector<F> v(f, n);
  for (std::size_t k = 0; k < n; ++k) v[k] = random_scalar(f, rng);
  return v;
}

template <class F>
Matrix<F> random_matrix(const F& f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix<F> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

template <class F>
Matrix<F> random_invertible(const F& f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix<F> m = random_matrix(f, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

/// Skew product and bracket with random structure constants; not necessarily Bol.
template <class F>
BolAlgebra<F> random_skew_algebra(const F& f, std::size_t n, Rng& rng, bool tri_zero = false) {
  BolAlgebra<F> a(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        a.bil(i, j, k) = random_scalar(f, rng);
        a.bil(j, i, k) = f.neg(a.bil(i, j, k));
        for (std::size_t l = 0; l < n && !tri_zero; ++l) {
          a.tri(i, j, k, l) = random_scalar(f, rng);
          a.tri(j, i, k, l) = f.neg(a.tri(i, j, k, l));
        }
      }
  return a;
}

template <class F>
Actions<F> random_actions(const F& f, std::size_t n, std::size_t m, Rng& rng) {
  Actions<F> r(f, n, m);
  for (std::size_t x = 0; x < n; ++x) {
    r.mu(x) = random_matrix(f, m, m, rng);
    for (std::size_t y = 0; y < n; ++y) {
      r.theta(x, y) = random_matrix(f, m, m, rng);
      r.dd(x, y) = random_matrix(f, m, m, rng);
    }
  }
  return r;
}

template <class F>
CochainPair<F> random_skew_cochains(const F& f, std::size_t n, std::size_t m, Rng& rng) {
  CochainPair<F> c{Cochain2<F>(f, n, m), Cochain3<F>(f, n, m)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      c.nu.set_skew(x, y, random_vector(f, m, rng));
      for (std::size_t z = 0; z < n; ++z) c.omega.set_skew(x, y, z, random_vector(f, m, rng));
    }
  return c;
}

/// Dense structure constants for an algebra of dimension N, evaluated
/// directly from the defining identities (independent of the library's validator).
template <class F>
struct Dense {
  const F* f;
  std::size_t n;
  std::vector<typename F::Element> p;  // p[(i*n+j)*n+k]
  std::vector<typename F::Element> t;  // t[((i*n+j)*n+k)*n+l]
};

template <class F>
Dense<F> dense_of(const BolAlgebra<F>& a) {
  return {&a.field(), a.dim(), a.bilinear_data(), a.trilinear_data()};
}

/// The residuals of the skewness, cyclic, bracket-on-product and
/// bracket-on-bracket identities at every basis tuple, in a fixed order.
template <class F>
std::vector<typename F::Element> bol_residuals(const Dense<F>& d) {
  using E = typename F::Element;
  const F& f = *d.f;
  const std::size_t n = d.n;
  auto P = [&](std::size_t i, std::size_t j, std::size_t k) -> const E& { return d.p[(i * n + j) * n + k]; };
  auto T = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> const E& {
    return d.t[((i * n + j) * n + k) * n + l];
  };
  // Products and brackets of arbitrary coordinate vectors.
  auto prod = [&](const std::vector<E>& x, const std::vector<E>& y) {
    std::vector<E> out(n, f.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        E c = f.mul(x[i], y[j]);
        if (f.is_zero(c)) continue;
        for (std::size_t k = 0; k < n; ++k) out[k] = f.add(out[k], f.mul(c, P(i, j, k)));
      }
    return out;
  };
  auto br = [&](const std::vector<E>& x, const std::vector<E>& y, const std::vector<E>& z) {
    std::vector<E> out(n, f.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        E c = f.mul(x[i], y[j]);
        if (f.is_zero(c)) continue;
        for (std::size_t k = 0; k < n; ++k) {
          E c3 = f.mul(c, z[k]);
          if (f.is_zero(c3)) continue;
          for (std::size_t l = 0; l < n; ++l) out[l] = f.add(out[l], f.mul(c3, T(i, j, k, l)));
        }
      }
    return out;
  };
  std::vector<std::vector<E>> e(n, std::vector<E>(n, f.zero()));
  for (std::size_t k = 0; k < n; ++k) e[k][k] = f.one();
  auto sub = [&](std::vector<E> a, const std::vector<E>& b) {
    for (std::size_t k = 0; k < n; ++k) a[k] = f.sub(a[k], b[k]);
    return a;
  };
  std::vector<E> out;
  auto emit = [&](const std::vector<E>& r) { out.insert(out.end(), r.begin(), r.end()); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.push_back(f.add(P(i, j, k), P(j, i, k)));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out.push_back(f.add(T(i, j, k, l), T(j, i, k, l)));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto r = br(e[i], e[j], e[k]);
        auto r2 = br(e[j], e[k], e[i]);
        auto r3 = br(e[k], e[i], e[j]);
        for (std::size_t l = 0; l < n; ++l) r[l] = f.add(f.add(r[l], r2[l]), r3[l]);
        emit(r);
      }
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t y1 = 0; y1 < n; ++y1)
        for (std::size_t y2 = 0; y2 < n; ++y2) {
          auto yy = prod(e[y1], e[y2]), xx = prod(e[x1], e[x2]);
          auto lhs = br(e[x1], e[x2], yy);
          auto rhs = prod(br(e[x1], e[x2], e[y1]), e[y2]);
          auto r2 = prod(e[y1], br(e[x1], e[x2], e[y2]));
          auto r3 = br(e[y1], e[y2], xx);
          auto r4 = prod(yy, xx);
          for (std::size_t l = 0; l < n; ++l) rhs[l] = f.sub(f.add(f.add(rhs[l], r2[l]), r3[l]), r4[l]);
          emit(sub(lhs, rhs));
        }
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t y1 = 0; y1 < n; ++y1)
        for (std::size_t y2 = 0; y2 < n; ++y2)
          for (std::size_t y3 = 0; y3 < n; ++y3) {
            auto lhs = br(e[x1], e[x2], br(e[y1], e[y2], e[y3]));
            auto r1 = br(br(e[x1], e[x2], e[y1]), e[y2], e[y3]);
            auto r2 = br(e[y1], br(e[x1], e[x2], e[y2]), e[y3]);
            auto r3 = br(e[y1], e[y2], br(e[x1], e[x2], e[y3]));
            for (std::size_t l = 0; l < n; ++l) r1[l] = f.add(f.add(r1[l], r2[l]), r3[l]);
            emit(sub(lhs, r1));
          }
  return out;
}

template <class F>
bool dense_is_bol(const Dense<F>& d) {
  for (const auto& x : bol_residuals(d))
    if (!d.f->is_zero(x)) return false;
  return true;
}

/// B + V with (x+u)*(y+v) = x*y + nu(x,y) + mu(x)v - mu(y)u and
/// [x+u,y+v,z+w] = [x,y,z] + omega(x,y,z) + theta(y,z)u - theta(x,z)v + D(x,y)w,
/// built entry by entry; nu and omega are given on all basis tuples. A fiber
/// algebra adds a*b and [a,b,c]; mixed brackets with two V arguments stay zero.
template <class F>
Dense<F> twisted(const BolAlgebra<F>& a, const Actions<F>& r, const std::vector<typename F::Element>& nu,
                 const std::vector<typename F::Element>& omega, const BolAlgebra<F>* fiber = nullptr) {
  const F& f = a.field();
  const std::size_t n = a.dim(), m = r.module_dim(), N = n + m;
  Dense<F> d{&f, N, std::vector<typename F::Element>(N * N * N, f.zero()),
             std::vector<typename F::Element>(N * N * N * N, f.zero())};
  auto P = [&](std::size_t i, std::size_t j, std::size_t k) -> auto& { return d.p[(i * N + j) * N + k]; };
  auto T = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> auto& {
    return d.t[((i * N + j) * N + k) * N + l];
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t k = 0; k < n; ++k) P(x, y, k) = a.bil(x, y, k);
      for (std::size_t v = 0; v < m; ++v) P(x, y, n + v) = nu[(x * n + y) * m + v];
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t k = 0; k < n; ++k) T(x, y, z, k) = a.tri(x, y, z, k);
        for (std::size_t v = 0; v < m; ++v) T(x, y, z, n + v) = omega[((x * n + y) * n + z) * m + v];
      }
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t w = 0; w < m; ++w) {
        // x * u = mu(x)u, u * x = -mu(x)u
        P(x, n + u, n + w) = r.mu(x)(w, u);
        P(n + u, x, n + w) = f.neg(r.mu(x)(w, u));
        for (std::size_t y = 0; y < n; ++y) {
          // [u, x, y] = theta(x, y)u, [x, u, y] = -theta(x, y)u, [x, y, u] = D(x, y)u
          T(n + u, x, y, n + w) = r.theta(x, y)(w, u);
          T(x, n + u, y, n + w) = f.neg(r.theta(x, y)(w, u));
          T(x, y, n + u, n + w) = r.dd(x, y)(w, u);
        }
      }
  if (fiber)
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = 0; v < m; ++v)
        for (std::size_t w = 0; w < m; ++w) {
          P(n + u, n + v, n + w) = fiber->bil(u, v, w);
          for (std::size_t l = 0; l < m; ++l) T(n + u, n + v, n + w, n + l) = fiber->tri(u, v, w, l);
        }
  return d;
}

/// nu and omega on all basis tuples, laid out as twisted() expects.
template <class F>
std::pair<std::vector<typename F::Element>, std::vector<typename F::Element>> full_coords(const CochainPair<F>& c) {
  const std::size_t n = c.nu.algebra_dim(), m = c.nu.module_dim();
  std::vector<typename F::Element> nu, omega;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t v = 0; v < m; ++v) nu.push_back(c.nu.at(x, y)[v]);
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t v = 0; v < m; ++v) omega.push_back(c.omega.at(x, y, z)[v]);
  return {std::move(nu), std::move(omega)};
}

/// Valid modules over enumerated 2-dimensional algebras over GF(5).
inline std::vector<std::pair<BolAlgebra<PrimeField>, Actions<PrimeField>>> random_valid_modules(std::size_t count,
                                                                                               Rng& rng) {
  auto algebras = enumerate_bol_algebras(FieldDescriptor::prime(5), 2, false);
  std::vector<std::pair<BolAlgebra<PrimeField>, Actions<PrimeField>>> out;
  while (out.size() < count) {
    const auto& a = algebras[rng() % algebras.size()];
    const std::size_t m = 1 + rng() % 2;
    auto r = random_actions(gf5(), 2, m, rng);
    for (std::size_t x = 0; x < 2; ++x) {
      for (std::size_t y = 0; y < 2; ++y) {
        if (rng() % 3) r.theta(x, y) = Matrix<PrimeField>(gf5(), m, m);
        if (rng() % 3) r.dd(x, y) = Matrix<PrimeField>(gf5(), m, m);
      }
      if (rng() % 2) r.mu(x) = Matrix<PrimeField>(gf5(), m, m);
    }
    if (validate_representation(a, r).valid()) out.emplace_back(a, r);
  }
  return out;
}

}  // namespace bolext::test
