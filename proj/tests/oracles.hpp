#pragma once

#include <set>
#include <string>
#include <vector>

#include "support.hpp"

namespace bolext::test {

struct Mutation {
  const char* what;
  std::string tag;
  void (*apply)(BolAlgebra<Rationals>&);
};

template <class F>
void pair_bil(BolAlgebra<F>& a, std::size_t i, std::size_t j, std::size_t k) {
  a.bil(i, j, k) += 1;
  a.bil(j, i, k) -= 1;
}

template <class F>
void pair_tri(BolAlgebra<F>& a, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  a.tri(i, j, k, l) += 1;
  a.tri(j, i, k, l) -= 1;
}

inline std::vector<Mutation> mutations_for(const std::string& name) {
  using A = BolAlgebra<Rationals>;
  if (name == "Z1")
    return {{"product entry", "2.1", [](A& a) { a.bil(0, 0, 0) = 1; }},
            {"bracket entry", "2.1", [](A& a) { a.tri(0, 0, 0, 0) = 1; }},
            {"product entry 2", "2.1", [](A& a) { a.bil(0, 0, 0) = 2; }},
            {"bracket entry 3", "2.1", [](A& a) { a.tri(0, 0, 0, 0) = 3; }},
            {"product entry -1", "2.1", [](A& a) { a.bil(0, 0, 0) = -1; }}};
  if (name == "Z2")
    return {{"one-sided product", "2.1", [](A& a) { a.bil(0, 1, 0) = 1; }},
            {"one-sided bracket", "2.1", [](A& a) { a.tri(0, 1, 0, 0) = 1; }},
            {"one-sided product 2", "2.1", [](A& a) { a.bil(1, 0, 1) = 1; }},
            {"[e1,e2,e1] = e1", "2.5", [](A& a) { pair_tri(a, 0, 1, 0, 0); }},
            {"[e1,e2,e2] = e2", "2.5", [](A& a) { pair_tri(a, 0, 1, 1, 1); }}};
  if (name == "Z3")
    return {{"one-sided product", "2.1", [](A& a) { a.bil(0, 2, 1) = 1; }},
            {"one-sided bracket", "2.1", [](A& a) { a.tri(0, 1, 2, 0) = 1; }},
            {"[e2,e3,e1] = e1", "2.3", [](A& a) { pair_tri(a, 1, 2, 0, 0); }},
            {"[e1,e2,e3] = e3", "2.3", [](A& a) { pair_tri(a, 0, 1, 2, 2); }},
            {"[e1,e2,e1] = e1", "2.5", [](A& a) { pair_tri(a, 0, 1, 0, 0); }}};
  if (name == "S2")
    return {{"one-sided product", "2.1", [](A& a) { a.bil(0, 1, 0) += 1; }},
            {"one-sided bracket", "2.1", [](A& a) { a.tri(0, 1, 0, 0) = 1; }},
            {"one-sided bracket 2", "2.1", [](A& a) { a.tri(1, 0, 1, 1) = 1; }},
            {"[e1,e2,e1] = e1", "2.4", [](A& a) { pair_tri(a, 0, 1, 0, 0); }},
            {"[e1,e2,e2] = e2", "2.4", [](A& a) { pair_tri(a, 0, 1, 1, 1); }}};
  return {{"one-sided product", "2.1", [](A& a) { a.bil(0, 1, 2) += 1; }},
          {"e1*e3 = e1", "2.4", [](A& a) { pair_bil(a, 0, 2, 0); }},
          {"e2*e3 = e2", "2.4", [](A& a) { pair_bil(a, 1, 2, 1); }},
          {"[e1,e2,e3] = e3", "2.3", [](A& a) { pair_tri(a, 0, 1, 2, 2); }},
          {"[e2,e3,e1] = e1", "2.3", [](A& a) { pair_tri(a, 1, 2, 0, 0); }}};
}

inline const char* const kFixtures[] = {"Z1", "Z2", "Z3", "S2", "H3"};

/// Dimension of the cocycle space computed from the twisted algebra: every
/// cochain coordinate on all basis tuples is a column, and the Bol identities
/// of B + V are row-reduced directly.
template <class F>
std::size_t oracle_z(const BolAlgebra<F>& a, const Actions<F>& r) {
  const F& f = a.field();
  const std::size_t n = a.dim(), m = r.module_dim();
  const std::size_t nu_len = n * n * m, om_len = n * n * n * m, total = nu_len + om_len;
  std::vector<typename F::Element> nu(nu_len, f.zero()), om(om_len, f.zero());
  const auto r0 = bol_residuals(twisted(a, r, nu, om));
  Matrix<F> sys(f, r0.size(), total);
  for (std::size_t c = 0; c < total; ++c) {
    auto nu_c = nu;
    auto om_c = om;
    (c < nu_len ? nu_c[c] : om_c[c - nu_len]) = f.one();
    const auto rc = bol_residuals(twisted(a, r, nu_c, om_c));
    for (std::size_t k = 0; k < rc.size(); ++k) sys(k, c) = f.sub(rc[k], r0[k]);
  }
  return total - rank(sys);
}

/// The coboundary of (f, chi), entry by entry from the structure constants.
template <class F>
CochainPair<F> oracle_coboundary(const Matrix<F>& fm, const Vector<F>& chi, const BolAlgebra<F>& a,
                                 const Actions<F>& r) {
  const F& f = a.field();
  const std::size_t n = a.dim(), m = r.module_dim();
  CochainPair<F> c{Cochain2<F>(f, n, m), Cochain3<F>(f, n, m)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t w = 0; w < m; ++w) {
        auto& v = c.nu.at(x, y)[w];
        for (std::size_t u = 0; u < m; ++u) {
          v = f.add(v, f.mul(r.mu(x)(w, u), fm(u, y)));
          v = f.sub(v, f.mul(r.mu(y)(w, u), fm(u, x)));
          auto d = r.dd(x, y)(w, u);
          for (std::size_t k = 0; k < n; ++k) d = f.sub(d, f.mul(a.bil(x, y, k), r.mu(k)(w, u)));
          v = f.add(v, f.mul(d, chi[u]));
        }
        for (std::size_t k = 0; k < n; ++k) v = f.sub(v, f.mul(a.bil(x, y, k), fm(w, k)));
        for (std::size_t z = 0; z < n; ++z) {
          auto& o = c.omega.at(x, y, z)[w];
          for (std::size_t u = 0; u < m; ++u) {
            o = f.add(o, f.mul(r.theta(y, z)(w, u), fm(u, x)));
            o = f.sub(o, f.mul(r.theta(x, z)(w, u), fm(u, y)));
            o = f.add(o, f.mul(r.dd(x, y)(w, u), fm(u, z)));
          }
          for (std::size_t k = 0; k < n; ++k) o = f.sub(o, f.mul(a.tri(x, y, z, k), fm(w, k)));
        }
      }
  return c;
}

/// Rank of the coboundary operator over all (f, chi) coordinates.
template <class F>
std::size_t oracle_b(const BolAlgebra<F>& a, const Actions<F>& r) {
  const F& f = a.field();
  const std::size_t n = a.dim(), m = r.module_dim();
  std::vector<Vector<F>> cols;
  for (std::size_t k = 0; k < n * m + m; ++k) {
    Matrix<F> fm(f, m, n);
    Vector<F> chi(f, m);
    if (k < n * m)
      fm(k % m, k / m) = f.one();
    else
      chi[k - n * m] = f.one();
    auto [nu, om] = full_coords(oracle_coboundary(fm, chi, a, r));
    Vector<F> col(f, nu.size() + om.size());
    for (std::size_t i = 0; i < nu.size(); ++i) col[i] = nu[i];
    for (std::size_t i = 0; i < om.size(); ++i) col[nu.size() + i] = om[i];
    cols.push_back(std::move(col));
  }
  return rank(Matrix<F>::from_columns(f, cols.front().size(), cols));
}

template <class F>
bool oracle_is_cocycle(const BolAlgebra<F>& a, const Actions<F>& r, const CochainPair<F>& c) {
  auto [nu, om] = full_coords(c);
  return dense_is_bol(twisted(a, r, nu, om));
}

/// Orbit count of the enumerated cochains on a base with one-dimensional zero
/// fiber and zero actions: validity from the twisted algebra, and phi acting
/// by nu += phi(x*y), omega += phi([x,y,z]).
inline std::pair<std::size_t, std::size_t> oracle_classes(const BolAlgebra<PrimeField>& base) {
  const PrimeField f = gf5();
  const std::size_t n = base.dim();
  const Actions<PrimeField> zero(f, n, 1);
  CochainCoordinates<PrimeField> coords(f, n, 1);
  std::vector<std::string> valid;
  std::set<std::string> keys;
  for (const auto& v : VectorEnumeration(f, coords.size())) {
    auto c = coords.from_coords(v);
    auto [nu, om] = full_coords(c);
    if (!dense_is_bol(twisted(base, zero, nu, om))) continue;
    valid.push_back(v.to_string());
    std::string least;
    for (const auto& phi : VectorEnumeration(f, n)) {
      auto d = c;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t k = 0; k < n; ++k) {
            d.nu.at(x, y)[0] = f.add(d.nu.at(x, y)[0], f.mul(phi[k], base.bil(x, y, k)));
            for (std::size_t z = 0; z < n; ++z)
              d.omega.at(x, y, z)[0] = f.add(d.omega.at(x, y, z)[0], f.mul(phi[k], base.tri(x, y, z, k)));
          }
        }
      const std::string key = coords.to_coords(d).to_string();
      if (least.empty() || key < least) least = key;
    }
    keys.insert(least);
  }
  return {valid.size(), keys.size()};
}

}  // namespace bolext::test
