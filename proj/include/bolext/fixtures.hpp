#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "bolext/extension.hpp"

namespace bolext {

/// All products and brackets zero (Z1, Z2, Z3 for n = 1, 2, 3).
template <class F>
BolAlgebra<F> zero_algebra(const F& f, std::size_t n) {
  return BolAlgebra<F>(f, n);
}

/// e1*e2 = e1, trilinear part zero.
template <class F>
BolAlgebra<F> fixture_s2(const F& f) {
  BolAlgebra<F> a(f, 2);
  a.bil(0, 1, 0) = f.one();
  a.bil(1, 0, 0) = f.neg(f.one());
  return a;
}

/// e1*e2 = e3, everything else zero.
template <class F>
BolAlgebra<F> fixture_h3(const F& f) {
  BolAlgebra<F> a(f, 3);
  a.bil(0, 1, 2) = f.one();
  a.bil(1, 0, 2) = f.neg(f.one());
  return a;
}

/// mu = theta = D = 0 on an m-dimensional module (T(m)).
template <class F>
Representation<F> trivial_module(const F& f, std::size_t n, std::size_t m = 1) {
  return Representation<F>(f, n, m);
}

/// One-dimensional module over S2 with mu(e2) = 1, everything else zero.
template <class F>
Representation<F> fixture_r_s2(const F& f) {
  Representation<F> r(f, 2, 1);
  r.mu(1)(0, 0) = f.one();
  return r;
}

/// 0 -> span(e3) -> H3 -> Z2 -> 0.
template <class F>
Extension<F> fixture_e_h3(const F& f) {
  Matrix<F> inj(f, 3, 1), proj(f, 2, 3);
  inj(2, 0) = f.one();
  proj(0, 0) = f.one();
  proj(1, 1) = f.one();
  return {zero_algebra(f, 1), fixture_h3(f), zero_algebra(f, 2), std::move(inj), std::move(proj)};
}

/// "Z1", "Z2", "Z3", "S2", "H3" (case-insensitive).
template <class F>
std::optional<BolAlgebra<F>> named_algebra(const F& f, std::string_view name) {
  std::string s(name);
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (s == "Z1") return zero_algebra(f, 1);
  if (s == "Z2") return zero_algebra(f, 2);
  if (s == "Z3") return zero_algebra(f, 3);
  if (s == "S2") return fixture_s2(f);
  if (s == "H3") return fixture_h3(f);
  return std::nullopt;
}

}  // namespace bolext
