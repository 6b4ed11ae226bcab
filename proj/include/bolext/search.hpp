#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include "bolext/enumeration.hpp"
#include "bolext/parallel.hpp"
#include "bolext/report.hpp"

namespace bolext {

/// Three-valued answer of an existence search. kUndecided means the search
/// was outside what can be decided (nonlinear over Q, or over the bound); it
/// never stands for "no solution".
enum class Verdict { kFound, kNone, kUndecided };

std::string_view verdict_name(Verdict v);

template <class F>
struct SearchResult {
  Verdict verdict = Verdict::kUndecided;
  /// Least witness in coordinate order, verified against every identity.
  std::optional<Matrix<F>> witness;
  /// For kNone from the linear path: first identity that cannot be satisfied.
  std::string failing_tag;
  /// "linear", "exhaustive", or empty when undecided.
  std::string method;
};

/// A linear map B -> V (m x n) from its coordinates phi(e_1), phi(e_2), ...
template <class F>
Matrix<F> map_from_coords(const Vector<F>& v, std::size_t m, std::size_t n) {
  if (v.size() != m * n) throw UsageError("map coordinate vector has the wrong length");
  Matrix<F> phi(v.field(), m, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < m; ++r) phi(r, c) = v[c * m + r];
  return phi;
}

template <class F>
Vector<F> map_to_coords(const Matrix<F>& phi) {
  Vector<F> v(phi.field(), phi.rows() * phi.cols());
  for (std::size_t c = 0; c < phi.cols(); ++c)
    for (std::size_t r = 0; r < phi.rows(); ++r) v[c * phi.rows() + r] = phi(r, c);
  return v;
}

/// Searches for a linear map phi (m x n) whose residuals all vanish.
/// residual_fn(phi, sink) feeds every identity residual to sink. When `affine`
/// holds the residuals are affine in phi and the system is solved exactly;
/// otherwise prime fields are searched exhaustively within the bound.
template <class F, class ResidualFn>
SearchResult<F> search_linear_map(const F& field, std::size_t m, std::size_t n, bool affine,
                                  const SearchBounds& bounds, ResidualFn&& residual_fn) {
  SearchResult<F> out;
  auto holds = [&](const Matrix<F>& phi) {
    ZeroCheck<F> check;
    residual_fn(phi, check);
    return check.ok();
  };
  if (affine) {
    out.method = "linear";
    auto sys = probe_affine(field, m * n, [&](const Vector<F>& x, ResidualCollector<F>& sink) {
      residual_fn(map_from_coords(x, m, n), sink);
    });
    auto sol = solve_affine(sys);
    if (!sol.x) {
      out.verdict = Verdict::kNone;
      out.failing_tag = sol.failing_tag;
      return out;
    }
    Matrix<F> phi = map_from_coords(*sol.x, m, n);
    if (!holds(phi)) throw ConsistencyError("identities were assumed affine in the unknown map but are not");
    out.verdict = Verdict::kFound;
    out.witness = std::move(phi);
    return out;
  }
  if constexpr (std::is_same_v<F, PrimeField>) {
    auto total = checked_power(field.modulus(), m * n, bounds.max_candidates);
    if (!total) return out;
    out.method = "exhaustive";
    const VectorEnumeration e(field, m * n);
    auto idx = parallel_find_first(*total, [&](std::uint64_t i) { return holds(map_from_coords(e.at(i), m, n)); });
    if (!idx) {
      out.verdict = Verdict::kNone;
      return out;
    }
    out.verdict = Verdict::kFound;
    out.witness = map_from_coords(e.at(*idx), m, n);
    return out;
  } else {
    (void)bounds;
    return out;
  }
}

}  // namespace bolext
