#pragma once

#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "bolext/matrix.hpp"

namespace bolext {

template <class F>
struct RrefResult {
  Matrix<F> matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

namespace detail {

/// row dst += factor * row src, starting at column `from`.
template <class F>
void row_axpy(Matrix<F>& m, std::size_t dst, std::size_t src, const typename F::Element& factor,
              std::size_t from) {
  const F& f = m.field();
  if (f.is_zero(factor)) return;
  const std::size_t n = m.cols() - from;
  if constexpr (std::is_same_v<F, PrimeField>) {
    kernels::axpy_mod(m.row_data(dst) + from, m.row_data(src) + from, n, factor, f.modulus());
  } else {
    auto* d = m.row_data(dst) + from;
    const auto* s = m.row_data(src) + from;
    for (std::size_t k = 0; k < n; ++k) {
      if (!f.is_zero(s[k])) d[k] = f.add(d[k], f.mul(factor, s[k]));
    }
  }
}

template <class F>
void swap_rows(Matrix<F>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace detail

/// Reduced row echelon form. The result is unique, so it doubles as a canonical form.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  const F f = m.field();
  RrefResult<F> out{m, 0, {}};
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pr = rank;
    while (pr < m.rows() && f.is_zero(m(pr, col))) ++pr;
    if (pr == m.rows()) continue;
    detail::swap_rows(m, pr, rank);
    const auto inv = f.inv(m(rank, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(rank, c) = f.mul(inv, m(rank, c));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || f.is_zero(m(r, col))) continue;
      detail::row_axpy(m, r, rank, f.neg(m(r, col)), col);
    }
    out.pivots.push_back(col);
    ++rank;
  }
  out.matrix = std::move(m);
  out.rank = rank;
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

/// A subspace of F^n stored by its canonical RREF basis, so equality is row equality.
template <class F>
class Subspace {
 public:
  Subspace(const F& field, std::size_t ambient) : basis_(field, 0, ambient) {}

  /// Row span of `rows`.
  static Subspace span(const Matrix<F>& rows) {
    auto r = rref(rows);
    Subspace s(rows.field(), rows.cols());
    s.basis_ = r.matrix.block(0, 0, r.rank, rows.cols());
    s.pivots_ = std::move(r.pivots);
    return s;
  }
  static Subspace span(const F& field, std::size_t ambient, const std::vector<Vector<F>>& vectors) {
    return span(Matrix<F>::from_rows(field, ambient, vectors));
  }
  static Subspace full(const F& field, std::size_t ambient) {
    return span(Matrix<F>::identity(field, ambient));
  }

  const F& field() const { return basis_.field(); }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector<F> basis_vector(std::size_t k) const { return basis_.row(k); }

  /// Subtracts basis rows so every pivot coordinate of the result is zero.
  Vector<F> reduce(Vector<F> v) const {
    if (v.size() != ambient_dim()) throw UsageError("subspace ambient dimension mismatch");
    const F& f = field();
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const auto c = v[pivots_[k]];
      if (f.is_zero(c)) continue;
      v.add_scaled(f.neg(c), basis_.row(k));
    }
    return v;
  }

  bool contains(const Vector<F>& v) const { return reduce(v).is_zero(); }
  bool contains(const Subspace& o) const {
    if (o.ambient_dim() != ambient_dim()) throw UsageError("subspace ambient dimension mismatch");
    for (std::size_t k = 0; k < o.dim(); ++k) {
      if (!contains(o.basis_.row(k))) return false;
    }
    return true;
  }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {x : m x = 0}.
template <class F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
  const F& f = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector<F>> rows;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    Vector<F> v(f, m.cols());
    v[fc] = f.one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.matrix(i, fc));
    rows.push_back(std::move(v));
  }
  return Subspace<F>::span(f, m.cols(), rows);
}

/// Column space of m, as a subspace of F^rows.
template <class F>
Subspace<F> image_basis(const Matrix<F>& m) {
  return Subspace<F>::span(m.transpose());
}

/// Some x with a x = b (free variables set to zero), or nothing if b is outside the column space.
template <class F>
std::optional<Vector<F>> solve_linear(const Matrix<F>& a, const Vector<F>& b) {
  if (a.rows() != b.size()) throw UsageError("solve_linear: right-hand side length mismatch");
  const F& f = a.field();
  Matrix<F> aug(f, a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  aug.set_column(a.cols(), b);
  auto r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vector<F> x(f, a.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.matrix(i, a.cols());
  return x;
}

/// The solution that is lexicographically least when coordinates are compared
/// front to back and zero is preferred; over GF(p) this is the lex-least residue vector.
template <class F>
std::optional<Vector<F>> canonical_solution(const Matrix<F>& a, const Vector<F>& b) {
  auto x = solve_linear(a, b);
  if (!x) return std::nullopt;
  return kernel_basis(a).reduce(std::move(*x));
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (!m.is_square()) throw UsageError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  auto r = rref(hstack(m, Matrix<F>::identity(m.field(), n)));
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  return r.matrix.block(0, n, n, n);
}

template <class F>
bool is_invertible(const Matrix<F>& m) {
  return m.is_square() && rank(m) == m.rows();
}

/// dim z - dim b, after checking b is inside z.
template <class F>
std::size_t quotient_dim(const Subspace<F>& z, const Subspace<F>& b) {
  if (!z.contains(b)) throw ContainmentError("quotient_dim: subspace is not contained in the ambient subspace");
  return z.dim() - b.dim();
}

}  // namespace bolext
