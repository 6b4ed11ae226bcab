#include <string>

#include "bolext/bol_algebra.hpp"
#include "bolext/parallel.hpp"

namespace bolext {

std::string format_indices(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(idx[k] + 1);
  }
  return s + ")";
}

namespace {

/// Products and brackets of basis vectors, cached once per validation.
template <class F>
struct BasisTables {
  explicit BasisTables(const BolAlgebra<F>& a) : n(a.dim()) {
    prod.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) prod.push_back(a.basis_product(i, j));
    br.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) br.push_back(a.basis_bracket(i, j, k));
  }
  const Vector<F>& P(std::size_t i, std::size_t j) const { return prod[i * n + j]; }
  const Vector<F>& T(std::size_t i, std::size_t j, std::size_t k) const { return br[(i * n + j) * n + k]; }

  std::size_t n;
  std::vector<Vector<F>> prod;
  std::vector<Vector<F>> br;
};

template <class F, class Sink>
void visit_bol(const BolAlgebra<F>& a, Sink& sink) {
  const F& f = a.field();
  const std::size_t n = a.dim();
  const BasisTables<F> t(a);
  Vector<F> r(f, n);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!sink("2.1", {i, j}, t.P(i, j) + t.P(j, i))) return;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!sink("2.1", {i, j, k}, t.T(i, j, k) + t.T(j, i, k))) return;
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        r = t.T(i, j, k);
        r += t.T(j, k, i);
        r += t.T(k, i, j);
        if (!sink("2.3", {i, j, k}, r)) return;
      }

  // [x1,x2,y1*y2] - [x1,x2,y1]*y2 - y1*[x1,x2,y2] - [y1,y2,x1*x2] + (y1*y2)*(x1*x2)
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t y1 = 0; y1 < n; ++y1)
        for (std::size_t y2 = 0; y2 < n; ++y2) {
          r = a.product(t.P(y1, y2), t.P(x1, x2));
          const Vector<F>& p12 = t.P(y1, y2);
          const Vector<F>& px = t.P(x1, x2);
          const Vector<F>& b1 = t.T(x1, x2, y1);
          const Vector<F>& b2 = t.T(x1, x2, y2);
          for (std::size_t k = 0; k < n; ++k) {
            r.add_scaled(p12[k], t.T(x1, x2, k));
            r.add_scaled(f.neg(b1[k]), t.P(k, y2));
            r.add_scaled(f.neg(b2[k]), t.P(y1, k));
            r.add_scaled(f.neg(px[k]), t.T(y1, y2, k));
          }
          if (!sink("2.4", {x1, x2, y1, y2}, r)) return;
        }

  // [x1,x2,[y1,y2,y3]] - [[x1,x2,y1],y2,y3] - [y1,[x1,x2,y2],y3] - [y1,y2,[x1,x2,y3]]
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t y1 = 0; y1 < n; ++y1)
        for (std::size_t y2 = 0; y2 < n; ++y2)
          for (std::size_t y3 = 0; y3 < n; ++y3) {
            r = Vector<F>(f, n);
            const Vector<F>& inner = t.T(y1, y2, y3);
            const Vector<F>& b1 = t.T(x1, x2, y1);
            const Vector<F>& b2 = t.T(x1, x2, y2);
            const Vector<F>& b3 = t.T(x1, x2, y3);
            for (std::size_t k = 0; k < n; ++k) {
              r.add_scaled(inner[k], t.T(x1, x2, k));
              r.add_scaled(f.neg(b1[k]), t.T(k, y2, y3));
              r.add_scaled(f.neg(b2[k]), t.T(y1, k, y3));
              r.add_scaled(f.neg(b3[k]), t.T(y1, y2, k));
            }
            if (!sink("2.5", {x1, x2, y1, y2, y3}, r)) return;
          }
}

template <class F>
bool morphism_holds(const Matrix<F>& f, const BolAlgebra<F>& a1, const BolAlgebra<F>& a2,
                    const std::vector<Vector<F>>& cols) {
  const std::size_t n = a1.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(f * a1.basis_product(i, j) == a2.product(cols[i], cols[j]))) return false;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!(f * a1.basis_bracket(i, j, k) == a2.bracket(cols[i], cols[j], cols[k]))) return false;
      }
  return true;
}

/// Advances the row-major residue digits of m; false after the last matrix.
bool increment_matrix(Matrix<PrimeField>& m) {
  const std::uint32_t p = m.field().modulus();
  for (std::size_t k = m.rows() * m.cols(); k-- > 0;) {
    auto& x = m(k / m.cols(), k % m.cols());
    if (x + 1 < p) {
      ++x;
      return true;
    }
    x = 0;
  }
  return false;
}

std::vector<Matrix<PrimeField>> automorphisms_prime(const BolAlgebra<PrimeField>& a, const SearchBounds& bounds) {
  const std::size_t n = a.dim();
  if (n > bounds.max_automorphism_dim)
    throw UnsupportedEnumeration("automorphism enumeration limited to dimension " +
                                 std::to_string(bounds.max_automorphism_dim) + ", algebra has dimension " +
                                 std::to_string(n));
  const PrimeField& f = a.field();
  auto total = checked_power(f.modulus(), n * n, bounds.max_candidates);
  if (!total)
    throw UnsupportedEnumeration("automorphism search space exceeds the bound of " +
                                 std::to_string(bounds.max_candidates) + " candidates");
  return parallel_collect<Matrix<PrimeField>>(
      *total, [&](std::uint64_t first, std::uint64_t last, std::vector<Matrix<PrimeField>>& out) {
        if (first >= last) return;
        Matrix<PrimeField> m = decode_matrix(f, n, n, first);
        std::vector<Vector<PrimeField>> cols(n, Vector<PrimeField>(f, n));
        for (std::uint64_t idx = first; idx < last; ++idx) {
          for (std::size_t c = 0; c < n; ++c) cols[c] = m.column(c);
          if (morphism_holds(m, a, a, cols) && is_invertible(m)) out.push_back(m);
          increment_matrix(m);
        }
      });
}

}  // namespace

template <class F>
ValidationReport<F> validate_bol(const BolAlgebra<F>& a, std::size_t limit) {
  ValidationReport<F> report(a.field(), limit);
  visit_bol(a, report);
  return report;
}

template <class F>
bool is_morphism(const Matrix<F>& f, const BolAlgebra<F>& a1, const BolAlgebra<F>& a2) {
  if (!(a1.field() == a2.field()) || !(f.field() == a1.field()))
    throw UsageError("is_morphism: algebras and map must share one field");
  if (f.rows() != a2.dim() || f.cols() != a1.dim())
    throw UsageError("is_morphism: map has shape " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                     ", expected " + std::to_string(a2.dim()) + "x" + std::to_string(a1.dim()));
  std::vector<Vector<F>> cols;
  for (std::size_t c = 0; c < f.cols(); ++c) cols.push_back(f.column(c));
  return morphism_holds(f, a1, a2, cols);
}

template <class F>
std::vector<Matrix<F>> enumerate_automorphisms(const BolAlgebra<F>& a, const SearchBounds& bounds) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    return automorphisms_prime(a, bounds);
  } else {
    (void)a;
    (void)bounds;
    throw UnsupportedEnumeration("cannot enumerate automorphisms over the rationals");
  }
}

std::vector<BolAlgebra<PrimeField>> enumerate_bol_algebras(const FieldDescriptor& field, std::size_t dim,
                                                           bool tri_zero, const SearchBounds& bounds) {
  if (!field.is_prime_field()) throw UnsupportedEnumeration("cannot enumerate algebras over the rationals");
  if (dim > (tri_zero ? 3u : 2u))
    throw UnsupportedEnumeration("algebra enumeration is limited to dimension 2 (or 3 with zero bracket)");
  const PrimeField f(field.modulus);
  struct Coord {
    bool bil;
    std::size_t i, j, k, l;
  };
  std::vector<Coord> coords;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) coords.push_back({true, i, j, k, 0});
  if (!tri_zero) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          for (std::size_t l = 0; l < dim; ++l) coords.push_back({false, i, j, k, l});
  }
  auto total = checked_power(f.modulus(), coords.size(), bounds.max_candidates);
  if (!total)
    throw UnsupportedEnumeration("algebra search space exceeds the bound of " + std::to_string(bounds.max_candidates) +
                                 " candidates");
  const VectorEnumeration digits(f, coords.size());
  return parallel_collect<BolAlgebra<PrimeField>>(
      *total, [&](std::uint64_t first, std::uint64_t last, std::vector<BolAlgebra<PrimeField>>& out) {
        Vector<PrimeField> v(f, coords.size());
        for (std::uint64_t idx = first; idx < last; ++idx) {
          digits.decode(idx, v);
          BolAlgebra<PrimeField> a(f, dim);
          for (std::size_t c = 0; c < coords.size(); ++c) {
            const Coord& co = coords[c];
            if (co.bil) {
              a.bil(co.i, co.j, co.k) = v[c];
              a.bil(co.j, co.i, co.k) = f.neg(v[c]);
            } else {
              a.tri(co.i, co.j, co.k, co.l) = v[c];
              a.tri(co.j, co.i, co.k, co.l) = f.neg(v[c]);
            }
          }
          if (validate_bol(a, 1).valid()) out.push_back(std::move(a));
        }
      });
}

template <class F>
BolAlgebra<F> change_basis(const BolAlgebra<F>& a, const Matrix<F>& g) {
  const std::size_t n = a.dim();
  if (g.rows() != n || g.cols() != n) throw UsageError("change_basis: matrix has wrong shape");
  auto ginv = inverse(g);
  if (!ginv) throw UsageError("change_basis: matrix is not invertible");
  BolAlgebra<F> out(a.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector<F> v = *ginv * a.product(g.column(i), g.column(j));
      for (std::size_t k = 0; k < n; ++k) out.bil(i, j, k) = v[k];
      for (std::size_t k = 0; k < n; ++k) {
        Vector<F> w = *ginv * a.bracket(g.column(i), g.column(j), g.column(k));
        for (std::size_t l = 0; l < n; ++l) out.tri(i, j, k, l) = w[l];
      }
    }
  return out;
}

#define BOLEXT_INSTANTIATE(F)                                                                         \
  template ValidationReport<F> validate_bol(const BolAlgebra<F>&, std::size_t);                      \
  template bool is_morphism(const Matrix<F>&, const BolAlgebra<F>&, const BolAlgebra<F>&);            \
  template std::vector<Matrix<F>> enumerate_automorphisms(const BolAlgebra<F>&, const SearchBounds&); \
  template BolAlgebra<F> change_basis(const BolAlgebra<F>&, const Matrix<F>&);

BOLEXT_INSTANTIATE(Rationals)
BOLEXT_INSTANTIATE(PrimeField)

}  // namespace bolext
