#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "bolext/enumeration.hpp"
#include "bolext/report.hpp"

namespace bolext {

/// A finite-dimensional algebra with a bilinear product x*y and a trilinear
/// bracket [x,y,z], given by structure constants on the standard basis:
/// bil(i,j,k) is the e_k coefficient of e_i*e_j and tri(i,j,k,l) the e_l
/// coefficient of [e_i,e_j,e_k]. Skewness is validated, never assumed.
template <class F>
class BolAlgebra {
 public:
  using Field = F;
  using Scalar = typename F::Element;

  BolAlgebra(const F& field, std::size_t dim)
      : field_(field), n_(dim), bil_(dim * dim * dim, field.zero()), tri_(dim * dim * dim * dim, field.zero()) {}

  const F& field() const { return field_; }
  std::size_t dim() const { return n_; }

  Scalar& bil(std::size_t i, std::size_t j, std::size_t k) { return bil_[(i * n_ + j) * n_ + k]; }
  const Scalar& bil(std::size_t i, std::size_t j, std::size_t k) const { return bil_[(i * n_ + j) * n_ + k]; }
  Scalar& tri(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return tri_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  const Scalar& tri(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return tri_[((i * n_ + j) * n_ + k) * n_ + l];
  }

  /// e_i * e_j
  Vector<F> basis_product(std::size_t i, std::size_t j) const {
    Vector<F> v(field_, n_);
    for (std::size_t k = 0; k < n_; ++k) v[k] = bil(i, j, k);
    return v;
  }
  /// [e_i, e_j, e_k]
  Vector<F> basis_bracket(std::size_t i, std::size_t j, std::size_t k) const {
    Vector<F> v(field_, n_);
    for (std::size_t l = 0; l < n_; ++l) v[l] = tri(i, j, k, l);
    return v;
  }

  Vector<F> product(const Vector<F>& x, const Vector<F>& y) const {
    check_arg(x);
    check_arg(y);
    Vector<F> out(field_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (field_.is_zero(y[j])) continue;
        const Scalar c = field_.mul(x[i], y[j]);
        const Scalar* row = &bil_[(i * n_ + j) * n_];
        for (std::size_t k = 0; k < n_; ++k) {
          if (!field_.is_zero(row[k])) out[k] = field_.add(out[k], field_.mul(c, row[k]));
        }
      }
    }
    return out;
  }

  Vector<F> bracket(const Vector<F>& x, const Vector<F>& y, const Vector<F>& z) const {
    check_arg(x);
    check_arg(y);
    check_arg(z);
    Vector<F> out(field_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (field_.is_zero(y[j])) continue;
        const Scalar cij = field_.mul(x[i], y[j]);
        for (std::size_t k = 0; k < n_; ++k) {
          if (field_.is_zero(z[k])) continue;
          const Scalar c = field_.mul(cij, z[k]);
          const Scalar* row = &tri_[((i * n_ + j) * n_ + k) * n_];
          for (std::size_t l = 0; l < n_; ++l) {
            if (!field_.is_zero(row[l])) out[l] = field_.add(out[l], field_.mul(c, row[l]));
          }
        }
      }
    }
    return out;
  }

  bool product_is_zero() const {
    for (const auto& x : bil_) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }
  bool bracket_is_zero() const {
    for (const auto& x : tri_) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }
  /// All structure constants vanish.
  bool is_abelian() const { return product_is_zero() && bracket_is_zero(); }

  const std::vector<Scalar>& bilinear_data() const { return bil_; }
  const std::vector<Scalar>& trilinear_data() const { return tri_; }

  bool operator==(const BolAlgebra& o) const {
    if (!(field_ == o.field_) || n_ != o.n_) return false;
    for (std::size_t k = 0; k < bil_.size(); ++k) {
      if (!field_.equal(bil_[k], o.bil_[k])) return false;
    }
    for (std::size_t k = 0; k < tri_.size(); ++k) {
      if (!field_.equal(tri_[k], o.tri_[k])) return false;
    }
    return true;
  }

 private:
  void check_arg(const Vector<F>& v) const {
    if (v.size() != n_) throw UsageError("argument has wrong dimension for this algebra");
    if (!(v.field() == field_)) throw UsageError("argument is over a different field");
  }

  F field_;
  std::size_t n_;
  std::vector<Scalar> bil_;
  std::vector<Scalar> tri_;
};

/// x*y when z is absent, [x,y,z] otherwise.
template <class F>
Vector<F> evaluate_products(const BolAlgebra<F>& a, const Vector<F>& x, const Vector<F>& y,
                            const std::optional<Vector<F>>& z = std::nullopt) {
  return z ? a.bracket(x, y, *z) : a.product(x, y);
}

/// Identity tags: "2.1" skewness of both operations, "2.3" cyclic sum of the
/// bracket, "2.4" the bracket acting on a product, "2.5" the bracket acting on
/// a bracket. Stops after `limit` violations.
template <class F>
ValidationReport<F> validate_bol(const BolAlgebra<F>& a,
                                 std::size_t limit = std::numeric_limits<std::size_t>::max());

/// f : a1 -> a2 (an a2.dim x a1.dim matrix) preserves both operations on basis tuples.
template <class F>
bool is_morphism(const Matrix<F>& f, const BolAlgebra<F>& a1, const BolAlgebra<F>& a2);

/// Invertible morphisms a -> a in increasing order of their row-major residue index.
template <class F>
std::vector<Matrix<F>> enumerate_automorphisms(const BolAlgebra<F>& a, const SearchBounds& bounds = {});

/// Every valid algebra over GF(p) of the given dimension, in order of the
/// free structure constants (b[i][j][k] for i<j, then t[i][j][k][l] for i<j).
std::vector<BolAlgebra<PrimeField>> enumerate_bol_algebras(const FieldDescriptor& field, std::size_t dim,
                                                           bool tri_zero, const SearchBounds& bounds = {});

/// Structure constants of a in the basis given by the columns of g: the
/// algebra a' with g(x *' y) = g(x) * g(y), and likewise for the bracket.
template <class F>
BolAlgebra<F> change_basis(const BolAlgebra<F>& a, const Matrix<F>& g);

}  // namespace bolext
