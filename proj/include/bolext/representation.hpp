#pragma once

#include <cstddef>
#include <vector>

#include "bolext/bol_algebra.hpp"

namespace bolext {

/// Action data (mu, theta, D) of an n-dimensional algebra on an m-dimensional
/// space: mu(i) = mu(e_i), theta(i,j) = theta(e_i,e_j), dd(i,j) = D(e_i,e_j),
/// each an m x m matrix. A representation is action data satisfying the module
/// identities; the same layout carries the actions of a non-abelian cocycle.
template <class F>
class Actions {
 public:
  Actions(const F& field, std::size_t algebra_dim, std::size_t module_dim)
      : field_(field),
        n_(algebra_dim),
        m_(module_dim),
        mu_(algebra_dim, Matrix<F>(field, module_dim, module_dim)),
        theta_(algebra_dim * algebra_dim, Matrix<F>(field, module_dim, module_dim)),
        dd_(algebra_dim * algebra_dim, Matrix<F>(field, module_dim, module_dim)) {}

  const F& field() const { return field_; }
  std::size_t algebra_dim() const { return n_; }
  std::size_t module_dim() const { return m_; }

  Matrix<F>& mu(std::size_t i) { return mu_[i]; }
  const Matrix<F>& mu(std::size_t i) const { return mu_[i]; }
  Matrix<F>& theta(std::size_t i, std::size_t j) { return theta_[i * n_ + j]; }
  const Matrix<F>& theta(std::size_t i, std::size_t j) const { return theta_[i * n_ + j]; }
  Matrix<F>& dd(std::size_t i, std::size_t j) { return dd_[i * n_ + j]; }
  const Matrix<F>& dd(std::size_t i, std::size_t j) const { return dd_[i * n_ + j]; }

  Matrix<F> mu_at(const Vector<F>& x) const {
    Matrix<F> out(field_, m_, m_);
    for (std::size_t i = 0; i < n_; ++i) out.add_scaled(x[i], mu_[i]);
    return out;
  }
  Matrix<F> theta_at(const Vector<F>& x, const Vector<F>& y) const { return bilinear_at(theta_, x, y); }
  Matrix<F> dd_at(const Vector<F>& x, const Vector<F>& y) const { return bilinear_at(dd_, x, y); }
  /// theta(e_i, y)
  Matrix<F> theta_at(std::size_t i, const Vector<F>& y) const { return partial_at(theta_, i, y, false); }
  /// theta(x, e_j)
  Matrix<F> theta_at(const Vector<F>& x, std::size_t j) const { return partial_at(theta_, j, x, true); }
  Matrix<F> dd_at(std::size_t i, const Vector<F>& y) const { return partial_at(dd_, i, y, false); }
  Matrix<F> dd_at(const Vector<F>& x, std::size_t j) const { return partial_at(dd_, j, x, true); }

  bool all_zero() const {
    for (const auto& x : mu_) {
      if (!x.is_zero()) return false;
    }
    for (std::size_t k = 0; k < theta_.size(); ++k) {
      if (!theta_[k].is_zero() || !dd_[k].is_zero()) return false;
    }
    return true;
  }

  bool operator==(const Actions& o) const {
    return n_ == o.n_ && m_ == o.m_ && mu_ == o.mu_ && theta_ == o.theta_ && dd_ == o.dd_;
  }

 private:
  Matrix<F> bilinear_at(const std::vector<Matrix<F>>& t, const Vector<F>& x, const Vector<F>& y) const {
    Matrix<F> out(field_, m_, m_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (field_.is_zero(y[j])) continue;
        out.add_scaled(field_.mul(x[i], y[j]), t[i * n_ + j]);
      }
    }
    return out;
  }
  Matrix<F> partial_at(const std::vector<Matrix<F>>& t, std::size_t fixed, const Vector<F>& v,
                       bool fixed_is_second) const {
    Matrix<F> out(field_, m_, m_);
    for (std::size_t k = 0; k < n_; ++k) {
      if (field_.is_zero(v[k])) continue;
      out.add_scaled(v[k], fixed_is_second ? t[k * n_ + fixed] : t[fixed * n_ + k]);
    }
    return out;
  }

  F field_;
  std::size_t n_;
  std::size_t m_;
  std::vector<Matrix<F>> mu_;
  std::vector<Matrix<F>> theta_;
  std::vector<Matrix<F>> dd_;
};

template <class F>
using Representation = Actions<F>;

/// Module identities on basis tuples, tags "2.9" (D through theta), "2.10"
/// (D against mu), "2.11" (theta on a product), "2.12" (D against D), "2.13"
/// (D against theta), "2.7" (theta on a bracket).
template <class F>
ValidationReport<F> validate_representation(const BolAlgebra<F>& a, const Representation<F>& r,
                                            std::size_t limit = std::numeric_limits<std::size_t>::max());

/// B + V with [x+u,y+v,z+w] = [x,y,z] + theta(y,z)u - theta(x,z)v + D(x,y)w and
/// (x+u)*(y+v) = x*y + mu(x)v - mu(y)u; B coordinates first.
template <class F>
BolAlgebra<F> semidirect_product(const BolAlgebra<F>& a, const Representation<F>& r);

/// f : B -> V (m x n) with companion chi in V, where the D(x,y) - mu(x*y)
/// operator acts on chi.
template <class F>
bool is_pseudoderivation(const Matrix<F>& f, const Vector<F>& chi, const BolAlgebra<F>& a,
                         const Representation<F>& r);

/// Shape and field agreement between an algebra and action data.
template <class F>
void check_actions_shape(const BolAlgebra<F>& a, const Actions<F>& r);

}  // namespace bolext
