#pragma once

#include <cstddef>
#include <vector>

#include "bolext/matrix.hpp"

namespace bolext {

/// Bilinear map B x B -> V stored on basis pairs: at(i,j) = nu(e_i, e_j).
template <class F>
class Cochain2 {
 public:
  Cochain2(const F& field, std::size_t n, std::size_t m)
      : field_(field), n_(n), m_(m), values_(n * n, Vector<F>(field, m)) {}

  const F& field() const { return field_; }
  std::size_t algebra_dim() const { return n_; }
  std::size_t module_dim() const { return m_; }
  Vector<F>& at(std::size_t i, std::size_t j) { return values_[i * n_ + j]; }
  const Vector<F>& at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }

  /// Sets nu(e_i,e_j) = v and nu(e_j,e_i) = -v.
  void set_skew(std::size_t i, std::size_t j, const Vector<F>& v) {
    at(i, j) = v;
    at(j, i) = -v;
  }

  Vector<F> eval(const Vector<F>& x, const Vector<F>& y) const {
    Vector<F> out(field_, m_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (field_.is_zero(y[j])) continue;
        out.add_scaled(field_.mul(x[i], y[j]), at(i, j));
      }
    }
    return out;
  }
  /// nu(e_i, y)
  Vector<F> eval(std::size_t i, const Vector<F>& y) const {
    Vector<F> out(field_, m_);
    for (std::size_t j = 0; j < n_; ++j) out.add_scaled(y[j], at(i, j));
    return out;
  }
  /// nu(x, e_j)
  Vector<F> eval(const Vector<F>& x, std::size_t j) const {
    Vector<F> out(field_, m_);
    for (std::size_t i = 0; i < n_; ++i) out.add_scaled(x[i], at(i, j));
    return out;
  }

  bool is_skew() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (!(at(i, j) + at(j, i)).is_zero()) return false;
      }
    return true;
  }
  bool is_zero() const {
    for (const auto& v : values_) {
      if (!v.is_zero()) return false;
    }
    return true;
  }

  Cochain2& operator+=(const Cochain2& o) {
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
    return *this;
  }
  Cochain2& operator-=(const Cochain2& o) {
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
    return *this;
  }
  friend Cochain2 operator+(Cochain2 a, const Cochain2& b) { return a += b; }
  friend Cochain2 operator-(Cochain2 a, const Cochain2& b) { return a -= b; }

  bool operator==(const Cochain2& o) const { return n_ == o.n_ && m_ == o.m_ && values_ == o.values_; }

 private:
  F field_;
  std::size_t n_;
  std::size_t m_;
  std::vector<Vector<F>> values_;
};

/// Trilinear map B x B x B -> V: at(i,j,k) = omega(e_i, e_j, e_k).
template <class F>
class Cochain3 {
 public:
  Cochain3(const F& field, std::size_t n, std::size_t m)
      : field_(field), n_(n), m_(m), values_(n * n * n, Vector<F>(field, m)) {}

  const F& field() const { return field_; }
  std::size_t algebra_dim() const { return n_; }
  std::size_t module_dim() const { return m_; }
  Vector<F>& at(std::size_t i, std::size_t j, std::size_t k) { return values_[(i * n_ + j) * n_ + k]; }
  const Vector<F>& at(std::size_t i, std::size_t j, std::size_t k) const { return values_[(i * n_ + j) * n_ + k]; }

  /// Sets omega(e_i,e_j,e_k) = v and omega(e_j,e_i,e_k) = -v.
  void set_skew(std::size_t i, std::size_t j, std::size_t k, const Vector<F>& v) {
    at(i, j, k) = v;
    at(j, i, k) = -v;
  }

  Vector<F> eval(const Vector<F>& x, const Vector<F>& y, const Vector<F>& z) const {
    Vector<F> out(field_, m_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (field_.is_zero(y[j])) continue;
        const auto cij = field_.mul(x[i], y[j]);
        for (std::size_t k = 0; k < n_; ++k) {
          if (field_.is_zero(z[k])) continue;
          out.add_scaled(field_.mul(cij, z[k]), at(i, j, k));
        }
      }
    }
    return out;
  }

  bool is_skew() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) {
          if (!(at(i, j, k) + at(j, i, k)).is_zero()) return false;
        }
    return true;
  }
  bool is_zero() const {
    for (const auto& v : values_) {
      if (!v.is_zero()) return false;
    }
    return true;
  }

  Cochain3& operator+=(const Cochain3& o) {
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
    return *this;
  }
  Cochain3& operator-=(const Cochain3& o) {
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
    return *this;
  }
  friend Cochain3 operator+(Cochain3 a, const Cochain3& b) { return a += b; }
  friend Cochain3 operator-(Cochain3 a, const Cochain3& b) { return a -= b; }

  bool operator==(const Cochain3& o) const { return n_ == o.n_ && m_ == o.m_ && values_ == o.values_; }

 private:
  F field_;
  std::size_t n_;
  std::size_t m_;
  std::vector<Vector<F>> values_;
};

template <class F>
struct CochainPair {
  Cochain2<F> nu;
  Cochain3<F> omega;

  bool operator==(const CochainPair& o) const { return nu == o.nu && omega == o.omega; }
};

/// Free coordinates of a skew pair: nu(e_i,e_j) for i<j, then omega(e_i,e_j,e_k)
/// for i<j and every k, each contributing m module coordinates.
template <class F>
class CochainCoordinates {
 public:
  CochainCoordinates(const F& field, std::size_t n, std::size_t m) : field_(field), n_(n), m_(m) {}

  std::size_t pair_count() const { return n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2; }
  std::size_t nu_size() const { return pair_count() * m_; }
  std::size_t size() const { return nu_size() + pair_count() * n_ * m_; }

  Vector<F> to_coords(const CochainPair<F>& c) const {
    Vector<F> v(field_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) v.append(c.nu.at(i, j));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) v.append(c.omega.at(i, j, k));
    return v;
  }

  CochainPair<F> from_coords(const Vector<F>& v) const {
    if (v.size() != size()) throw UsageError("cochain coordinate vector has the wrong length");
    CochainPair<F> c{Cochain2<F>(field_, n_, m_), Cochain3<F>(field_, n_, m_)};
    std::size_t off = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j, off += m_) c.nu.set_skew(i, j, v.slice(off, m_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k, off += m_) c.omega.set_skew(i, j, k, v.slice(off, m_));
    return c;
  }

 private:
  F field_;
  std::size_t n_;
  std::size_t m_;
};

}  // namespace bolext
