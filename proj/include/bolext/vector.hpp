#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <string>
#include <type_traits>

#include "bolext/error.hpp"
#include "bolext/field.hpp"
#include "bolext/kernels/modp.hpp"

namespace bolext {

/// Dense column of field elements. Small columns stay inline.
template <class F>
class Vector {
 public:
  using Field = F;
  using Scalar = typename F::Element;
  using Storage = boost::container::small_vector<Scalar, 8>;

  explicit Vector(const F& field, std::size_t n = 0) : field_(field), data_(n, field.zero()) {}
  Vector(const F& field, Storage data) : field_(field), data_(std::move(data)) {}

  static Vector unit(const F& field, std::size_t n, std::size_t k) {
    Vector v(field, n);
    v.data_[k] = field.one();
    return v;
  }

  const F& field() const { return field_; }
  std::size_t size() const { return data_.size(); }
  Scalar& operator[](std::size_t k) { return data_[k]; }
  const Scalar& operator[](std::size_t k) const { return data_[k]; }
  Scalar* data() { return data_.data(); }
  const Scalar* data() const { return data_.data(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }

  /// this += c * v
  void add_scaled(const Scalar& c, const Vector& v) {
    check_same(v);
    if (field_.is_zero(c)) return;
    if constexpr (std::is_same_v<F, PrimeField>) {
      if (data_.size() >= 8) {
        kernels::axpy_mod(data_.data(), v.data_.data(), data_.size(), c, field_.modulus());
        return;
      }
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!field_.is_zero(v.data_[k])) data_[k] = field_.add(data_[k], field_.mul(c, v.data_[k]));
    }
  }

  Vector& operator+=(const Vector& v) {
    check_same(v);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.add(data_[k], v.data_[k]);
    return *this;
  }
  Vector& operator-=(const Vector& v) {
    check_same(v);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.sub(data_[k], v.data_[k]);
    return *this;
  }
  Vector& scale(const Scalar& c) {
    for (auto& x : data_) x = field_.mul(c, x);
    return *this;
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator-(Vector a) {
    for (auto& x : a.data_) x = a.field_.neg(x);
    return a;
  }
  friend Vector operator*(const Scalar& c, Vector a) { return a.scale(c); }

  bool operator==(const Vector& o) const {
    if (!(field_ == o.field_) || data_.size() != o.data_.size()) return false;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!field_.equal(data_[k], o.data_[k])) return false;
    }
    return true;
  }

  Vector slice(std::size_t offset, std::size_t len) const {
    if (offset + len > data_.size()) throw UsageError("vector slice out of range");
    Vector out(field_, len);
    for (std::size_t k = 0; k < len; ++k) out.data_[k] = data_[offset + k];
    return out;
  }

  void append(const Vector& v) {
    for (const auto& x : v.data_) data_.push_back(x);
  }
  void push_back(const Scalar& x) { data_.push_back(x); }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (k) s += ", ";
      s += field_.format(data_[k]);
    }
    return s + ")";
  }

 private:
  void check_same(const Vector& v) const {
    if (v.data_.size() != data_.size()) throw UsageError("vector length mismatch");
  }

  F field_;
  Storage data_;
};

}  // namespace bolext
