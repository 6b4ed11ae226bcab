#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "bolext/vector.hpp"

namespace bolext {

/// Dense row-major matrix. As a linear map its columns are the images of the
/// source basis, so a map from an n-dimensional space to an m-dimensional one
/// is an m x n matrix.
template <class F>
class Matrix {
 public:
  using Field = F;
  using Scalar = typename F::Element;
  using Storage = boost::container::small_vector<Scalar, 16>;

  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = field.one();
    return m;
  }

  static Matrix from_columns(const F& field, std::size_t rows, const std::vector<Vector<F>>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
  }

  static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vector<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
  }

  /// Row-major list of integers, reduced into the field.
  static Matrix from_ints(const F& field, std::size_t rows, std::size_t cols,
                          std::initializer_list<long> values) {
    if (values.size() != rows * cols) throw UsageError("matrix literal has wrong length");
    Matrix m(field, rows, cols);
    std::size_t k = 0;
    for (long v : values) m.data_[k++] = field.from_int(v);
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar* row_data(std::size_t r) { return data_.data() + r * cols_; }
  const Scalar* row_data(std::size_t r) const { return data_.data() + r * cols_; }

  Vector<F> row(std::size_t r) const {
    Vector<F> v(field_, cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
  }
  Vector<F> column(std::size_t c) const {
    Vector<F> v(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_row(std::size_t r, const Vector<F>& v) {
    if (v.size() != cols_) throw UsageError("row length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
  }
  void set_column(std::size_t c, const Vector<F>& v) {
    if (v.size() != rows_) throw UsageError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  /// Entries flattened row by row.
  Vector<F> flatten() const {
    Vector<F> v(field_, data_.size());
    for (std::size_t k = 0; k < data_.size(); ++k) v[k] = data_[k];
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }
  bool is_identity() const { return is_square() && *this == identity(field_, rows_); }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw UsageError("matrix block out of range");
    Matrix b(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw UsageError("matrix block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  Matrix& operator+=(const Matrix& o) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.add(data_[k], o.data_[k]);
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.sub(data_[k], o.data_[k]);
    return *this;
  }
  Matrix& scale(const Scalar& s) {
    for (auto& x : data_) x = field_.mul(s, x);
    return *this;
  }
  /// this += s * o
  void add_scaled(const Scalar& s, const Matrix& o) {
    check_shape(o);
    if (field_.is_zero(s)) return;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!field_.is_zero(o.data_[k])) data_[k] = field_.add(data_[k], field_.mul(s, o.data_[k]));
    }
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = a.field_.neg(x);
    return a;
  }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a.scale(s); }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw UsageError("matrix product shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = (*this)(r, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t c = 0; c < o.cols_; ++c) {
          const Scalar& b = o(k, c);
          if (!field_.is_zero(b)) out(r, c) = field_.add(out(r, c), field_.mul(a, b));
        }
      }
    }
    return out;
  }

  Vector<F> operator*(const Vector<F>& v) const {
    if (cols_ != v.size()) throw UsageError("matrix-vector shape mismatch");
    Vector<F> out(field_, rows_);
    if constexpr (std::is_same_v<F, PrimeField>) {
      if (cols_ >= 8) {
        for (std::size_t r = 0; r < rows_; ++r)
          out[r] = kernels::dot_mod(row_data(r), v.data(), cols_, field_.modulus());
        return out;
      }
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& x = v[c];
      if (field_.is_zero(x)) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Scalar& a = (*this)(r, c);
        if (!field_.is_zero(a)) out[r] = field_.add(out[r], field_.mul(a, x));
      }
    }
    return out;
  }

  bool operator==(const Matrix& o) const {
    if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!field_.equal(data_[k], o.data_[k])) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r) s += ", ";
      s += row(r).to_string();
    }
    return s + "]";
  }

 private:
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix shape mismatch");
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  Storage data_;
};

/// [a | b]
template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw UsageError("hstack row mismatch");
  Matrix<F> m(a.field(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.cols()) throw UsageError("vstack column mismatch");
  Matrix<F> m(a.field(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

}  // namespace bolext
