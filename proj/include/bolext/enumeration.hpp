#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "bolext/matrix.hpp"

namespace bolext {

/// Caps on brute-force searches. Exceeding a cap raises UnsupportedEnumeration
/// (or yields an undecided verdict); results are never silently truncated.
struct SearchBounds {
  std::uint64_t max_candidates = 10'000'000;
  std::size_t max_automorphism_dim = 3;
};

/// base^exp if it does not exceed limit.
std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t exp,
                                           std::uint64_t limit = UINT64_MAX);

/// All vectors of GF(p)^dim in lexicographic order of residues (first coordinate
/// most significant). Indexable, so ranges can be split between workers.
class VectorEnumeration {
 public:
  VectorEnumeration(const PrimeField& field, std::size_t dim);
  /// Throws UnsupportedEnumeration for the rationals.
  static VectorEnumeration over(const FieldDescriptor& field, std::size_t dim);

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::uint64_t size() const { return size_; }

  Vector<PrimeField> at(std::uint64_t index) const;
  /// Writes the index-th vector into out (which must have length dim).
  void decode(std::uint64_t index, Vector<PrimeField>& out) const;
  /// Advances v to its lexicographic successor; returns false after the last vector.
  bool next(Vector<PrimeField>& v) const;

  class Iterator {
   public:
    Iterator(const VectorEnumeration* e, std::uint64_t i) : e_(e), i_(i) {}
    Vector<PrimeField> operator*() const { return e_->at(i_); }
    Iterator& operator++() {
      ++i_;
      return *this;
    }
    bool operator!=(const Iterator& o) const { return i_ != o.i_; }

   private:
    const VectorEnumeration* e_;
    std::uint64_t i_;
  };
  Iterator begin() const { return {this, 0}; }
  Iterator end() const { return {this, size_}; }

 private:
  PrimeField field_;
  std::size_t dim_;
  std::uint64_t size_;
};

/// Decodes index into a rows x cols matrix whose row-major entries are the
/// digits of index in base p (first entry most significant).
Matrix<PrimeField> decode_matrix(const PrimeField& field, std::size_t rows, std::size_t cols,
                                 std::uint64_t index);

}  // namespace bolext
