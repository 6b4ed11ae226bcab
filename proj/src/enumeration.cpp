#include "bolext/enumeration.hpp"

#include <string>

namespace bolext {

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 0; k < exp; ++k) {
    if (base != 0 && r > limit / base) return std::nullopt;
    r *= base;
    if (r > limit) return std::nullopt;
  }
  return r;
}

VectorEnumeration::VectorEnumeration(const PrimeField& field, std::size_t dim) : field_(field), dim_(dim) {
  auto s = checked_power(field.modulus(), dim, std::uint64_t{1} << 62);
  if (!s) throw UnsupportedEnumeration("vector enumeration of GF(" + std::to_string(field.modulus()) + ")^" +
                                       std::to_string(dim) + " is too large");
  size_ = *s;
}

VectorEnumeration VectorEnumeration::over(const FieldDescriptor& field, std::size_t dim) {
  if (!field.is_prime_field()) throw UnsupportedEnumeration("cannot enumerate vectors over the rationals");
  return VectorEnumeration(PrimeField(field.modulus), dim);
}

void VectorEnumeration::decode(std::uint64_t index, Vector<PrimeField>& out) const {
  const std::uint32_t p = field_.modulus();
  for (std::size_t k = dim_; k-- > 0;) {
    out[k] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
}

Vector<PrimeField> VectorEnumeration::at(std::uint64_t index) const {
  if (index >= size_) throw UsageError("vector enumeration index out of range");
  Vector<PrimeField> v(field_, dim_);
  decode(index, v);
  return v;
}

bool VectorEnumeration::next(Vector<PrimeField>& v) const {
  const std::uint32_t p = field_.modulus();
  for (std::size_t k = dim_; k-- > 0;) {
    if (v[k] + 1 < p) {
      ++v[k];
      return true;
    }
    v[k] = 0;
  }
  return false;
}

Matrix<PrimeField> decode_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, std::uint64_t index) {
  Matrix<PrimeField> m(field, rows, cols);
  const std::uint32_t p = field.modulus();
  for (std::size_t k = rows * cols; k-- > 0;) {
    m(k / cols, k % cols) = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return m;
}

}  // namespace bolext
