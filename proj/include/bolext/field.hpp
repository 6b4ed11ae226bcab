#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "bolext/error.hpp"

namespace bolext {

enum class FieldKind { kRationals, kPrimeField };

/// Runtime description of a coefficient field. Prime moduli must avoid 2 and 3.
struct FieldDescriptor {
  FieldKind kind = FieldKind::kRationals;
  std::uint32_t modulus = 0;

  static FieldDescriptor rationals() { return {}; }
  /// Throws UsageError unless p is a prime below 2^31 different from 2 and 3.
  static FieldDescriptor prime(std::int64_t p);

  bool is_prime_field() const { return kind == FieldKind::kPrimeField; }
  std::string name() const;
  bool operator==(const FieldDescriptor&) const = default;
};

bool is_prime(std::uint64_t n);

/// The field of rational numbers; elements are GMP rationals kept canonical.
class Rationals {
 public:
  using Element = mpq_class;

  FieldDescriptor descriptor() const { return FieldDescriptor::rationals(); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  /// "a/b" or "a", lowest terms with positive denominator.
  std::string format(const Element& a) const { return a.get_str(); }
  Element parse(std::string_view text) const;

  bool operator==(const Rationals&) const { return true; }
};

/// GF(p) with residues stored in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  FieldDescriptor descriptor() const { return {FieldKind::kPrimeField, p_}; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }

  std::string format(Element a) const { return std::to_string(a); }
  /// Accepts a decimal integer in [0, p).
  Element parse(std::string_view text) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace bolext
