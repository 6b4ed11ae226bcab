#include "bolext/field.hpp"

#include <charconv>
#include <string>

namespace bolext {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime(std::int64_t p) {
  if (p == 2 || p == 3) throw UsageError("prime field characteristic must differ from 2 and 3, got " + std::to_string(p));
  if (p <= 1 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p)))
    throw UsageError("field modulus must be a prime below 2^31, got " + std::to_string(p));
  return {FieldKind::kPrimeField, static_cast<std::uint32_t>(p)};
}

std::string FieldDescriptor::name() const {
  if (kind == FieldKind::kRationals) return "Q";
  return "GF(" + std::to_string(modulus) + ")";
}

Rationals::Element Rationals::inv(const Element& a) const {
  if (sgn(a) == 0) throw UsageError("division by zero in Q");
  return Element(1) / a;
}

Rationals::Element Rationals::parse(std::string_view text) const {
  std::string s(text);
  auto valid_int = [](std::string_view t, bool allow_sign) {
    std::size_t k = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) k = 1;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k) {
      if (t[k] < '0' || t[k] > '9') return false;
    }
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s, true)) throw ParseError("not a rational number: \"" + s + "\"");
  } else {
    if (!valid_int(std::string_view(s).substr(0, slash), true) ||
        !valid_int(std::string_view(s).substr(slash + 1), false))
      throw ParseError("not a rational number: \"" + s + "\"");
  }
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Element q;
  if (q.set_str(s, 10) != 0) throw ParseError("not a rational number: \"" + s + "\"");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) { FieldDescriptor::prime(p); }

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw UsageError("division by zero in GF(" + std::to_string(p_) + ")");
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

PrimeField::Element PrimeField::parse(std::string_view text) const {
  std::uint64_t v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw ParseError("not a residue: \"" + std::string(text) + "\"");
  if (v >= p_) throw ParseError("residue " + std::string(text) + " is not reduced modulo " + std::to_string(p_));
  return static_cast<Element>(v);
}

}  // namespace bolext
