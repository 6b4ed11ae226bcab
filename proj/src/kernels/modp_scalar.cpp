#include "bolext/kernels/modp.hpp"

namespace bolext::kernels::scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
              std::uint32_t p) {
  for (std::size_t k = 0; k < n; ++k) {
    dst[k] = static_cast<std::uint32_t>((dst[k] + static_cast<std::uint64_t>(factor) * src[k]) % p);
  }
}

std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < n; ++k) {
    acc = (acc + static_cast<std::uint64_t>(a[k]) * b[k]) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace bolext::kernels::scalar
