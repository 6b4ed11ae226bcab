#include "bolext/kernels/modp.hpp"

#if defined(BOLEXT_HAVE_NEON_KERNELS)

#include <arm_neon.h>

namespace bolext::kernels::neon {

namespace {
// Two 64-bit lanes; each block keeps the lane sums below 2^63 for p < 2^26.
constexpr std::uint32_t kLaneLimit = 1u << 26;
constexpr std::size_t kDotBlock = 2048;
}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
              std::uint32_t p) {
  const uint32x2_t vf = vdup_n_u32(factor);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    uint64x2_t t = vmlal_u32(vmovl_u32(vld1_u32(dst + k)), vld1_u32(src + k), vf);
    dst[k] = static_cast<std::uint32_t>(vgetq_lane_u64(t, 0) % p);
    dst[k + 1] = static_cast<std::uint32_t>(vgetq_lane_u64(t, 1) % p);
  }
  scalar::axpy_mod(dst + k, src + k, n - k, factor, p);
}

std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint32_t p) {
  if (p >= kLaneLimit) return scalar::dot_mod(a, b, n, p);
  std::uint64_t total = 0;
  std::size_t k = 0;
  while (k + 2 <= n) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t block = 0;
    for (; k + 2 <= n && block < kDotBlock; k += 2, ++block) {
      acc = vmlal_u32(acc, vld1_u32(a + k), vld1_u32(b + k));
    }
    total = (total + vgetq_lane_u64(acc, 0) % p) % p;
    total = (total + vgetq_lane_u64(acc, 1) % p) % p;
  }
  total = (total + scalar::dot_mod(a + k, b + k, n - k, p)) % p;
  return static_cast<std::uint32_t>(total);
}

}  // namespace bolext::kernels::neon

#endif
