#include "bolext/kernels/modp.hpp"

#if defined(BOLEXT_HAVE_AVX2_KERNELS)

#include <immintrin.h>

namespace bolext::kernels::avx2 {

namespace {
// Products of residues stay below 2^52, so doubles hold them exactly.
constexpr std::uint32_t kDoubleLimit = 1u << 26;
// Partial sums of 2^11 such products fit in 63 bits.
constexpr std::size_t kDotBlock = 2048;
}  // namespace

__attribute__((target("avx2,fma"))) void axpy_mod(std::uint32_t* dst, const std::uint32_t* src,
                                                   std::size_t n, std::uint32_t factor,
                                                   std::uint32_t p) {
  if (p >= kDoubleLimit) {
    scalar::axpy_mod(dst, src, n, factor, p);
    return;
  }
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vf = _mm256_set1_pd(static_cast<double>(factor));
  const __m256d zero = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m128i d = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + k));
    __m128i s = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + k));
    __m256d t = _mm256_fmadd_pd(vf, _mm256_cvtepi32_pd(s), _mm256_cvtepi32_pd(d));
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinv));
    __m256d r = _mm256_fnmadd_pd(q, vp, t);
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + k), _mm256_cvtpd_epi32(r));
  }
  scalar::axpy_mod(dst + k, src + k, n - k, factor, p);
}

__attribute__((target("avx2,fma"))) std::uint32_t dot_mod(const std::uint32_t* a,
                                                           const std::uint32_t* b, std::size_t n,
                                                           std::uint32_t p) {
  if (p >= kDoubleLimit) return scalar::dot_mod(a, b, n, p);
  std::uint64_t total = 0;
  alignas(32) std::uint64_t lanes[4];
  std::size_t k = 0;
  while (k + 4 <= n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t block = 0;
    for (; k + 4 <= n && block < kDotBlock; k += 4, ++block) {
      __m256i va = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + k)));
      __m256i vb = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + k)));
      acc = _mm256_add_epi64(acc, _mm256_mul_epu32(va, vb));
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (auto lane : lanes) total = (total + lane % p) % p;
  }
  total = (total + scalar::dot_mod(a + k, b + k, n - k, p)) % p;
  return static_cast<std::uint32_t>(total);
}

}  // namespace bolext::kernels::avx2

#endif
