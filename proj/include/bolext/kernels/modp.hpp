#pragma once

// Mod-p vector kernels used by the prime-field linear algebra. A portable
// scalar reference implementation is always available; AVX2 and NEON
// variants are selected at runtime when the CPU supports them.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace bolext::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
std::vector<Isa> supported_isas();
/// Widest supported variant on this machine.
Isa best_isa();
Isa active_isa();
/// Pin dispatch to one variant (tests use this); throws UsageError if unsupported.
void force_isa(Isa isa);
void reset_isa();

/// dst[k] = (dst[k] + factor * src[k]) mod p, inputs reduced, p < 2^31.
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t factor, std::uint32_t p);
/// sum_k a[k] * b[k] mod p, inputs reduced, p < 2^31.
std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b,
                      std::size_t n, std::uint32_t p);

namespace scalar {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t factor, std::uint32_t p);
std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b,
                      std::size_t n, std::uint32_t p);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define BOLEXT_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t factor, std::uint32_t p);
std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b,
                      std::size_t n, std::uint32_t p);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define BOLEXT_HAVE_NEON_KERNELS 1
namespace neon {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t factor, std::uint32_t p);
std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b,
                      std::size_t n, std::uint32_t p);
}  // namespace neon
#endif

}  // namespace bolext::kernels
