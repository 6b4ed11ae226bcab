#include <atomic>

#include "bolext/error.hpp"
#include "bolext/kernels/modp.hpp"

namespace bolext::kernels {

namespace {

using AxpyFn = void (*)(std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t);
using DotFn = std::uint32_t (*)(const std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t);

struct Table {
  AxpyFn axpy;
  DotFn dot;
};

Table table_for(Isa isa) {
  switch (isa) {
#if defined(BOLEXT_HAVE_AVX2_KERNELS)
    case Isa::kAvx2:
      return {&avx2::axpy_mod, &avx2::dot_mod};
#endif
#if defined(BOLEXT_HAVE_NEON_KERNELS)
    case Isa::kNeon:
      return {&neon::axpy_mod, &neon::dot_mod};
#endif
    default:
      return {&scalar::axpy_mod, &scalar::dot_mod};
  }
}

std::atomic<AxpyFn> g_axpy{nullptr};
std::atomic<DotFn> g_dot{nullptr};
std::atomic<int> g_active{-1};

void install(Isa isa) {
  Table t = table_for(isa);
  g_axpy.store(t.axpy, std::memory_order_relaxed);
  g_dot.store(t.dot, std::memory_order_relaxed);
  g_active.store(static_cast<int>(isa), std::memory_order_release);
}

void ensure_installed() {
  if (g_active.load(std::memory_order_acquire) < 0) install(best_isa());
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(BOLEXT_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(BOLEXT_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
    if (isa_supported(isa)) out.push_back(isa);
  }
  return out;
}

Isa best_isa() {
  if (isa_supported(Isa::kAvx2)) return Isa::kAvx2;
  if (isa_supported(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

Isa active_isa() {
  ensure_installed();
  return static_cast<Isa>(g_active.load(std::memory_order_acquire));
}

void force_isa(Isa isa) {
  if (!isa_supported(isa)) throw UsageError("kernel variant not supported on this CPU: " + std::string(isa_name(isa)));
  install(isa);
}

void reset_isa() { install(best_isa()); }

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
              std::uint32_t p) {
  ensure_installed();
  g_axpy.load(std::memory_order_relaxed)(dst, src, n, factor, p);
}

std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint32_t p) {
  ensure_installed();
  return g_dot.load(std::memory_order_relaxed)(a, b, n, p);
}

}  // namespace bolext::kernels
