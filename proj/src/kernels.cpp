#include "tenadic/kernels.hpp"

namespace tenadic::kernel {

namespace {

MulLowFn resolve(Simd s) {
#if defined(__x86_64__) || defined(__i386__)
  if (s == Simd::kAvx2) return mul_low_avx2;
#endif
  (void)s;
  return mul_low_scalar;
}

Simd g_active = detect();
MulLowFn g_mul_low = resolve(g_active);

}  // namespace

const char* name(Simd s) {
  switch (s) {
    case Simd::kAvx2:
      return "avx2";
    case Simd::kScalar:
      return "scalar";
  }
  return "?";
}

bool supported(Simd s) {
  if (s == Simd::kScalar) return true;
#if defined(__x86_64__) || defined(__i386__)
  if (s == Simd::kAvx2) return __builtin_cpu_supports("avx2") != 0;
#endif
  return false;
}

Simd detect() {
  if (supported(Simd::kAvx2)) return Simd::kAvx2;
  return Simd::kScalar;
}

Simd active() { return g_active; }

bool select(Simd s) {
  if (!supported(s)) return false;
  g_active = s;
  g_mul_low = resolve(s);
  return true;
}

void mul_low(const std::uint32_t* a, std::size_t na, const std::uint32_t* b,
             std::size_t nb, std::uint32_t* out, std::size_t n_out) {
  g_mul_low(a, na, b, nb, out, n_out);
}

}  // namespace tenadic::kernel
