#pragma once

#include <cstddef>
#include <cstdint>

namespace tenadic::kernel {

// Digit vectors are little-endian limbs in base 10^8, so one 32-bit limb
// holds eight decimal digits and a 64-bit column sum can absorb kMaxLimbs
// products of (10^8-1)^2 without overflow.
inline constexpr std::uint32_t kLimbBase = 100'000'000u;
inline constexpr int kLimbDigits = 8;
inline constexpr std::size_t kMaxLimbs = 1536;  // 12288 decimal digits

// out[0..n_out) = (a * b) mod (10^8)^n_out.  Aliasing with a or b is allowed.
using MulLowFn = void (*)(const std::uint32_t* a, std::size_t na,
                          const std::uint32_t* b, std::size_t nb,
                          std::uint32_t* out, std::size_t n_out);

void mul_low_scalar(const std::uint32_t* a, std::size_t na,
                    const std::uint32_t* b, std::size_t nb,
                    std::uint32_t* out, std::size_t n_out);

#if defined(__x86_64__) || defined(__i386__)
void mul_low_avx2(const std::uint32_t* a, std::size_t na,
                  const std::uint32_t* b, std::size_t nb,
                  std::uint32_t* out, std::size_t n_out);
#endif

enum class Simd { kScalar, kAvx2 };

const char* name(Simd s);
bool supported(Simd s);
Simd detect();              // best variant the CPU supports
Simd active();
bool select(Simd s);        // false (and no change) if unsupported

// Dispatches through the active kernel.
void mul_low(const std::uint32_t* a, std::size_t na,
             const std::uint32_t* b, std::size_t nb,
             std::uint32_t* out, std::size_t n_out);

}  // namespace tenadic::kernel
