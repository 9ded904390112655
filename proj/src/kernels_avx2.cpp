#if defined(__x86_64__) || defined(__i386__)

#include "tenadic/kernels.hpp"

#include <immintrin.h>

#include <cassert>
#include <vector>

namespace tenadic::kernel {

namespace detail {
std::uint64_t* column_scratch(std::size_t n);
void normalize_columns(const std::uint64_t* acc, std::uint32_t* out,
                       std::size_t n_out);
}  // namespace detail

// Row-by-row multiply-accumulate: broadcast a[i], widen four b limbs to
// 64-bit lanes, vpmuludq into the column sums.  Limbs are < 10^8 so every
// lane product fits comfortably below 2^54.
void mul_low_avx2(const std::uint32_t* a, std::size_t na,
                  const std::uint32_t* b, std::size_t nb,
                  std::uint32_t* out, std::size_t n_out) {
  assert(n_out <= kMaxLimbs && "column sums would overflow 64 bits");
  std::uint64_t* acc = detail::column_scratch(n_out);
  const std::size_t ia_end = na < n_out ? na : n_out;
  for (std::size_t i = 0; i < ia_end; ++i) {
    const std::uint64_t ai = a[i];
    if (ai == 0) continue;
    const std::size_t jmax = nb < n_out - i ? nb : n_out - i;
    std::uint64_t* col = acc + i;
    const __m256i va = _mm256_set1_epi64x(static_cast<long long>(ai));
    std::size_t j = 0;
    for (; j + 4 <= jmax; j += 4) {
      const __m128i b4 =
          _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + j));
      const __m256i vb = _mm256_cvtepu32_epi64(b4);
      const __m256i prod = _mm256_mul_epu32(va, vb);
      __m256i cur = _mm256_loadu_si256(reinterpret_cast<__m256i*>(col + j));
      cur = _mm256_add_epi64(cur, prod);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(col + j), cur);
    }
    for (; j < jmax; ++j) {
      col[j] += ai * b[j];
    }
  }
  detail::normalize_columns(acc, out, n_out);
}

}  // namespace tenadic::kernel

#endif  // x86
