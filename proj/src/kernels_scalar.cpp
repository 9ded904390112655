#include "tenadic/kernels.hpp"

#include <cassert>
#include <vector>

namespace tenadic::kernel {

namespace detail {

std::uint64_t* column_scratch(std::size_t n) {
  thread_local std::vector<std::uint64_t> acc;
  acc.assign(n, 0);
  return acc.data();
}

void normalize_columns(const std::uint64_t* acc, std::uint32_t* out,
                       std::size_t n_out) {
  std::uint64_t carry = 0;
  for (std::size_t t = 0; t < n_out; ++t) {
    const std::uint64_t v = acc[t] + carry;
    out[t] = static_cast<std::uint32_t>(v % kLimbBase);
    carry = v / kLimbBase;
  }
}

}  // namespace detail

void mul_low_scalar(const std::uint32_t* a, std::size_t na,
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
    for (std::size_t j = 0; j < jmax; ++j) {
      col[j] += ai * b[j];
    }
  }
  detail::normalize_columns(acc, out, n_out);
}

}  // namespace tenadic::kernel
