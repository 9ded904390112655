#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "tenadic/kernels.hpp"

using tenadic::kernel::kLimbBase;
using tenadic::kernel::mul_low;
using tenadic::kernel::mul_low_scalar;
using tenadic::kernel::Simd;

namespace {

// Longhand reference with 128-bit columns, independent of the shipped
// kernels' accumulation strategy.
std::vector<std::uint32_t> mul_low_reference(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
    std::size_t n_out) {
  std::vector<unsigned __int128> acc(n_out, 0);
  for (std::size_t i = 0; i < a.size() && i < n_out; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < n_out; ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    }
  }
  std::vector<std::uint32_t> out(n_out);
  unsigned __int128 carry = 0;
  for (std::size_t t = 0; t < n_out; ++t) {
    const unsigned __int128 v = acc[t] + carry;
    out[t] = static_cast<std::uint32_t>(v % kLimbBase);
    carry = v / kLimbBase;
  }
  return out;
}

std::vector<std::uint32_t> random_limbs(std::mt19937_64& rng,
                                        std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> dist(0, kLimbBase - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar kernel against the 128-bit reference") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<std::size_t> size_dist(1, 80);
    const auto a = random_limbs(rng, size_dist(rng));
    const auto b = random_limbs(rng, size_dist(rng));
    const std::size_t n_out = size_dist(rng);
    std::vector<std::uint32_t> got(n_out);
    mul_low_scalar(a.data(), a.size(), b.data(), b.size(), got.data(), n_out);
    CHECK(got == mul_low_reference(a, b, n_out));
  }
}

TEST_CASE("scalar kernel small cases") {
  // 99999999^2 = 9999999800000001
  std::vector<std::uint32_t> a{99999999u};
  std::vector<std::uint32_t> out(2);
  mul_low_scalar(a.data(), 1, a.data(), 1, out.data(), 2);
  CHECK(out[0] == 1u);
  CHECK(out[1] == 99999998u);

  // Truncation keeps only the low limb.
  std::vector<std::uint32_t> narrow(1);
  mul_low_scalar(a.data(), 1, a.data(), 1, narrow.data(), 1);
  CHECK(narrow[0] == 1u);
}

TEST_CASE("kernel output aliases an input safely") {
  std::mt19937_64 rng(11);
  auto a = random_limbs(rng, 40);
  const auto b = random_limbs(rng, 40);
  const auto expect = mul_low_reference(a, b, 40);
  mul_low_scalar(a.data(), a.size(), b.data(), b.size(), a.data(), a.size());
  CHECK(a == expect);
}

TEST_CASE("avx2 kernel matches scalar exactly") {
  if (!tenadic::kernel::supported(Simd::kAvx2)) {
    MESSAGE("avx2 unavailable on this host; skipping");
    return;
  }
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<std::size_t> size_dist(1, 700);
    const auto a = random_limbs(rng, size_dist(rng));
    const auto b = random_limbs(rng, size_dist(rng));
    const std::size_t n_out = size_dist(rng);
    std::vector<std::uint32_t> scalar_out(n_out), avx2_out(n_out);
    mul_low_scalar(a.data(), a.size(), b.data(), b.size(), scalar_out.data(),
                   n_out);
#if defined(__x86_64__) || defined(__i386__)
    tenadic::kernel::mul_low_avx2(a.data(), a.size(), b.data(), b.size(),
                                  avx2_out.data(), n_out);
#endif
    CHECK(scalar_out == avx2_out);
  }
}

TEST_CASE("kernel selection") {
  const Simd before = tenadic::kernel::active();
  CHECK(tenadic::kernel::select(Simd::kScalar));
  CHECK(tenadic::kernel::active() == Simd::kScalar);
  std::vector<std::uint32_t> a{12345678u, 7u};
  std::vector<std::uint32_t> out(2);
  mul_low(a.data(), 2, a.data(), 2, out.data(), 2);
  const auto expect = mul_low_reference(a, a, 2);
  CHECK(out == expect);
  CHECK(tenadic::kernel::select(tenadic::kernel::detect()));
  tenadic::kernel::select(before);
}

TEST_CASE("max size columns stay below 2^64") {
  // Worst case: kMaxLimbs saturated limbs; the middle column accumulates
  // kMaxLimbs products.  A correct result here certifies the headroom.
  const std::size_t n = tenadic::kernel::kMaxLimbs;
  std::vector<std::uint32_t> a(n, kLimbBase - 1);
  std::vector<std::uint32_t> got(n);
  mul_low_scalar(a.data(), n, a.data(), n, got.data(), n);
  CHECK(got == mul_low_reference(a, a, n));
}
