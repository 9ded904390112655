#include "tenadic/residue_core.hpp"

#include <atomic>
#include <stdexcept>

namespace tenadic {

namespace {

std::atomic<bool> g_debug_checks{false};

void check_level(int level) {
  if (level < 1) throw std::domain_error("class level must be >= 1");
}

}  // namespace

void set_debug_checks(bool on) { g_debug_checks.store(on); }
bool debug_checks() { return g_debug_checks.load(); }

ExponentClass::ExponentClass(BigUint residue, int level)
    : residue_(std::move(residue)), level_(level) {
  check_level(level_);
  if (residue_ < 0 || residue_ >= modulus()) {
    throw std::domain_error("class residue must lie in [0, 4*5^(level-1))");
  }
}

BigUint ExponentClass::modulus() const { return 4 * pow5(level_ - 1); }

ExponentClass ExponentClass::lifted(int j) const {
  if (j < 0 || j > 4) throw std::domain_error("lift index must be in 0..4");
  return ExponentClass(residue_ + j * modulus(), level_ + 1);
}

DecimalResidue pow2_mod(std::uint64_t p, int k) {
  return pow2_mod(BigUint(p), k);
}

DecimalResidue pow2_mod(const BigUint& p, int k) {
  if (k < 1) throw std::domain_error("pow2_mod precision must be >= 1");
  if (p < k) {
    throw std::domain_error(
        "pow2_mod requires p >= k; lift the representative first");
  }
  DecimalResidue result = DecimalResidue::from_value(1, k);
  DecimalResidue base = DecimalResidue::from_value(2, k);
  const int bits = static_cast<int>(boost::multiprecision::msb(p));
  for (int i = bits; i >= 0; --i) {
    result *= result;
    if (boost::multiprecision::bit_test(p, static_cast<unsigned>(i))) {
      result *= base;
    }
  }
  return result;
}

DecimalResidue exact_pow2(std::uint64_t p, int k) {
  if (k < 1) throw std::domain_error("exact_pow2 precision must be >= 1");
  if (p > (1u << 20)) {
    throw std::domain_error("exact_pow2 exponent cap exceeded");
  }
  return DecimalResidue::from_big(BigUint(1) << p, k);
}

DecimalResidue step_factor(int k, int working_precision) {
  if (k < 2) throw std::domain_error("step_factor requires k >= 2");
  if (working_precision < k) {
    throw std::domain_error("step_factor requires working_precision >= k");
  }
  const BigUint exponent = 4 * pow5(k - 2);
  if (exponent < working_precision) {
    return exact_pow2(exponent.convert_to<std::uint64_t>(), working_precision);
  }
  return pow2_mod(exponent, working_precision);
}

bool same_power_residue(std::uint64_t i, std::uint64_t j, int m) {
  return same_power_residue(BigUint(i), BigUint(j), m);
}

bool same_power_residue(const BigUint& i, const BigUint& j, int m) {
  if (m < 1 || j < m || i < j) {
    throw std::domain_error("same_power_residue requires i >= j >= m >= 1");
  }
  return (i - j) % (4 * pow5(m - 1)) == 0;
}

std::array<CandidateDigit, 5> candidate_digits(const DecimalResidue& base,
                                               const ExponentClass& cls,
                                               int m) {
  if (m != cls.level()) {
    throw std::domain_error("candidate_digits: class level must equal m");
  }
  if (base.precision() != m + 1) {
    throw std::domain_error("candidate_digits: base precision must be m+1");
  }
  if (debug_checks()) {
    // The class pins the trailing m digits of every member above the level.
    const BigUint rep = min_representative(cls, BigUint(m));
    const DecimalResidue pinned = pow2_mod(rep, m);
    if (base.truncated(m) != pinned) {
      throw std::domain_error(
          "candidate_digits: base residue inconsistent with exponent class");
    }
  }

  const DecimalResidue f = step_factor(m + 1, m + 1);
  std::array<CandidateDigit, 5> out{};
  DecimalResidue x = base;
  for (int j = 0; j < 5; ++j) {
    if (j > 0) x *= f;
    out[static_cast<std::size_t>(j)] = CandidateDigit{j, x.digit(m)};
  }

  // Five distinct digits of one parity, always.
  const int parity = out[0].digit % 2;
  unsigned seen = 0;
  for (const auto& c : out) {
    if (c.digit % 2 != parity || (seen & (1u << c.digit)) != 0) {
      throw std::logic_error("candidate digits violate the parity lemma");
    }
    seen |= 1u << c.digit;
  }
  return out;
}

ExponentClass lift_class(const ExponentClass& cls, int j) {
  return cls.lifted(j);
}

BigUint min_representative(const ExponentClass& cls, const BigUint& bound) {
  const BigUint m = cls.modulus();
  BigUint p = cls.residue();
  if (p <= bound) {
    const BigUint k = (bound + 1 - p + m - 1) / m;
    p += k * m;
  }
  return p;
}

}  // namespace tenadic
