#pragma once

#include <array>
#include <cstdint>

#include "tenadic/bigint.hpp"
#include "tenadic/decimal_residue.hpp"

namespace tenadic {

/// A residue class of exponents modulo 4·5^(level−1).  Knowing an exponent to
/// this modulus pins 2^p mod 10^level exactly (for p ≥ level), and nothing
/// finer: distinct classes at a level give distinct trailing digits.
class ExponentClass {
 public:
  ExponentClass(BigUint residue, int level);

  const BigUint& residue() const { return residue_; }
  int level() const { return level_; }
  BigUint modulus() const;  // 4 * 5^(level-1), never stored

  // Refine to level+1 by stepping the exponent j times, j in 0..4.
  ExponentClass lifted(int j) const;

  friend bool operator==(const ExponentClass&, const ExponentClass&) = default;

 private:
  BigUint residue_;
  int level_;
};

// Enables the expensive cross-checks on candidate_digits inputs.
void set_debug_checks(bool on);
bool debug_checks();

// 2^p mod 10^k.  Requires p >= k so the residue carries class semantics
// (2^p ≡ 0 mod 2^k); lift the exponent via min_representative first if not.
DecimalResidue pow2_mod(std::uint64_t p, int k);
DecimalResidue pow2_mod(const BigUint& p, int k);

// 2^p mod 10^k for any p (exact small-number evaluation; p capped at 2^20).
DecimalResidue exact_pow2(std::uint64_t p, int k);

// 2^(4·5^(k−2)) mod 10^working_precision, k >= 2.  Multiplying a residue of
// 2^p by this factor realizes p → p + 4·5^(k−2): the trailing k−1 digits are
// unchanged and the digit at position k−1 steps through its parity class.
DecimalResidue step_factor(int k, int working_precision);

// 2^i ≡ 2^j (mod 10^m)  ⇔  i ≡ j (mod 4·5^(m−1)), since 2 is a primitive
// root mod 5^m and both sides vanish mod 2^m.  Requires i >= j >= m >= 1.
bool same_power_residue(std::uint64_t i, std::uint64_t j, int m);
bool same_power_residue(const BigUint& i, const BigUint& j, int m);

struct CandidateDigit {
  int j;      // lift index, 0..4
  int digit;  // decimal digit at the probed position
};

// Digits at position m of 2^(p + 4j·5^(m−1)) mod 10^(m+1) for j = 0..4, where
// `base` is 2^p mod 10^(m+1) and p lies in `cls` (level m, exponent > m).
// The five digits are distinct and share one parity.
std::array<CandidateDigit, 5> candidate_digits(const DecimalResidue& base,
                                               const ExponentClass& cls,
                                               int m);

ExponentClass lift_class(const ExponentClass& cls, int j);

// Least exponent in the class exceeding `bound`.
BigUint min_representative(const ExponentClass& cls, const BigUint& bound);

}  // namespace tenadic
