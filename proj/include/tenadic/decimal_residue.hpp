#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tenadic/bigint.hpp"
#include "tenadic/kernels.hpp"

namespace tenadic {

/// A natural number known modulo 10^precision: the low `precision` decimal
/// digits of some larger value (here always a power of two).  Stored as
/// little-endian base-10^8 limbs so single-digit reads and truncation are
/// cheap at any size.
class DecimalResidue {
 public:
  DecimalResidue() = default;

  static DecimalResidue zero(int precision);
  static DecimalResidue from_value(std::uint64_t value, int precision);
  static DecimalResidue from_big(const BigUint& value, int precision);
  // Digits most-significant first; shorter strings are zero-extended.
  static DecimalResidue from_digits(std::string_view digits, int precision);

  int precision() const { return precision_; }
  bool valid() const { return precision_ >= 1; }

  // Decimal digit at the given position (position 0 = units).
  int digit(int position) const;

  std::uint64_t low_u64(int ndigits) const;  // ndigits <= 19
  BigUint to_big() const;

  DecimalResidue truncated(int precision) const;  // precision <= current
  DecimalResidue extended(int precision) const;   // precision >= current

  // (*this * rhs) mod 10^precision; both operands must share a precision.
  DecimalResidue& operator*=(const DecimalResidue& rhs);
  friend DecimalResidue operator*(DecimalResidue lhs,
                                  const DecimalResidue& rhs) {
    lhs *= rhs;
    return lhs;
  }

  DecimalResidue pow_u64(std::uint64_t e) const;  // modular power, same base

  // Exactly `precision` characters, most-significant first, zero padded.
  std::string digits() const;
  // Minimal decimal rendering of the value.
  std::string str() const;

  friend bool operator==(const DecimalResidue&,
                         const DecimalResidue&) = default;

 private:
  static std::size_t limbs_for(int precision) {
    return (static_cast<std::size_t>(precision) + kernel::kLimbDigits - 1) /
           kernel::kLimbDigits;
  }
  void reduce_top();

  int precision_ = 0;
  std::vector<std::uint32_t> limbs_;
};

}  // namespace tenadic
