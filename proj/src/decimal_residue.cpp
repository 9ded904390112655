#include "tenadic/decimal_residue.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tenadic {

namespace {

constexpr std::uint32_t kPow10[9] = {1,      10,      100,      1000, 10000,
                                     100000, 1000000, 10000000, 100000000};

void check_precision(int precision) {
  if (precision < 1) {
    throw std::domain_error("DecimalResidue precision must be >= 1");
  }
  if (static_cast<std::size_t>(precision) >
      kernel::kMaxLimbs * kernel::kLimbDigits) {
    throw std::domain_error("DecimalResidue precision exceeds supported size");
  }
}

}  // namespace

void DecimalResidue::reduce_top() {
  const int top_digits = precision_ - (static_cast<int>(limbs_.size()) - 1) *
                                          kernel::kLimbDigits;
  if (top_digits < kernel::kLimbDigits) {
    limbs_.back() %= kPow10[top_digits];
  }
}

DecimalResidue DecimalResidue::zero(int precision) {
  check_precision(precision);
  DecimalResidue r;
  r.precision_ = precision;
  r.limbs_.assign(limbs_for(precision), 0);
  return r;
}

DecimalResidue DecimalResidue::from_value(std::uint64_t value, int precision) {
  DecimalResidue r = zero(precision);
  for (std::size_t i = 0; i < r.limbs_.size() && value != 0; ++i) {
    r.limbs_[i] = static_cast<std::uint32_t>(value % kernel::kLimbBase);
    value /= kernel::kLimbBase;
  }
  r.reduce_top();
  return r;
}

DecimalResidue DecimalResidue::from_big(const BigUint& value, int precision) {
  DecimalResidue r = zero(precision);
  BigUint v = value;
  for (std::size_t i = 0; i < r.limbs_.size() && v != 0; ++i) {
    r.limbs_[i] = static_cast<std::uint32_t>(v % kernel::kLimbBase);
    v /= kernel::kLimbBase;
  }
  r.reduce_top();
  return r;
}

DecimalResidue DecimalResidue::from_digits(std::string_view digits,
                                           int precision) {
  DecimalResidue r = zero(precision);
  int pos = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it, ++pos) {
    if (*it < '0' || *it > '9') {
      throw std::invalid_argument("non-digit character in residue string");
    }
    if (pos >= precision) break;
    r.limbs_[pos / kernel::kLimbDigits] +=
        static_cast<std::uint32_t>(*it - '0') *
        kPow10[pos % kernel::kLimbDigits];
  }
  return r;
}

int DecimalResidue::digit(int position) const {
  if (position < 0 || position >= precision_) {
    throw std::out_of_range("digit position outside residue precision");
  }
  const std::uint32_t limb =
      limbs_[static_cast<std::size_t>(position) / kernel::kLimbDigits];
  return static_cast<int>(limb / kPow10[position % kernel::kLimbDigits] % 10);
}

std::uint64_t DecimalResidue::low_u64(int ndigits) const {
  assert(ndigits >= 0 && ndigits <= 19);
  std::uint64_t v = 0;
  std::uint64_t scale = 1;
  int remaining = std::min(ndigits, precision_);
  for (std::size_t i = 0; remaining > 0; ++i) {
    const int take = std::min(remaining, kernel::kLimbDigits);
    v += scale * (limbs_[i] % kPow10[take]);
    scale *= kPow10[take];
    remaining -= take;
  }
  return v;
}

BigUint DecimalResidue::to_big() const {
  BigUint v = 0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
    v *= kernel::kLimbBase;
    v += *it;
  }
  return v;
}

DecimalResidue DecimalResidue::truncated(int precision) const {
  if (precision > precision_) {
    throw std::domain_error("truncated() cannot widen a residue");
  }
  DecimalResidue r = zero(precision);
  std::copy_n(limbs_.begin(), r.limbs_.size(), r.limbs_.begin());
  r.reduce_top();
  return r;
}

DecimalResidue DecimalResidue::extended(int precision) const {
  if (precision < precision_) {
    throw std::domain_error("extended() cannot narrow a residue");
  }
  DecimalResidue r = zero(precision);
  std::copy(limbs_.begin(), limbs_.end(), r.limbs_.begin());
  return r;
}

DecimalResidue& DecimalResidue::operator*=(const DecimalResidue& rhs) {
  if (precision_ != rhs.precision_) {
    throw std::domain_error("residue product requires matching precision");
  }
  kernel::mul_low(limbs_.data(), limbs_.size(), rhs.limbs_.data(),
                  rhs.limbs_.size(), limbs_.data(), limbs_.size());
  reduce_top();
  return *this;
}

DecimalResidue DecimalResidue::pow_u64(std::uint64_t e) const {
  DecimalResidue result = from_value(1, precision_);
  DecimalResidue base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::string DecimalResidue::digits() const {
  std::string out(static_cast<std::size_t>(precision_), '0');
  for (int pos = 0; pos < precision_; ++pos) {
    out[static_cast<std::size_t>(precision_ - 1 - pos)] =
        static_cast<char>('0' + digit(pos));
  }
  return out;
}

std::string DecimalResidue::str() const {
  std::string padded = digits();
  const std::size_t first = padded.find_first_not_of('0');
  if (first == std::string::npos) return "0";
  return padded.substr(first);
}

}  // namespace tenadic
