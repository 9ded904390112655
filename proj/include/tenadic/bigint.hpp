#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace tenadic {

// Exponents and residue-class moduli grow to thousands of digits over a run;
// they are plain big integers, distinct from the limb-based trailing-digit
// representation in DecimalResidue.
using BigUint = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigUint pow5(int n) {
  return boost::multiprecision::pow(BigUint(5), static_cast<unsigned>(n));
}

inline BigUint pow10_big(int n) {
  return boost::multiprecision::pow(BigUint(10), static_cast<unsigned>(n));
}

inline std::string to_decimal(const BigUint& v) { return v.str(); }

}  // namespace tenadic
