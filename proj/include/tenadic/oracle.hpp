#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tenadic/decimal_residue.hpp"

namespace tenadic::oracle {

struct OracleCheck {
  std::string name;
  std::string params;
  bool pass = false;
  std::string witness;  // concrete exponents/digits behind the verdict
};

struct OracleReport {
  std::string scope;
  std::vector<OracleCheck> checks;
  bool all_pass() const;
};

inline constexpr std::uint64_t kDefaultBound = 100000;

// Ground truth: 2^n evaluated as a full integer, truncated to k digits.
DecimalResidue brute_trailing_digits(std::uint64_t n, int k,
                                     std::uint64_t bound = kDefaultBound);

// Residue-engine trailing digits equal full-integer trailing digits for
// every n in [k, bound], k in [1, max_k].
OracleCheck check_pow2_equivalence(std::uint64_t bound = kDefaultBound,
                                   int max_k = 8);

struct ClassScanResult {
  OracleCheck check;
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> classes;  // residues mod 4·5^(m−1)
};

// Scan full integers for exponents n in [m, bound] whose trailing m digits
// equal `pattern`, and confirm they form whole residue classes mod
// 4·5^(m−1).
ClassScanResult check_exhaustive_class(const std::string& pattern, int m,
                                       std::uint64_t bound = kDefaultBound);

// Parity fan on full integers: for random (i, m) with m <= max_m, the
// digits at position m of 2^(i + 4j·5^(m−1)) are five distinct same-parity
// values.
OracleCheck check_parity_fan_samples(int samples = 100, int max_m = 6,
                                     std::uint64_t seed = 0x746e616461ULL);

// Step factors against full integers for k in [2, max_k].
OracleCheck check_step_factor(int max_k = 8);

// Exhaustive / full-integer confirmation of the first `depth` greedy
// choices from p1 = 3, including the frontier-13 representative.
std::vector<OracleCheck> check_greedy_prefix(int depth = 4,
                                             std::uint64_t bound =
                                                 kDefaultBound);

struct SuiteConfig {
  std::uint64_t bound = kDefaultBound;
  int max_k = 8;
  int prefix_depth = 4;
  int parity_samples = 100;
  std::uint64_t seed = 0x746e616461ULL;
};

OracleReport default_suite(const SuiteConfig& config = {});

}  // namespace tenadic::oracle
