#include "tenadic/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tenadic/greedy_engine.hpp"
#include "tenadic/residue_core.hpp"

namespace tenadic::oracle {

namespace {

BigUint full_pow2(std::uint64_t n) { return BigUint(1) << n; }

std::uint64_t trailing_u64(const BigUint& x, int digits) {
  return (x % pow10_big(digits)).convert_to<std::uint64_t>();
}

int digit_of(const BigUint& x, int position) {
  return ((x / pow10_big(position)) % 10).convert_to<int>();
}

std::string fmt_u64s(const std::vector<std::uint64_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ',';
    out << v[i];
  }
  return out.str();
}

}  // namespace

bool OracleReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const OracleCheck& c) { return c.pass; });
}

DecimalResidue brute_trailing_digits(std::uint64_t n, int k,
                                     std::uint64_t bound) {
  if (n > bound) throw std::domain_error("exponent exceeds the oracle bound");
  if (k < 1 || k > 64) throw std::domain_error("k must be in [1, 64]");
  return DecimalResidue::from_big(full_pow2(n), k);
}

OracleCheck check_pow2_equivalence(std::uint64_t bound, int max_k) {
  OracleCheck check;
  check.name = "pow2-vs-full-integers";
  check.params = "bound=" + std::to_string(bound) +
                 " max_k=" + std::to_string(max_k);
  if (max_k < 1 || max_k > 18) {
    throw std::domain_error("max_k must be in [1, 18]");
  }
  const BigUint cutoff = pow10_big(max_k);
  BigUint x = 1;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    x <<= 1;
    const std::uint64_t truth =
        (x % cutoff).convert_to<std::uint64_t>();
    std::uint64_t mod = 1;
    for (int k = 1; k <= max_k && static_cast<std::uint64_t>(k) <= n; ++k) {
      mod *= 10;
      const std::uint64_t expect = truth % mod;
      const std::uint64_t got = pow2_mod(n, k).low_u64(k);
      if (got != expect) {
        check.pass = false;
        check.witness = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                        " engine=" + std::to_string(got) +
                        " full=" + std::to_string(expect);
        return check;
      }
    }
  }
  check.pass = true;
  check.witness = "zero mismatches";
  return check;
}

ClassScanResult check_exhaustive_class(const std::string& pattern, int m,
                                       std::uint64_t bound) {
  if (m < 1 || m > 8) throw std::domain_error("class scan needs m in [1, 8]");
  if (static_cast<int>(pattern.size()) != m) {
    throw std::domain_error("pattern length must equal m");
  }
  ClassScanResult result;
  result.check.name = "trailing-pattern-class-scan";
  result.check.params = "pattern=" + pattern + " m=" + std::to_string(m) +
                        " bound=" + std::to_string(bound);
  std::uint64_t want = 0;
  for (char c : pattern) {
    if (c < '0' || c > '9') throw std::domain_error("pattern must be digits");
    want = want * 10 + static_cast<std::uint64_t>(c - '0');
  }
  std::uint64_t modulus = 4;
  for (int i = 1; i < m; ++i) modulus *= 5;
  result.modulus = modulus;

  std::set<std::uint64_t> matches;
  const BigUint cutoff = pow10_big(m);
  BigUint x = 1;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    x <<= 1;
    if (n >= static_cast<std::uint64_t>(m) && x % cutoff == want) {
      matches.insert(n);
    }
  }
  std::set<std::uint64_t> classes;
  for (std::uint64_t n : matches) classes.insert(n % modulus);
  result.classes.assign(classes.begin(), classes.end());

  // Every member of every matched class inside [m, bound] must match too.
  for (std::uint64_t r : result.classes) {
    std::uint64_t n = r;
    while (n < static_cast<std::uint64_t>(m)) n += modulus;
    for (; n <= bound; n += modulus) {
      if (!matches.contains(n)) {
        result.check.pass = false;
        result.check.witness =
            "class " + std::to_string(r) + " mod " + std::to_string(modulus) +
            " has non-matching member n=" + std::to_string(n);
        return result;
      }
    }
  }
  result.check.pass = true;
  result.check.witness = matches.empty()
                             ? "no matching exponents"
                             : "classes {" + fmt_u64s(result.classes) +
                                   "} mod " + std::to_string(modulus) + ", " +
                                   std::to_string(matches.size()) + " members";
  return result;
}

OracleCheck check_parity_fan_samples(int samples, int max_m, std::uint64_t seed) {
  OracleCheck check;
  check.name = "five-candidate-parity-echo";
  check.params = "samples=" + std::to_string(samples) +
                 " max_m=" + std::to_string(max_m) +
                 " seed=" + std::to_string(seed);
  if (max_m < 1 || max_m > 6) {
    throw std::domain_error("parity echo needs max_m in [1, 6]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> m_dist(1, max_m);
  for (int t = 0; t < samples; ++t) {
    const int m = m_dist(rng);
    std::uniform_int_distribution<std::uint64_t> i_dist(
        static_cast<std::uint64_t>(m) + 1, 10000);
    const std::uint64_t i = i_dist(rng);
    std::uint64_t step = 4;
    for (int q = 1; q < m; ++q) step *= 5;
    int parity = -1;
    unsigned seen = 0;
    for (int j = 0; j < 5; ++j) {
      const int d =
          digit_of(full_pow2(i + static_cast<std::uint64_t>(j) * step), m);
      if (parity < 0) parity = d % 2;
      if (d % 2 != parity || (seen & (1u << d)) != 0) {
        check.pass = false;
        check.witness = "i=" + std::to_string(i) + " m=" + std::to_string(m) +
                        " j=" + std::to_string(j) +
                        " digit=" + std::to_string(d);
        return check;
      }
      seen |= 1u << d;
    }
  }
  check.pass = true;
  check.witness = std::to_string(samples) + " samples, all 5-distinct";
  return check;
}

OracleCheck check_step_factor(int max_k) {
  OracleCheck check;
  check.name = "step-factor-vs-full-integer";
  check.params = "max_k=" + std::to_string(max_k);
  if (max_k < 2 || max_k > 8) {
    throw std::domain_error("step factor check needs max_k in [2, 8]");
  }
  for (int k = 2; k <= max_k; ++k) {
    std::uint64_t exponent = 4;
    for (int q = 2; q < k; ++q) exponent *= 5;
    const std::uint64_t truth = trailing_u64(full_pow2(exponent), k);
    const std::uint64_t got = step_factor(k, k).low_u64(k);
    if (got != truth) {
      check.pass = false;
      check.witness = "k=" + std::to_string(k) +
                      " engine=" + std::to_string(got) +
                      " full=" + std::to_string(truth);
      return check;
    }
  }
  check.pass = true;
  check.witness = "factors match full integers";
  return check;
}

std::vector<OracleCheck> check_greedy_prefix(int depth, std::uint64_t bound) {
  if (depth < 1 || depth > 4) {
    throw std::domain_error("greedy prefix depth must be in [1, 4]");
  }
  std::vector<OracleCheck> out;
  const RunRecord record = run(3, depth);

  {
    OracleCheck check;
    check.name = "greedy-prefix-representatives";
    check.params = "depth=" + std::to_string(depth);
    static const std::uint64_t kReps[4] = {3, 103, 2103, 607414603};
    static const int kPositions[4] = {0, 3, 6, 13};
    check.pass = true;
    std::ostringstream w;
    for (int i = 0; i < depth; ++i) {
      const std::size_t idx = static_cast<std::size_t>(i);
      if (record.representatives[idx] != kReps[i] ||
          record.digits[idx].position != kPositions[i]) {
        check.pass = false;
      }
      if (i > 0) w << ',';
      w << record.representatives[idx].str();
    }
    check.witness = "representatives " + w.str();
    out.push_back(std::move(check));
  }

  if (depth >= 2) {
    // Position 3 is a hard wall: no exponent above 14 keeps four trailing
    // digits equal to 0008, so e − d1 = 3 is the best possible.
    OracleCheck check;
    check.name = "frontier-3-maximal";
    check.params = "bound=" + std::to_string(bound);
    check.pass = true;
    BigUint x = 1;
    for (std::uint64_t n = 1; n <= bound; ++n) {
      x <<= 1;
      if (n >= 14 && x % 10000 == 8) {
        check.pass = false;
        check.witness = "2^" + std::to_string(n) + " ends in 0008";
        break;
      }
    }
    if (check.pass) {
      check.witness = "no exponent <= " + std::to_string(bound) +
                      " extends the run past position 2";
    }
    out.push_back(std::move(check));
    out.push_back({"rep-103-trailing", "k=4",
                   trailing_u64(full_pow2(103), 4) == 3008,
                   "2^103 mod 10^4 = " +
                       std::to_string(trailing_u64(full_pow2(103), 4))});
  }

  if (depth >= 3) {
    out.push_back({"rep-2103-trailing", "k=7",
                   trailing_u64(full_pow2(2103), 7) == 1003008,
                   "2^2103 mod 10^7 = " +
                       std::to_string(trailing_u64(full_pow2(2103), 7))});
    ClassScanResult scan = check_exhaustive_class("003008", 6, bound);
    scan.check.name = "frontier-6-class";
    scan.check.pass =
        scan.check.pass && scan.classes == std::vector<std::uint64_t>{2103};
    out.push_back(std::move(scan.check));
  }

  if (depth >= 4) {
    // The frontier-13 class representative, settled by full integers.  The
    // 8 + 3·10^3 + 9·10^6 + 1·10^13 pattern holds for 607414603; the
    // transposed 670414603 is not even in the frontier class.
    const std::uint64_t good = trailing_u64(full_pow2(607414603), 15);
    const std::uint64_t bad = trailing_u64(full_pow2(670414603), 15);
    OracleCheck check;
    check.name = "rep-607414603-full-integer";
    check.params = "k=15";
    // The frontier-13 class pins trailing digits 0000009003008; the
    // transposed exponent fails to carry them.
    check.pass = good == 410000009003008ULL &&
                 bad % 10000000000000ULL != 9003008ULL;
    check.witness = "2^607414603 mod 10^15 = " + std::to_string(good) +
                    "; 2^670414603 mod 10^15 = " + std::to_string(bad);
    out.push_back(std::move(check));
    out.push_back({"rep-607414603-class", "mod 12500",
                   607414603ULL % 12500 == 2103,
                   "607414603 = 2103 (mod 12500)"});
  }
  return out;
}

OracleReport default_suite(const SuiteConfig& config) {
  OracleReport report;
  report.scope = "bound=" + std::to_string(config.bound) +
                 " max_k=" + std::to_string(config.max_k) +
                 " prefix_depth=" + std::to_string(config.prefix_depth) +
                 " parity_samples=" + std::to_string(config.parity_samples);
  report.checks.push_back(check_pow2_equivalence(config.bound, config.max_k));
  report.checks.push_back(
      check_exhaustive_class("008", 3, std::min<std::uint64_t>(config.bound,
                                                               10000))
          .check);
  report.checks.push_back(check_exhaustive_class("8", 1, 100).check);
  report.checks.push_back(
      check_parity_fan_samples(config.parity_samples, 6, config.seed));
  report.checks.push_back(check_step_factor(8));
  for (OracleCheck& c : check_greedy_prefix(config.prefix_depth,
                                            config.bound)) {
    report.checks.push_back(std::move(c));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const OracleCheck& a, const OracleCheck& b) {
              return a.name == b.name ? a.params < b.params : a.name < b.name;
            });
  return report;
}

}  // namespace tenadic::oracle
