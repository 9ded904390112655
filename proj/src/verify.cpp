#include "tenadic/verify.hpp"

#include <algorithm>
#include <sstream>

#include "tenadic/record_io.hpp"
#include "tenadic/residue_core.hpp"

namespace tenadic {

namespace {

void add(std::vector<CheckResult>& checks, std::string name, bool pass,
         std::string detail) {
  checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
}

// Expected digit at `position` of the trailing expansion: a pinned nonzero
// digit or zero.
int expected_digit(const RunRecord& record, std::size_t digit_count,
                   int position) {
  for (std::size_t i = 0; i < digit_count; ++i) {
    if (record.digits[i].position == position) return record.digits[i].value;
  }
  return 0;
}

void check_structure(const RunRecord& record,
                     std::vector<CheckResult>& checks) {
  const std::size_t n = record.digits.size();
  const bool sizes = record.gaps.size() == n && record.classes.size() == n &&
                     record.representatives.size() == n && n >= 1;
  add(checks, "record-shape", sizes,
      "digits=" + std::to_string(n) + " gaps=" +
          std::to_string(record.gaps.size()) + " classes=" +
          std::to_string(record.classes.size()) + " representatives=" +
          std::to_string(record.representatives.size()));
  if (!sizes) return;

  bool odd = true;
  std::string odd_witness = "all nonzero digits odd past the seed";
  for (std::size_t i = 1; i < n; ++i) {
    if (record.digits[i].value % 2 == 0) {
      odd = false;
      odd_witness = "even digit " + std::to_string(record.digits[i].value) +
                    " at position " + std::to_string(record.digits[i].position);
      break;
    }
  }
  add(checks, "committed-digits-odd", odd, odd_witness);

  bool gap_ok = true;
  int min_diff = -1;
  std::string gap_witness;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const int diff =
        record.digits[i + 1].position - record.digits[i].position;
    if (min_diff < 0 || diff < min_diff) min_diff = diff;
    if (diff < 2) {
      gap_ok = false;
      gap_witness = "positions " + std::to_string(record.digits[i].position) +
                    " -> " + std::to_string(record.digits[i + 1].position);
      break;
    }
  }
  if (gap_ok) {
    gap_witness = n > 2 ? "min position step " + std::to_string(min_diff)
                        : "fewer than two greedy digits";
  }
  add(checks, "minimum-position-step", gap_ok, gap_witness);

  bool gaps_match = true;
  std::string gaps_witness = "gap entries equal position differences";
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const int want =
        record.digits[i + 1].position - record.digits[i].position - 1;
    if (record.gaps[i] != want) {
      gaps_match = false;
      gaps_witness = "gaps[" + std::to_string(i) + "]=" +
                     std::to_string(record.gaps[i]) + " but positions give " +
                     std::to_string(want);
      break;
    }
  }
  if (record.gaps[n - 1] < 0) {
    gaps_match = false;
    gaps_witness = "negative final gap";
  }
  add(checks, "gap-position-consistency", gaps_match, gaps_witness);

  bool levels_ok = record.classes[0].level() == 1;
  for (std::size_t i = 1; i < n && levels_ok; ++i) {
    levels_ok = record.classes[i].level() == record.digits[i].position;
  }
  add(checks, "class-levels", levels_ok,
      "class level equals the digit's commit frontier");

  bool chain_ok = true;
  std::string chain_witness = "classes refine along the run";
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (record.classes[i + 1].residue() % record.classes[i].modulus() !=
        record.classes[i].residue()) {
      chain_ok = false;
      chain_witness = "class " + std::to_string(i + 1) +
                      " does not refine class " + std::to_string(i);
      break;
    }
  }
  add(checks, "class-chain-refinement", chain_ok, chain_witness);

  bool reps_ok = true;
  std::string reps_witness = "representatives are minimal in class";
  for (std::size_t i = 0; i < n; ++i) {
    const BigUint bound(i == 0 ? 1 : record.classes[i].level());
    if (record.representatives[i] !=
        min_representative(record.classes[i], bound)) {
      reps_ok = false;
      reps_witness = "representative " + std::to_string(i) +
                     " is not the least class member above its level";
      break;
    }
  }
  add(checks, "representative-minimality", reps_ok, reps_witness);
}

void check_powers(const RunRecord& record, const VerifyOptions& options,
                  std::vector<CheckResult>& checks) {
  const std::size_t n = record.digits.size();
  std::size_t tested = 0;
  bool pass = true;
  std::string witness;
  for (std::size_t i = 0; i < n; ++i) {
    const int level = record.classes[i].level();
    const bool sampled = level <= options.pow2_exhaustive_level ||
                         i + 1 == n || (i > 0 && i % 250 == 0);
    if (!sampled) continue;
    ++tested;
    const DecimalResidue got = pow2_mod(record.representatives[i], level);
    bool ok = true;
    // At the commit frontier of digit i the pinned digits are 0..i-1; the
    // initial snapshot already pins the seed digit.
    const std::size_t pinned = std::max<std::size_t>(i, 1);
    for (int pos = 0; pos < level && ok; ++pos) {
      ok = got.digit(pos) == expected_digit(record, pinned, pos);
    }
    if (!ok) {
      pass = false;
      witness = "2^" + record.representatives[i].str() + " mod 10^" +
                std::to_string(level) + " disagrees with the pinned digits";
      break;
    }
  }
  if (pass) {
    witness = std::to_string(tested) +
              " snapshots re-powered independently, all match";
  }
  add(checks, "representative-power-reconstruction", pass, witness);
}

}  // namespace

std::string VerifySummary::to_text() const {
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    out << (c.pass ? "[pass] " : "[FAIL] ") << c.name << ": " << c.detail
        << '\n';
  }
  out << (pass ? "all checks passed" : "CHECKS FAILED") << '\n';
  return out.str();
}

VerifySummary verify_record(const RunRecord& record,
                            const VerifyOptions& options) {
  VerifySummary summary;
  check_structure(record, summary.checks);
  if (!record.incomplete) {
    check_powers(record, options, summary.checks);
  }
  if (options.check_corollaries || options.check_rerun_determinism) {
    RunConfig cfg;
    cfg.p1 = record.p1;
    cfg.target_digits = static_cast<int>(record.digits.size());
    VerifySummary fresh = verify_fresh(cfg, options);
    if (options.check_rerun_determinism) {
      add(summary.checks, "rerun-determinism",
          [&] {
            RunRecord again = run(cfg);
            return record_to_string(again) == record_to_string(record);
          }(),
          "independent re-run serializes to identical bytes");
    }
    for (CheckResult& c : fresh.checks) {
      if (c.name.rfind("corollary", 0) == 0 ||
          c.name.rfind("greedy", 0) == 0) {
        summary.checks.push_back(std::move(c));
      }
    }
  }
  summary.pass = all_pass(summary.checks);
  return summary;
}

VerifySummary verify_fresh(const RunConfig& config,
                           const VerifyOptions& options) {
  VerifySummary summary;
  long long frontiers = 0;
  long long corollary_failures = 0;
  long long greedy_mismatches = 0;
  std::string witness;
  std::vector<ForceabilityReport> reports;
  const RunRecord record = run(config, [&](const Frontier& frontier) {
    ++frontiers;
    const ForceabilityReport report =
        classify(frontier, options.corollary_cap);
    if (!all_pass(verify_corollaries(report))) {
      ++corollary_failures;
      if (witness.empty()) {
        witness = "frontier at position " +
                  std::to_string(frontier.position());
      }
    }
    reports.push_back(report);
  });
  // The digit committed at frontier i is record digit i+1; it must attain
  // the report's maximum forceability.
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const int committed = record.digits[i + 1].value;
    int best = 0;
    for (int d = 1; d <= 9; d += 2) {
      best = std::max(best, reports[i].beta(d));
    }
    if (reports[i].beta(committed) != best) ++greedy_mismatches;
  }
  add(summary.checks, "forceability-uniqueness-suite",
      corollary_failures == 0,
      std::to_string(frontiers) + " frontiers, " +
          std::to_string(corollary_failures) + " corollary failures" +
          (witness.empty() ? "" : " (first: " + witness + ")"));
  add(summary.checks, "greedy-attains-max-forceability",
      greedy_mismatches == 0,
      std::to_string(greedy_mismatches) + " mismatches across " +
          std::to_string(reports.size()) + " frontiers");

  VerifyOptions record_options = options;
  record_options.check_corollaries = false;
  record_options.check_rerun_determinism = false;
  VerifySummary structural = verify_record(record, record_options);
  for (CheckResult& c : structural.checks) {
    summary.checks.push_back(std::move(c));
  }
  summary.pass = all_pass(summary.checks);
  return summary;
}

}  // namespace tenadic
