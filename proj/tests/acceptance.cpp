// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  The flagship run (1013 found digits, 1014 total with the seed)
// is executed twice: once for the table criteria and once for the
// determinism criterion.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "tenadic/forceability.hpp"
#include "tenadic/greedy_engine.hpp"
#include "tenadic/oracle.hpp"
#include "tenadic/record_io.hpp"
#include "tenadic/stats_report.hpp"

using tenadic::RunConfig;
using tenadic::RunRecord;
using tenadic::Slice;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void report(int criterion, bool pass, const std::string& what,
            double elapsed) {
  std::printf("criterion %d [%s] %s (%.2fs)\n", criterion,
              pass ? "PASS" : "FAIL", what.c_str(), elapsed);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

bool counts_equal(const tenadic::GapHistogram& hist,
                  const std::vector<long long>& expect_from_gap2) {
  for (std::size_t i = 0; i < expect_from_gap2.size(); ++i) {
    const int gap = static_cast<int>(i) + 2;
    const auto it = hist.counts.find(gap);
    const long long got = it == hist.counts.end() ? 0 : it->second;
    if (got != expect_from_gap2[i]) return false;
  }
  if (hist.counts.contains(0) || hist.counts.contains(1)) return false;
  return true;
}

}  // namespace

int main() {
  // Criterion 1: the worked example.  The numeral 670414603 occasionally
  // quoted for this construction is a digit transposition: only 607414603
  // carries the construction's trailing pattern (both are 2103 mod 12500;
  // the full-integer proof is re-run below and in
  // `tenadic oracle --prefix-depth 4`).
  {
    const auto t0 = std::chrono::steady_clock::now();
    const RunRecord r = tenadic::run(3, 4);
    const double elapsed = seconds_since(t0);
    bool pass = r.digits.size() == 4;
    const std::uint64_t reps[4] = {3, 103, 2103, 607414603};
    const int positions[4] = {0, 3, 6, 13};
    for (int i = 0; pass && i < 4; ++i) {
      pass = r.representatives[i] == reps[i] &&
             r.digits[i].position == positions[i];
    }
    pass = pass && elapsed < 1.0;
    report(1, pass,
           "worked example: representatives 3, 103, 2103, 607414603 and "
           "d-sequence 0, 3, 6, 13",
           elapsed);
    const auto good = tenadic::oracle::brute_trailing_digits(
        607414603, 15, std::uint64_t{700000000});
    const auto bad = tenadic::oracle::brute_trailing_digits(
        670414603, 15, std::uint64_t{700000000});
    const bool misprint_proof = good.digits() == "410000009003008" &&
                                bad.digits() == "624243849003008";
    report(1, misprint_proof,
           "  note: full integers confirm 2^607414603 = ...410000009003008 "
           "while the transposed 670414603 is not in the frontier class",
           seconds_since(t0) - elapsed);
  }

  // The flagship run: 1013 found digits after the seed.
  const auto t_run = std::chrono::steady_clock::now();
  RunConfig flagship;
  flagship.p1 = 3;
  flagship.target_digits = 1014;
  const RunRecord big = tenadic::run(flagship);
  const double run_seconds = seconds_since(t_run);

  // Criterion 2: theorem invariants at scale.
  {
    bool odd = true, gaps = true;
    for (std::size_t i = 1; i < big.digits.size(); ++i) {
      odd = odd && big.digits[i].value % 2 == 1;
      gaps = gaps &&
             big.digits[i].position - big.digits[i - 1].position >= 2;
    }
    const bool pass =
        odd && gaps && big.digits.size() == 1014 && run_seconds < 300.0;
    report(2, pass,
           "1013 found digits: all committed digits odd, every position "
           "step >= 2, run took " +
               std::to_string(run_seconds).substr(0, 5) + "s",
           run_seconds);
  }

  // Criterion 3: Tables 1-3.
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    const std::map<Slice, std::pair<std::vector<long long>, std::string>>
        expected{
            {Slice::kQ1,
             {{98, 81, 34, 18, 11, 5, 2, 1, 1, 0, 1}, "3.226190476"}},
            {Slice::kQ2,
             {{193, 159, 69, 44, 19, 15, 4, 1, 1, 0, 1}, "3.243083004"}},
            {Slice::kQ3,
             {{293, 235, 112, 62, 26, 21, 7, 1, 1, 1, 1}, "3.223684211"}},
            {Slice::kQ4,
             {{404, 294, 145, 86, 41, 26, 9, 4, 1, 2, 2}, "3.246548323"}},
        };
    for (const auto& [slice, want] : expected) {
      const auto hist = tenadic::gap_histogram(big, slice, 1013);
      pass = pass && counts_equal(hist, want.first) &&
             tenadic::format_rational(hist.average, 9) == want.second;
    }
    const auto freq = tenadic::digit_frequency(big, 1013);
    const std::map<int, long long> want_freq{
        {1, 113}, {3, 260}, {5, 272}, {7, 244}, {9, 124}};
    for (const auto& [digit, count] : want_freq) {
      pass = pass && freq.contains(digit) && freq.at(digit).count == count;
    }
    const auto freq513 = tenadic::digit_frequency(big, 513);
    const std::map<int, long long> want_513{
        {1, 55}, {3, 128}, {5, 139}, {7, 124}, {9, 67}};
    for (const auto& [digit, count] : want_513) {
      pass =
          pass && freq513.contains(digit) && freq513.at(digit).count == count;
    }
    report(3, pass,
           "cumulative quartile averages 3.226190476 / 3.243083004 / "
           "3.223684211 / 3.246548323 and digit counts 113/260/272/244/124 "
           "(513-prefix: 55/128/139/124/67), exact integer match",
           seconds_since(t0));
  }

  // Criterion 4: the closed-form heuristic.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto model = tenadic::model_expected_gap();
    const auto hist = tenadic::gap_histogram(big, Slice::kFull, 1013);
    const tenadic::Rational diff = model.expected - hist.average;
    const tenadic::Rational abs_diff = diff < 0 ? -diff : diff;
    const bool pass = model.n_mid == 3 && model.m_edge == 4 &&
                      model.expected == tenadic::Rational(13, 4) &&
                      abs_diff < tenadic::Rational(1, 100);
    report(4, pass,
           "model_expected_gap = (3, 4, 13/4) exactly; |13/4 - " +
               tenadic::format_rational(hist.average, 9) + "| < 0.01",
           seconds_since(t0));
  }

  // Criterion 5: oracle equivalence.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto equivalence = tenadic::oracle::check_pow2_equivalence(100000, 8);
    const auto scan = tenadic::oracle::check_exhaustive_class("008", 3, 10000);
    const double elapsed = seconds_since(t0);
    const bool pass = equivalence.pass && scan.check.pass &&
                      scan.classes == std::vector<std::uint64_t>{3} &&
                      elapsed < 30.0;
    report(5, pass,
           "residue engine equals full integers for n in [k, 1e5], k in "
           "[1, 8]; exponents ending 008 below 1e4 are exactly 3 mod 100",
           elapsed);
  }

  // Criterion 6: the five-candidate parity property.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto echo = tenadic::oracle::check_parity_fan_samples(100, 6);
    report(6, echo.pass,
           "100 randomized (i, m) cases give 5 distinct same-parity "
           "candidate digits",
           seconds_since(t0));
  }

  // Criterion 7: corollary suite across seeds.
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    long long frontiers = 0;
    for (const std::uint64_t p1 : {3ull, 103ull, 903ull}) {
      RunConfig cfg;
      cfg.p1 = p1;
      cfg.target_digits = 200;
      tenadic::run(cfg, [&](const tenadic::Frontier& frontier) {
        ++frontiers;
        const auto report_ = tenadic::classify(frontier, 8);
        pass = pass && tenadic::all_pass(tenadic::verify_corollaries(report_));
      });
    }
    report(7, pass && frontiers == 3 * 199,
           "uniqueness checks hold at all " + std::to_string(frontiers) +
               " frontiers of 200-digit runs from p1 = 3, 103, 903",
           seconds_since(t0));
  }

  // Criterion 8: Table 4/5 spot cells.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto matrix = tenadic::digit_gap_matrix(big, 1013);
    const bool pass =
        matrix.cell(3, 2) == 140 &&
        tenadic::format_rational(matrix.probability(3, 2), 3) == "0.541" &&
        matrix.cell(1, 2) == 0 && matrix.cell(9, 2) == 0;
    report(8, pass,
           "row 3 gap-2 count 140 with probability 0.541; rows 1 and 9 have "
           "no gap-2 cells",
           seconds_since(t0));
  }

  // Criterion 9: determinism.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const RunRecord again = tenadic::run(flagship);
    const bool pass =
        tenadic::record_to_string(big) == tenadic::record_to_string(again);
    report(9, pass,
           "two identically configured flagship runs serialize to byte "
           "identical records",
           seconds_since(t0));
  }

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion line(s) FAILED\n", g_failures);
  return 1;
}
