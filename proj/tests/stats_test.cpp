#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenadic/stats_report.hpp"

using tenadic::Rational;
using tenadic::RunRecord;
using tenadic::Slice;

namespace {

// A handmade record: digits 8,3,9,1 at 0,3,6,13 with the worked-example
// gaps, plus a synthetic tail to give the tables something to chew on.
RunRecord sample_record() {
  RunRecord r;
  r.p1 = 3;
  r.digits = {{8, 0}, {3, 3}, {9, 6}, {1, 13}, {9, 18}, {1, 23}};
  r.gaps = {2, 2, 6, 4, 4, 3};
  for (int i = 0; i < 6; ++i) {
    r.classes.emplace_back(tenadic::BigUint(0), 1);
    r.representatives.emplace_back(0);
  }
  return r;
}

}  // namespace

TEST_CASE("rational formatting is round-half-up at the boundary") {
  CHECK(tenadic::format_rational(Rational(813, 252), 9) == "3.226190476");
  CHECK(tenadic::format_rational(Rational(1641, 506), 9) == "3.243083004");
  CHECK(tenadic::format_rational(Rational(2450, 760), 9) == "3.223684211");
  CHECK(tenadic::format_rational(Rational(3292, 1014), 9) == "3.246548323");
  CHECK(tenadic::format_rational(Rational(140, 259), 3) == "0.541");
  CHECK(tenadic::format_rational(Rational(1, 2), 0) == "1");
  CHECK(tenadic::format_rational(Rational(1, 8), 2) == "0.13");
  CHECK(tenadic::format_rational(Rational(0), 3) == "0.000");
  CHECK(tenadic::format_rational(Rational(13, 4), 2) == "3.25");
}

TEST_CASE("quartile boundaries chunk from the end") {
  CHECK(tenadic::slice_prefix_size(1014, Slice::kQ1) == 252);
  CHECK(tenadic::slice_prefix_size(1014, Slice::kQ2) == 506);
  CHECK(tenadic::slice_prefix_size(1014, Slice::kQ3) == 760);
  CHECK(tenadic::slice_prefix_size(1014, Slice::kQ4) == 1014);
  CHECK(tenadic::slice_prefix_size(8, Slice::kQ1) == 2);
  CHECK(tenadic::slice_prefix_size(8, Slice::kQ3) == 6);
  CHECK(tenadic::slice_prefix_size(3, Slice::kQ1) == 0);
  CHECK(tenadic::slice_prefix_size(3, Slice::kQ4) == 3);
}

TEST_CASE("gap histogram on a tiny record") {
  const RunRecord r = sample_record();
  const auto full = tenadic::gap_histogram(r, Slice::kFull);
  CHECK(full.total_gaps == 6);
  CHECK(full.counts.at(2) == 2);
  CHECK(full.counts.at(4) == 2);
  CHECK(full.counts.at(3) == 1);
  CHECK(full.counts.at(6) == 1);
  CHECK(full.weighted.at(4) == 8);
  CHECK(full.average == Rational(21, 6));

  const auto q2 = tenadic::gap_histogram(r, Slice::kQ2);
  CHECK(q2.total_gaps == 2);  // 6 gaps -> quarters of 2 from the end
  CHECK(q2.average == Rational(4, 2));

  RunRecord single = r;
  single.digits.resize(1);
  single.gaps = {2};
  const auto one = tenadic::gap_histogram(single, Slice::kFull, 0);
  CHECK(one.average == Rational(2));
  CHECK_THROWS_AS((void)tenadic::gap_histogram(single, Slice::kQ1),
                  std::domain_error);
}

TEST_CASE("cumulative slices grow componentwise") {
  const RunRecord r = sample_record();
  const auto q3 = tenadic::gap_histogram(r, Slice::kQ3);
  const auto q4 = tenadic::gap_histogram(r, Slice::kQ4);
  for (const auto& [gap, count] : q3.counts) {
    CHECK(count <= (q4.counts.contains(gap) ? q4.counts.at(gap) : 0));
  }
  CHECK(q3.total_gaps <= q4.total_gaps);
}

TEST_CASE("digit frequency with and without the seed") {
  const RunRecord r = sample_record();
  const auto freq = tenadic::digit_frequency(r);
  CHECK(freq.at(3).count == 1);
  CHECK(freq.at(9).count == 2);
  CHECK(freq.at(1).count == 2);
  CHECK_FALSE(freq.contains(8));
  CHECK(freq.at(9).proportion == Rational(2, 5));

  const auto with_seed = tenadic::digit_frequency(r, 0, true);
  CHECK(with_seed.at(8).count == 1);
  CHECK(with_seed.at(9).proportion == Rational(2, 6));

  const auto prefix = tenadic::digit_frequency(r, 3);
  CHECK(prefix.at(3).count == 1);
  CHECK(prefix.at(9).count == 1);
  CHECK(prefix.at(1).count == 1);
}

TEST_CASE("digit gap matrix attribution") {
  const RunRecord r = sample_record();
  const auto matrix = tenadic::digit_gap_matrix(r);
  // Found digits with successors: 3@3 (gap 2), 9@6 (gap 6), 1@13 (gap 4),
  // 9@18 (gap 4).  The last found digit contributes no row.
  CHECK(matrix.cell(3, 2) == 1);
  CHECK(matrix.cell(9, 6) == 1);
  CHECK(matrix.cell(9, 4) == 1);
  CHECK(matrix.cell(1, 4) == 1);
  CHECK(matrix.row_total(3) == 1);
  CHECK(matrix.row_total(9) == 2);
  CHECK(matrix.row_total(1) == 1);
  CHECK(matrix.row_total(5) == 0);
  CHECK(matrix.probability(9, 4) == Rational(1, 2));
}

TEST_CASE("expected gap model closed form") {
  const auto model = tenadic::model_expected_gap();
  CHECK(model.n_mid == Rational(3));
  CHECK(model.m_edge == Rational(4));
  CHECK(model.expected == Rational(13, 4));
  // Pure constant: bit-identical across calls.
  const auto again = tenadic::model_expected_gap();
  CHECK(again.expected == model.expected);
}

TEST_CASE("forced tail partial sums approach 1") {
  const Rational partial = tenadic::forced_tail_partial_sum(40);
  const Rational err = 1 - partial;
  CHECK(err > 0);
  CHECK(err < Rational(1, 10000000000LL));
  CHECK(tenadic::forced_tail_partial_sum(1) == Rational(1, 4));
}

TEST_CASE("table invariants on live run data") {
  const RunRecord r = tenadic::run(3, 150);
  const auto freq = tenadic::digit_frequency(r);
  const auto matrix = tenadic::digit_gap_matrix(r);
  // Row sums equal digit frequencies minus the one digit with no follower.
  long long freq_total = 0, row_total = 0;
  for (int d = 1; d <= 9; d += 2) {
    const long long f = freq.contains(d) ? freq.at(d).count : 0;
    const long long m = matrix.row_total(d);
    CHECK(m <= f);
    CHECK(f - m <= 1);
    freq_total += f;
    row_total += m;
  }
  CHECK(freq_total == 149);
  CHECK(row_total == 148);

  // Exact accounting: average times count equals the weighted total, and a
  // greedy run from seed 3 never shows a gap below 2.
  for (const Slice slice :
       {Slice::kQ1, Slice::kQ2, Slice::kQ3, Slice::kQ4}) {
    const auto hist = tenadic::gap_histogram(r, slice);
    tenadic::BigUint weighted = 0;
    for (const auto& [gap, w] : hist.weighted) {
      CHECK(gap >= 2);
      weighted += w;
    }
    CHECK(hist.average * hist.total_gaps == Rational(weighted));
  }

  // Componentwise growth across the cumulative quartiles.
  const auto q1 = tenadic::gap_histogram(r, Slice::kQ1);
  const auto q2 = tenadic::gap_histogram(r, Slice::kQ2);
  for (const auto& [gap, count] : q1.counts) {
    CHECK(count <= (q2.counts.contains(gap) ? q2.counts.at(gap) : 0));
  }
}

TEST_CASE("csv emission headers and exact averages") {
  const RunRecord r = sample_record();
  const auto hist = tenadic::gap_histogram(r, Slice::kFull);
  const std::string csv = tenadic::gap_table_csv(hist);
  CHECK(csv.rfind("Gap Size,Frequency,Weighted Sum\n", 0) == 0);
  CHECK(csv.find("0,0,0\n") != std::string::npos);
  CHECK(csv.find("2,2,4\n") != std::string::npos);
  CHECK(csv.find("Average,3.500000000") != std::string::npos);

  const auto j = tenadic::gap_table_json(hist, "full");
  CHECK(j["table"] == "gaps");
  CHECK(j["average"]["numerator"] == "7");
  CHECK(j["average"]["denominator"] == "2");
}
