#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tenadic/bigint.hpp"
#include "tenadic/greedy_engine.hpp"

namespace tenadic {

using OrderedJson = nlohmann::ordered_json;

// "Found" digits are the ones the algorithm committed after the seed digit
// b1 (a power of two always ends in an even digit, so b1 never appears in
// the odd-digit tables).  A prefix of P found digits spans record digits
// 1..P+1 and the P+1 zero-runs following digits 1..P+1.
int found_digit_count(const RunRecord& record);

enum class Slice { kQ1 = 1, kQ2 = 2, kQ3 = 3, kQ4 = 4, kFull = 4 };

Slice slice_from_name(const std::string& name);

// Cumulative quartile boundary: the first i·⌈G/4⌉ gaps counted from the end,
// i.e. prefix sizes G − (4−i)·⌈G/4⌉ (clamped to >= 0).
int slice_prefix_size(int total_gaps, Slice slice);

struct GapHistogram {
  std::map<int, long long> counts;     // gap size -> frequency
  std::map<int, long long> weighted;   // gap size -> gap * frequency
  long long total_gaps = 0;
  Rational average;                    // exact
};

// found_prefix = 0 means all found digits in the record.
GapHistogram gap_histogram(const RunRecord& record, Slice slice = Slice::kFull,
                           int found_prefix = 0);

struct DigitFrequency {
  long long count = 0;
  Rational proportion;
};

std::map<int, DigitFrequency> digit_frequency(const RunRecord& record,
                                              int found_prefix = 0,
                                              bool include_seed = false);

struct DigitGapMatrix {
  // counts[digit][gap]: zero-runs of each size following each odd digit,
  // over found digits that have a successor in the prefix.
  std::map<int, std::map<int, long long>> counts;
  int max_gap = 0;

  long long row_total(int digit) const;
  long long cell(int digit, int gap) const;
  Rational probability(int digit, int gap) const;  // cell / row_total
};

DigitGapMatrix digit_gap_matrix(const RunRecord& record, int found_prefix = 0);

// The closed-form expectation: N zeros after a {3,5,7} digit, M after a
// {1,9} digit, and the 1/4·M + 3/4·N mixture, all exact.
struct ExpectedGapModel {
  Rational n_mid;      // 3
  Rational m_edge;     // 4
  Rational expected;   // 13/4
};

ExpectedGapModel model_expected_gap();

// Partial sum of Σ n/2^(n+1), exact; converges to 1.
Rational forced_tail_partial_sum(int terms);

// Decimal rendering of an exact nonnegative rational, round-half-up.
std::string format_rational(const Rational& value, int places);

// Table emission.  CSV column labels match the table renderings.
std::string gap_table_csv(const GapHistogram& hist);
std::string digit_table_csv(const std::map<int, DigitFrequency>& freq);
std::string matrix_csv(const DigitGapMatrix& matrix, bool probabilities);

OrderedJson gap_table_json(const GapHistogram& hist, const std::string& slice);
OrderedJson digit_table_json(const std::map<int, DigitFrequency>& freq);
OrderedJson matrix_json(const DigitGapMatrix& matrix, bool probabilities);

}  // namespace tenadic
