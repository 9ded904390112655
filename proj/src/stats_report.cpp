#include "tenadic/stats_report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tenadic {

namespace {

// Gap entries used by a found-digit prefix P: the runs following record
// digits 1..P+1, i.e. gaps[0..P].
int gap_span(const RunRecord& record, int found_prefix) {
  const int found = found_digit_count(record);
  int p = found_prefix == 0 ? found : found_prefix;
  if (p < 0 || p > found) {
    throw std::domain_error("found-digit prefix exceeds the record");
  }
  const int span = p + 1;
  if (span > static_cast<int>(record.gaps.size())) {
    throw std::domain_error("record does not carry enough gap entries");
  }
  return span;
}

Rational make_ratio(const BigUint& num, const BigUint& den) {
  return Rational(num, den);
}

}  // namespace

int found_digit_count(const RunRecord& record) {
  return std::max(0, static_cast<int>(record.digits.size()) - 1);
}

Slice slice_from_name(const std::string& name) {
  if (name == "q1") return Slice::kQ1;
  if (name == "q2") return Slice::kQ2;
  if (name == "q3") return Slice::kQ3;
  if (name == "q4") return Slice::kQ4;
  if (name == "full") return Slice::kFull;
  throw std::invalid_argument("unknown slice: " + name);
}

int slice_prefix_size(int total_gaps, Slice slice) {
  const int quarter = (total_gaps + 3) / 4;
  const int i = static_cast<int>(slice);
  return std::max(0, total_gaps - (4 - i) * quarter);
}

GapHistogram gap_histogram(const RunRecord& record, Slice slice,
                           int found_prefix) {
  const int span = gap_span(record, found_prefix);
  const int take = slice_prefix_size(span, slice);
  if (take <= 0) {
    throw std::domain_error("gap histogram slice is empty");
  }
  GapHistogram hist;
  hist.total_gaps = take;
  BigUint weighted_total = 0;
  for (int i = 0; i < take; ++i) {
    const int g = record.gaps[static_cast<std::size_t>(i)];
    hist.counts[g] += 1;
    weighted_total += g;
  }
  for (const auto& [g, c] : hist.counts) hist.weighted[g] = c * g;
  hist.average = make_ratio(weighted_total, BigUint(take));
  return hist;
}

std::map<int, DigitFrequency> digit_frequency(const RunRecord& record,
                                              int found_prefix,
                                              bool include_seed) {
  const int found = found_digit_count(record);
  const int p = found_prefix == 0 ? found : found_prefix;
  if (p < 1 || p > found) {
    throw std::domain_error("found-digit prefix exceeds the record");
  }
  std::map<int, DigitFrequency> freq;
  long long denom = p;
  if (include_seed) {
    freq[record.digits[0].value].count += 1;
    denom += 1;
  }
  for (int i = 1; i <= p; ++i) {
    freq[record.digits[static_cast<std::size_t>(i)].value].count += 1;
  }
  for (auto& [digit, f] : freq) {
    f.proportion = make_ratio(BigUint(f.count), BigUint(denom));
  }
  return freq;
}

long long DigitGapMatrix::row_total(int digit) const {
  const auto row = counts.find(digit);
  if (row == counts.end()) return 0;
  long long total = 0;
  for (const auto& [gap, c] : row->second) total += c;
  return total;
}

long long DigitGapMatrix::cell(int digit, int gap) const {
  const auto row = counts.find(digit);
  if (row == counts.end()) return 0;
  const auto it = row->second.find(gap);
  return it == row->second.end() ? 0 : it->second;
}

Rational DigitGapMatrix::probability(int digit, int gap) const {
  const long long total = row_total(digit);
  if (total == 0) return Rational(0);
  return make_ratio(BigUint(cell(digit, gap)), BigUint(total));
}

DigitGapMatrix digit_gap_matrix(const RunRecord& record, int found_prefix) {
  const int found = found_digit_count(record);
  const int p = found_prefix == 0 ? found : found_prefix;
  if (p < 1 || p > found) {
    throw std::domain_error("found-digit prefix exceeds the record");
  }
  DigitGapMatrix matrix;
  for (int d : {1, 3, 5, 7, 9}) matrix.counts[d];
  // The run following found digit i is between-digits only when a successor
  // exists inside the prefix, so the prefix's last digit contributes no row.
  for (int i = 1; i + 1 <= p; ++i) {
    const int digit = record.digits[static_cast<std::size_t>(i)].value;
    const int gap = record.gaps[static_cast<std::size_t>(i)];
    matrix.counts[digit][gap] += 1;
    matrix.max_gap = std::max(matrix.max_gap, gap);
  }
  return matrix;
}

ExpectedGapModel model_expected_gap() {
  // Σ_{n>=0} n r^n = r / (1−r)^2 with r = 1/2, halved for the 2^(n+1).
  const Rational r(1, 2);
  const Rational weighted_geometric = r / ((1 - r) * (1 - r));
  const Rational tail = weighted_geometric / 2;
  ExpectedGapModel model;
  model.n_mid = 2 + tail;
  model.m_edge = 3 + tail;
  model.expected = model.m_edge / 4 + 3 * model.n_mid / 4;
  return model;
}

Rational forced_tail_partial_sum(int terms) {
  Rational sum(0);
  BigUint pow2 = 4;  // 2^(n+1) at n = 1
  for (int n = 1; n <= terms; ++n) {
    sum += Rational(BigUint(n), pow2);
    pow2 *= 2;
  }
  return sum;
}

std::string format_rational(const Rational& value, int places) {
  if (value < 0) throw std::domain_error("negative rational rendering");
  const BigUint num = boost::multiprecision::numerator(value);
  const BigUint den = boost::multiprecision::denominator(value);
  const BigUint scaled = num * pow10_big(places);
  BigUint q = scaled / den;
  const BigUint r = scaled % den;
  if (2 * r >= den) ++q;
  std::string digits = q.str();
  if (places == 0) return digits;
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(),
                  '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  return digits;
}

std::string gap_table_csv(const GapHistogram& hist) {
  std::ostringstream out;
  out << "Gap Size,Frequency,Weighted Sum\n";
  const int max_gap = hist.counts.empty() ? 0 : hist.counts.rbegin()->first;
  for (int g = 0; g <= max_gap; ++g) {
    const auto it = hist.counts.find(g);
    const long long c = it == hist.counts.end() ? 0 : it->second;
    out << g << ',' << c << ',' << c * g << '\n';
  }
  out << "Average," << format_rational(hist.average, 9) << ",\n";
  return out.str();
}

std::string digit_table_csv(const std::map<int, DigitFrequency>& freq) {
  std::ostringstream out;
  out << "Digit,Frequency,Proportion\n";
  long long total = 0;
  for (const auto& [digit, f] : freq) {
    out << digit << ',' << f.count << ',' << format_rational(f.proportion, 3)
        << '\n';
    total += f.count;
  }
  out << "Total," << total << ",\n";
  return out.str();
}

std::string matrix_csv(const DigitGapMatrix& matrix, bool probabilities) {
  std::ostringstream out;
  out << "Digit";
  for (int g = 2; g <= matrix.max_gap; ++g) out << ',' << g;
  out << '\n';
  for (const auto& [digit, row] : matrix.counts) {
    out << digit;
    for (int g = 2; g <= matrix.max_gap; ++g) {
      if (probabilities) {
        out << ',' << format_rational(matrix.probability(digit, g), 3);
      } else {
        out << ',' << matrix.cell(digit, g);
      }
    }
    out << '\n';
  }
  return out.str();
}

namespace {

OrderedJson rational_json(const Rational& value, int places) {
  OrderedJson j;
  j["numerator"] = boost::multiprecision::numerator(value).str();
  j["denominator"] = boost::multiprecision::denominator(value).str();
  j["decimal"] = format_rational(value, places);
  return j;
}

}  // namespace

OrderedJson gap_table_json(const GapHistogram& hist,
                           const std::string& slice) {
  OrderedJson j;
  j["table"] = "gaps";
  j["slice"] = slice;
  j["columns"] = {"Gap Size", "Frequency", "Weighted Sum"};
  OrderedJson rows = OrderedJson::array();
  const int max_gap = hist.counts.empty() ? 0 : hist.counts.rbegin()->first;
  for (int g = 0; g <= max_gap; ++g) {
    const auto it = hist.counts.find(g);
    const long long c = it == hist.counts.end() ? 0 : it->second;
    rows.push_back({g, c, c * g});
  }
  j["rows"] = rows;
  j["total"] = hist.total_gaps;
  j["average"] = rational_json(hist.average, 9);
  return j;
}

OrderedJson digit_table_json(const std::map<int, DigitFrequency>& freq) {
  OrderedJson j;
  j["table"] = "digits";
  j["columns"] = {"Digit", "Frequency", "Proportion"};
  OrderedJson rows = OrderedJson::array();
  long long total = 0;
  for (const auto& [digit, f] : freq) {
    rows.push_back({digit, f.count, format_rational(f.proportion, 3)});
    total += f.count;
  }
  j["rows"] = rows;
  j["total"] = total;
  return j;
}

OrderedJson matrix_json(const DigitGapMatrix& matrix, bool probabilities) {
  OrderedJson j;
  j["table"] = probabilities ? "probabilities" : "matrix";
  OrderedJson columns = OrderedJson::array();
  columns.push_back("Digit");
  for (int g = 2; g <= matrix.max_gap; ++g) columns.push_back(g);
  j["columns"] = columns;
  OrderedJson rows = OrderedJson::array();
  for (const auto& [digit, row] : matrix.counts) {
    OrderedJson r = OrderedJson::array();
    r.push_back(digit);
    for (int g = 2; g <= matrix.max_gap; ++g) {
      if (probabilities) {
        r.push_back(format_rational(matrix.probability(digit, g), 3));
      } else {
        r.push_back(matrix.cell(digit, g));
      }
    }
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j;
}

}  // namespace tenadic
