#include "tenadic/forceability.hpp"

#include <stdexcept>

namespace tenadic {

std::size_t ForceabilityReport::index_of(int digit) {
  if (digit < 1 || digit > 9 || digit % 2 == 0) {
    throw std::domain_error("forceability is reported for odd digits only");
  }
  return static_cast<std::size_t>((digit - 1) / 2);
}

namespace {

template <typename ProbeFn>
ForceabilityReport classify_with(int frontier_position, int cap,
                                 ProbeFn&& probe) {
  if (cap < 0) throw std::domain_error("cap must be >= 0");
  ForceabilityReport report;
  report.frontier_position = frontier_position;
  report.cap = cap;
  for (int digit = 1; digit <= 9; digit += 2) {
    report.max_beta[ForceabilityReport::index_of(digit)] =
        cap == 0 ? 0 : probe(digit, cap);
  }
  return report;
}

}  // namespace

bool is_beta_forceable(const Frontier& frontier, int digit, int beta) {
  if (beta < 0) throw std::domain_error("beta must be >= 0");
  if (beta == 0) {
    (void)ForceabilityReport::index_of(digit);
    return true;
  }
  return frontier.forced_run(digit, beta) >= beta;
}

bool is_beta_forceable(const ExpansionState& blocked, int digit, int beta) {
  if (beta < 0) throw std::domain_error("beta must be >= 0");
  if (beta == 0) {
    (void)ForceabilityReport::index_of(digit);
    return true;
  }
  return forced_run(blocked, digit, beta) >= beta;
}

ForceabilityReport classify(const Frontier& frontier, int cap) {
  return classify_with(frontier.position(), cap, [&](int digit, int c) {
    return frontier.forced_run(digit, c);
  });
}

ForceabilityReport classify(const ExpansionState& blocked, int cap) {
  return classify_with(blocked.known_level, cap, [&](int digit, int c) {
    return forced_run(blocked, digit, c);
  });
}

std::vector<CheckResult> verify_corollaries(const ForceabilityReport& report) {
  if (report.cap < 3) {
    throw std::domain_error("corollary checks need a report with cap >= 3");
  }
  const auto two_forceable = [&](int d) { return report.beta(d) >= 2; };
  const auto three_forceable = [&](int d) { return report.beta(d) >= 3; };

  std::vector<CheckResult> out;
  const int mid = static_cast<int>(two_forceable(3)) +
                  static_cast<int>(two_forceable(5)) +
                  static_cast<int>(two_forceable(7));
  const bool edge = two_forceable(1) || two_forceable(9);
  out.push_back({"unique 2-forceable among {3,5,7}",
                 mid <= 1 && !(edge && mid > 0),
                 "count=" + std::to_string(mid) +
                     (edge ? " with {1,9} 2-forceable" : "")});
  out.push_back({"1 and 9 2-forceable together",
                 two_forceable(1) == two_forceable(9),
                 "beta(1)=" + std::to_string(report.beta(1)) +
                     " beta(9)=" + std::to_string(report.beta(9))});
  bool c4 = true;
  if (two_forceable(1) && two_forceable(9)) {
    c4 = three_forceable(1) != three_forceable(9);
  }
  out.push_back({"exactly one of {1,9} 3-forceable", c4,
                 "beta(1)=" + std::to_string(report.beta(1)) +
                     " beta(9)=" + std::to_string(report.beta(9))});
  return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

}  // namespace tenadic
