#pragma once

#include <array>
#include <string>
#include <vector>

#include "tenadic/greedy_engine.hpp"

namespace tenadic {

/// Per-candidate forceability at a blocked frontier: max_beta(b) is the
/// largest β ≤ cap such that committing b admits a continuation class with at
/// least β zeros immediately above it (equivalently d_{n+1} − d_n ≥ β + 1).
struct ForceabilityReport {
  int frontier_position = 0;
  int cap = 0;
  std::array<int, 5> max_beta{};  // indexed by (digit − 1) / 2

  int beta(int digit) const { return max_beta[index_of(digit)]; }
  static std::size_t index_of(int digit);
};

inline constexpr int kDefaultForceabilityCap = 8;

bool is_beta_forceable(const Frontier& frontier, int digit, int beta);
bool is_beta_forceable(const ExpansionState& blocked, int digit, int beta);

ForceabilityReport classify(const Frontier& frontier,
                            int cap = kDefaultForceabilityCap);
ForceabilityReport classify(const ExpansionState& blocked,
                            int cap = kDefaultForceabilityCap);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The uniqueness structure of forceable digits as data checks on a report
// (cap >= 3): among {3,5,7} at most one digit reaches β = 2 and never
// together with {1,9}; 1 and 9 reach β = 2 together or not at all; when
// they do, exactly one reaches β = 3.
std::vector<CheckResult> verify_corollaries(const ForceabilityReport& report);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace tenadic
