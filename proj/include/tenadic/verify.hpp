#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tenadic/forceability.hpp"
#include "tenadic/greedy_engine.hpp"

namespace tenadic {

struct VerifyOptions {
  // Independent powering of every representative at levels up to this many
  // digits (plus the final and every 100th snapshot regardless).
  int pow2_exhaustive_level = 600;
  int corollary_cap = kDefaultForceabilityCap;
  bool check_corollaries = true;  // requires re-running the engine
  bool check_rerun_determinism = false;
};

struct VerifySummary {
  std::vector<CheckResult> checks;
  bool pass = false;
  std::string to_text() const;
};

// Structural checks on a stored record: digit and gap invariants, position
// consistency, class-chain refinement, representative minimality, and
// independent power reconstruction at sampled snapshots.
VerifySummary verify_record(const RunRecord& record,
                            const VerifyOptions& options = {});

// Runs the engine fresh and verifies the produced record plus the per
// frontier forceability corollaries and greedy consistency.
VerifySummary verify_fresh(const RunConfig& config,
                           const VerifyOptions& options = {});

}  // namespace tenadic
