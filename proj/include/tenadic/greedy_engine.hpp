#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <vector>

#include "tenadic/bigint.hpp"
#include "tenadic/decimal_residue.hpp"
#include "tenadic/residue_core.hpp"

namespace tenadic {

struct PinnedDigit {
  int value;     // 1..9
  int position;  // power of ten
  friend bool operator==(const PinnedDigit&, const PinnedDigit&) = default;
};

/// The growing record of the construction: pinned nonzero digits, the number
/// of trailing digits pinned so far, and the exponent class that pins them.
struct ExpansionState {
  std::vector<PinnedDigit> digits;
  int known_level;          // trailing digits pinned; frontier position
  ExponentClass exp_class;  // level == known_level
  DecimalResidue trailing;  // precision == known_level
};

/// Full trace of a run.  Entry i describes the (i+1)-th nonzero digit:
/// gaps[i] counts the zeros forced after it (the last digit's run is known
/// from its blocked frontier), classes[i]/representatives[i] give the
/// exponent class at the digit's commit point and its least representative
/// exceeding the level there.
struct RunRecord {
  std::uint64_t p1 = 0;
  std::vector<PinnedDigit> digits;
  std::vector<int> gaps;
  std::vector<ExponentClass> classes;
  std::vector<BigUint> representatives;
  bool incomplete = false;
};

struct RunConfig {
  std::uint64_t p1 = 3;
  int target_digits = 1013;
  int lookahead = 256;      // forced-run cap per candidate probe
  int tie_depth = 64;       // extra depth when probes tie at the cap
  int headroom = 16;        // digits kept beyond the frontier
  int working_digits = 0;   // 0 = size from target_digits
};

namespace detail {
class Worker;
}

/// Read-only view of a blocked frontier during a run, valid only inside the
/// observer callback.
class Frontier {
 public:
  int position() const;
  int digit_count() const;
  const std::array<CandidateDigit, 5>& candidates() const;
  // Zeros forceable after committing the given candidate digit, capped.
  int forced_run(int candidate_digit, int cap) const;
  ExpansionState state() const;

 private:
  friend class detail::Worker;
  explicit Frontier(detail::Worker& worker) : worker_(&worker) {}
  detail::Worker* worker_;
  mutable bool have_candidates_ = false;
  mutable std::array<CandidateDigit, 5> candidates_{};
};

using FrontierObserver = std::function<void(const Frontier&)>;

ExpansionState initial_state(std::uint64_t p1);

// Extend the state digit by digit, pinning a zero wherever the parity class
// allows one, until the first blocked position or max_level.  No nonzero
// digit is committed.
ExpansionState force_zeros(const ExpansionState& s, int max_level);

// At a blocked state: probe all five candidate digits, commit the one whose
// forced zero-run is longest (ties: deeper lookahead, then smallest digit),
// and force zeros up to the new blocking frontier.
ExpansionState next_term(const ExpansionState& s, int lookahead = 256);

bool is_blocked(const ExpansionState& s);
std::array<CandidateDigit, 5> frontier_candidates(const ExpansionState& s);
int forced_run(const ExpansionState& s, int candidate_digit, int cap);

RunRecord run(const RunConfig& config, const FrontierObserver& observer = {},
              const std::atomic<bool>* stop = nullptr);
RunRecord run(std::uint64_t p1, int target_digits, int lookahead = 256);

}  // namespace tenadic
