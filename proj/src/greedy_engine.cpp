#include "tenadic/greedy_engine.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <stdexcept>
#include <utility>

namespace tenadic {

namespace {

constexpr std::uint64_t kExactExponentCap = 1u << 20;
constexpr int kMaxWorkingDigits =
    static_cast<int>(kernel::kMaxLimbs) * kernel::kLimbDigits;

int auto_working_digits(int target_digits, int headroom) {
  // Mean frontier advance is ~4.25 digits per nonzero digit; 4.6 plus slack
  // keeps regrowth a cold path without oversizing small runs.
  const long long est =
      static_cast<long long>(target_digits) * 23 / 5 + 80 + headroom;
  return static_cast<int>(std::clamp<long long>(est, 64, kMaxWorkingDigits));
}

DecimalResidue residue_of_exponent(const BigUint& p, int precision) {
  if (p < kExactExponentCap) {
    return exact_pow2(p.convert_to<std::uint64_t>(), precision);
  }
  return pow2_mod(p, precision);
}

}  // namespace

namespace detail {

// Step factors 2^(4·5^(m−1)) mod 10^K for probe positions m >= base, built
// incrementally: each factor is the fifth power of the previous one.
struct StepChain {
  int precision;
  int base_position;
  std::vector<DecimalResidue> factors;

  StepChain(int precision_in, int base_position_in, DecimalResidue base_factor)
      : precision(precision_in), base_position(base_position_in) {
    factors.push_back(std::move(base_factor));
  }

  const DecimalResidue& factor_for_position(int m) {
    assert(m >= base_position);
    while (static_cast<int>(factors.size()) <= m - base_position) {
      const DecimalResidue& f = factors.back();
      DecimalResidue sq = f * f;
      DecimalResidue quad = sq * sq;
      factors.push_back(quad * f);
    }
    return factors[static_cast<std::size_t>(m - base_position)];
  }
};

enum class ForceStatus { kForced, kBlocked, kNeedPrecision };

// A point in the construction: a concrete exponent p, its trailing digits
// mod 10^K, and the class bookkeeping.  Cheap to copy for candidate probes;
// the factor chain is shared.
struct Cursor {
  DecimalResidue s;  // 2^p mod 10^K
  BigUint p;
  BigUint step;  // 4·5^(level−1) == class modulus at the current level
  int level = 1;
  std::shared_ptr<StepChain> chain;

  int precision() const { return chain->precision; }

  // Digit probes at position m are only meaningful for exponents above m.
  void ensure_exponent_exceeds(int position) {
    if (p > position) return;
    const ExponentClass cls(p % step, level);
    p = min_representative(cls, BigUint(position));
    s = residue_of_exponent(p, precision());
  }

  void advance(int j, DecimalResidue next_s) {
    s = std::move(next_s);
    if (j != 0) p += j * step;
    step *= 5;
    ++level;
  }

  ForceStatus try_force_one() {
    if (level >= precision()) return ForceStatus::kNeedPrecision;
    ensure_exponent_exceeds(level);
    const int a0 = s.digit(level);
    if (a0 % 2 == 1) return ForceStatus::kBlocked;
    if (a0 == 0) {
      advance(0, s);
      return ForceStatus::kForced;
    }
    const DecimalResidue& f = chain->factor_for_position(level);
    DecimalResidue x = s;
    for (int j = 1; j < 5; ++j) {
      x *= f;
      if (x.digit(level) == 0) {
        advance(j, std::move(x));
        return ForceStatus::kForced;
      }
    }
    throw std::logic_error("even parity class without a zero candidate");
  }

  struct RunResult {
    int forced;
    ForceStatus stop;  // kForced means the cap was reached
  };

  RunResult force_run(int cap) {
    int n = 0;
    while (n < cap) {
      const ForceStatus st = try_force_one();
      if (st != ForceStatus::kForced) return {n, st};
      ++n;
    }
    return {n, ForceStatus::kForced};
  }
};

class Worker {
 public:
  explicit Worker(const RunConfig& config) : config_(config) {
    if (config.p1 < 1 || config.p1 > kExactExponentCap) {
      throw std::domain_error("p1 must be in [1, 2^20]");
    }
    if (config.target_digits < 1) {
      throw std::domain_error("target digit count must be >= 1");
    }
    if (config.lookahead < 1 || config.tie_depth < 0 || config.headroom < 0) {
      throw std::domain_error("run caps must be positive");
    }
    const int k = config.working_digits > 0
                      ? std::clamp(config.working_digits, 64, kMaxWorkingDigits)
                      : auto_working_digits(config.target_digits,
                                            config.headroom);
    init_cursor(BigUint(config.p1), k, 1, BigUint(4));
    digits_.push_back(PinnedDigit{cursor_.s.digit(0), 0});
  }

  // Resume from a snapshot; the working precision covers known_level plus
  // the requested probing margin.
  Worker(const ExpansionState& state, int margin, RunConfig config = {})
      : config_(config) {
    validate(state);
    const int k = std::clamp(state.known_level + std::max(margin, 16) + 16, 64,
                             kMaxWorkingDigits);
    const BigUint rep =
        min_representative(state.exp_class, BigUint(state.known_level));
    init_cursor(rep, k, state.known_level, state.exp_class.modulus());
    if (cursor_.s.truncated(state.known_level) != state.trailing) {
      throw std::domain_error(
          "expansion state is inconsistent: trailing digits do not match the "
          "exponent class");
    }
    digits_ = state.digits;
  }

  const std::vector<PinnedDigit>& digits() const { return digits_; }
  int level() const { return cursor_.level; }

  ExponentClass frontier_class() const {
    return ExponentClass(cursor_.p % cursor_.step, cursor_.level);
  }

  ExpansionState snapshot() const {
    return ExpansionState{digits_, cursor_.level, frontier_class(),
                          cursor_.s.truncated(cursor_.level)};
  }

  // Force zeros until blocked; returns false if max_level stopped the search
  // first.  Regrows the working precision as needed.
  bool force_until_blocked(int max_level) {
    while (cursor_.level < max_level) {
      switch (cursor_.try_force_one()) {
        case ForceStatus::kForced:
          break;
        case ForceStatus::kBlocked:
          return true;
        case ForceStatus::kNeedPrecision:
          regrow(0);
          break;
      }
    }
    return false;
  }

  bool blocked_now() {
    cursor_.ensure_exponent_exceeds(cursor_.level);
    return cursor_.s.digit(cursor_.level) % 2 == 1;
  }

  std::array<CandidateDigit, 5> frontier_candidates_now() {
    Candidates c = compute_candidates();
    return c.digits;
  }

  // Zeros forceable after committing the candidate with the given digit.
  int probe_digit(int candidate_digit, int cap) {
    for (;;) {
      const Candidates cands = compute_candidates();
      int j = -1;
      for (int t = 0; t < 5; ++t) {
        if (cands.digits[static_cast<std::size_t>(t)].digit ==
            candidate_digit) {
          j = t;
          break;
        }
      }
      if (j < 0) {
        throw std::domain_error("digit is not a candidate at this frontier");
      }
      Cursor probe = cursor_;
      probe.advance(j, cands.residues[static_cast<std::size_t>(j)]);
      const auto r = probe.force_run(cap);
      if (r.forced < cap && r.stop == ForceStatus::kNeedPrecision) {
        regrow(cap);
        continue;
      }
      return r.forced;
    }
  }

  // Commit the best candidate at a blocked frontier and adopt its forced run.
  void next_term_step() {
    while (!try_next_term()) {
      regrow(config_.lookahead);
    }
  }

  void run_record(RunRecord& record, const FrontierObserver& observer,
                  const std::atomic<bool>* stop) {
    record.p1 = config_.p1;
    record.classes.emplace_back(BigUint(config_.p1 % 4), 1);
    record.representatives.push_back(
        min_representative(record.classes.back(), BigUint(1)));
    force_until_blocked(kMaxWorkingDigits);
    record.gaps.push_back(cursor_.level - digits_.back().position - 1);
    while (static_cast<int>(digits_.size()) < config_.target_digits) {
      if (stop != nullptr && stop->load()) {
        record.incomplete = true;
        break;
      }
      record.classes.push_back(frontier_class());
      record.representatives.push_back(
          min_representative(record.classes.back(), BigUint(cursor_.level)));
      if (observer) {
        Frontier view(*this);
        observer(view);
      }
      next_term_step();
      force_until_blocked(kMaxWorkingDigits);
      record.gaps.push_back(cursor_.level - digits_.back().position - 1);
    }
    record.digits = digits_;
  }

 private:
  struct Candidates {
    std::array<CandidateDigit, 5> digits{};
    std::array<DecimalResidue, 5> residues;
  };

  static void validate(const ExpansionState& state) {
    if (state.known_level < 1 ||
        state.exp_class.level() != state.known_level ||
        state.trailing.precision() < state.known_level ||
        state.digits.empty() || state.digits.front().position != 0) {
      throw std::domain_error("malformed expansion state");
    }
    int prev = -1;
    for (const PinnedDigit& d : state.digits) {
      if (d.value < 1 || d.value > 9 || d.position <= prev ||
          d.position >= state.known_level) {
        throw std::domain_error("malformed expansion state digit list");
      }
      prev = d.position;
    }
    // Pinned digits and interleaved zeros must agree with the trailing
    // residue everywhere below the known level.
    std::size_t next = 0;
    for (int pos = 0; pos < state.known_level; ++pos) {
      int want = 0;
      if (next < state.digits.size() &&
          state.digits[next].position == pos) {
        want = state.digits[next].value;
        ++next;
      }
      if (state.trailing.digit(pos) != want) {
        throw std::domain_error(
            "expansion state digits disagree with the trailing residue");
      }
    }
  }

  void init_cursor(const BigUint& p, int k, int level, const BigUint& step) {
    cursor_.p = p;
    cursor_.level = level;
    cursor_.step = step;
    cursor_.s = residue_of_exponent(p, k);
    cursor_.chain = std::make_shared<StepChain>(
        k, level,
        step < kExactExponentCap
            ? exact_pow2(step.convert_to<std::uint64_t>(), k)
            : pow2_mod(step, k));
  }

  Candidates compute_candidates() {
    cursor_.ensure_exponent_exceeds(cursor_.level);
    Candidates out;
    const DecimalResidue& f = cursor_.chain->factor_for_position(cursor_.level);
    DecimalResidue x = cursor_.s;
    for (int j = 0; j < 5; ++j) {
      if (j > 0) x *= f;
      out.digits[static_cast<std::size_t>(j)] =
          CandidateDigit{j, x.digit(cursor_.level)};
      out.residues[static_cast<std::size_t>(j)] = x;
    }
    return out;
  }

  // One attempt at the commit; false means precision ran out mid-probe and
  // the frontier must be retried after regrowth.
  bool try_next_term() {
    struct Probe {
      int digit = 0;
      Cursor cursor;
      int forced = 0;
      bool capped = false;
    };
    const int frontier_position = cursor_.level;
    const Candidates cands = compute_candidates();
    std::array<Probe, 5> probes;
    for (int j = 0; j < 5; ++j) {
      Probe& pr = probes[static_cast<std::size_t>(j)];
      pr.digit = cands.digits[static_cast<std::size_t>(j)].digit;
      if (pr.digit % 2 == 0) {
        throw std::domain_error("next_term requires a blocked frontier");
      }
      pr.cursor = cursor_;
      pr.cursor.advance(j, cands.residues[static_cast<std::size_t>(j)]);
      const auto r = pr.cursor.force_run(config_.lookahead);
      if (r.forced < config_.lookahead &&
          r.stop == ForceStatus::kNeedPrecision) {
        return false;
      }
      pr.forced = r.forced;
      pr.capped = r.forced == config_.lookahead;
    }

    auto leaders_of = [&probes]() {
      int best = -1;
      for (const Probe& pr : probes) best = std::max(best, pr.forced);
      std::vector<Probe*> out;
      for (Probe& pr : probes) {
        if (pr.forced == best) out.push_back(&pr);
      }
      return out;
    };

    // The forcing structure leaves a unique winner once a second zero is
    // forceable; deepening here settles probes truncated at the cap, and the
    // smallest-digit rule keeps the function total regardless.
    std::vector<Probe*> leaders = leaders_of();
    int extra = 0;
    while (leaders.size() > 1 && extra < config_.tie_depth) {
      bool any_capped = false;
      for (Probe* pr : leaders) any_capped |= pr->capped;
      if (!any_capped) break;
      for (Probe* pr : leaders) {
        if (!pr->capped) continue;
        const auto r = pr->cursor.force_run(1);
        if (r.forced < 1 && r.stop == ForceStatus::kNeedPrecision) {
          return false;
        }
        pr->forced += r.forced;
        pr->capped = r.forced == 1;
      }
      ++extra;
      leaders = leaders_of();
    }
    Probe* winner = leaders.front();
    for (Probe* pr : leaders) {
      if (pr->digit < winner->digit) winner = pr;
    }

    if (winner->digit % 2 != 1) {
      throw std::logic_error("greedy commit produced an even digit");
    }
    if (digits_.size() >= 2 &&
        frontier_position - digits_.back().position < 2) {
      // Consecutive greedy digits sit at least two positions apart.
      throw std::logic_error("greedy commit violates the minimum gap");
    }
    digits_.push_back(PinnedDigit{winner->digit, frontier_position});
    cursor_ = std::move(winner->cursor);
    return true;
  }

  void regrow(int margin) {
    const int needed = cursor_.level + std::max(margin, 32) + 32;
    const int k = std::clamp(std::max(needed, cursor_.precision() * 3 / 2), 64,
                             kMaxWorkingDigits);
    if (k <= cursor_.precision()) {
      throw std::runtime_error(
          "working precision cap exceeded; the run is too deep for the "
          "compiled limb budget");
    }
    cursor_.ensure_exponent_exceeds(cursor_.level);
    init_cursor(cursor_.p, k, cursor_.level, cursor_.step);
  }

  RunConfig config_;
  Cursor cursor_;
  std::vector<PinnedDigit> digits_;

  friend class tenadic::Frontier;
};

}  // namespace detail

int Frontier::position() const { return worker_->level(); }

int Frontier::digit_count() const {
  return static_cast<int>(worker_->digits().size());
}

const std::array<CandidateDigit, 5>& Frontier::candidates() const {
  if (!have_candidates_) {
    candidates_ = worker_->frontier_candidates_now();
    have_candidates_ = true;
  }
  return candidates_;
}

int Frontier::forced_run(int candidate_digit, int cap) const {
  return worker_->probe_digit(candidate_digit, cap);
}

ExpansionState Frontier::state() const { return worker_->snapshot(); }

ExpansionState initial_state(std::uint64_t p1) {
  if (p1 < 1 || p1 > (1u << 20)) {
    throw std::domain_error("p1 must be in [1, 2^20]");
  }
  const DecimalResidue unit = exact_pow2(p1, 1);
  return ExpansionState{{PinnedDigit{unit.digit(0), 0}},
                        1,
                        ExponentClass(BigUint(p1 % 4), 1),
                        unit};
}

ExpansionState force_zeros(const ExpansionState& s, int max_level) {
  if (max_level <= s.known_level) {
    throw std::domain_error("force_zeros cap must exceed the known level");
  }
  detail::Worker worker(s, max_level - s.known_level + 4);
  worker.force_until_blocked(max_level);
  return worker.snapshot();
}

ExpansionState next_term(const ExpansionState& s, int lookahead) {
  if (lookahead < 1) throw std::domain_error("lookahead must be >= 1");
  RunConfig cfg;
  cfg.lookahead = lookahead;
  detail::Worker worker(s, std::min(lookahead, 512) + 16, cfg);
  if (!worker.blocked_now()) {
    throw std::domain_error("next_term requires a blocked state");
  }
  worker.next_term_step();
  worker.force_until_blocked(kMaxWorkingDigits);
  return worker.snapshot();
}

bool is_blocked(const ExpansionState& s) {
  detail::Worker worker(s, 16);
  return worker.blocked_now();
}

std::array<CandidateDigit, 5> frontier_candidates(const ExpansionState& s) {
  detail::Worker worker(s, 16);
  return worker.frontier_candidates_now();
}

int forced_run(const ExpansionState& s, int candidate_digit, int cap) {
  if (cap < 0) throw std::domain_error("cap must be >= 0");
  detail::Worker worker(s, cap + 8);
  if (!worker.blocked_now()) {
    throw std::domain_error("forced_run requires a blocked state");
  }
  return worker.probe_digit(candidate_digit, cap);
}

RunRecord run(const RunConfig& config, const FrontierObserver& observer,
              const std::atomic<bool>* stop) {
  detail::Worker worker(config);
  RunRecord record;
  worker.run_record(record, observer, stop);
  return record;
}

RunRecord run(std::uint64_t p1, int target_digits, int lookahead) {
  RunConfig cfg;
  cfg.p1 = p1;
  cfg.target_digits = target_digits;
  cfg.lookahead = lookahead;
  return run(cfg);
}

}  // namespace tenadic
