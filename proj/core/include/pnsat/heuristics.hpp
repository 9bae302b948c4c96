#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pnsat/occurrence_tracker.hpp"
#include "pnsat/rng.hpp"

namespace pnsat {

enum class HeuristicKind {
  Dlis,                  // literal with the largest dynamic count
  Vsids,                 // literal with the largest decayed activity
  PolaritySum,           // variable maximizing p + n
  PolarityProduct,       // variable maximizing p * n
  MomCombo,              // variable maximizing (p + n)*c + p*n
  Mom,                   // classic MOM over minimum-size unresolved clauses
  PolarityProductDecay,  // variable maximizing a(x)*a(~x) over activities
};

enum class TieBreak { ByIndex, SeededRandom };

struct HeuristicConfig {
  HeuristicKind kind = HeuristicKind::PolarityProductDecay;
  std::int64_t combo_weight = 32;  // c in (p + n)*c + p*n
  int mom_exponent = 1;            // k in (f(x) + f(~x))*2^k + f(x)*f(~x)
  double decay_divisor = 2.0;
  std::uint64_t decay_period = 256;  // conflicts between decays
  TieBreak tie_break = TieBreak::ByIndex;

  // Kind with its conventional defaults; VSIDS defaults to random ties.
  static HeuristicConfig make(HeuristicKind kind);

  // Canonical token, e.g. "dlis", "momcombo:32", "mom:1", "pnprod-decay".
  std::string summary() const;
};

// Parses a canonical token (as produced by summary(); "momcombo" and "mom"
// accept an optional ":<value>" parameter). Throws std::invalid_argument on
// unknown tokens.
HeuristicConfig heuristic_from_token(std::string_view token);

// The seven configurations compared by the benchmark harness, in column
// order: dlis, vsids, psum, momcombo:32, momcombo:4, pnprod, pnprod-decay.
std::vector<HeuristicConfig> default_bench_heuristics();

// Per-literal additive activity counters: +1 for each literal of every
// clause entered into the database (original clauses at load time, learned
// clauses as they are recorded), divided by decay_divisor every
// decay_period conflicts.
class ActivityTable {
 public:
  ActivityTable(int num_vars, double decay_divisor, std::uint64_t decay_period);

  double activity(Lit l) const { return act_[l.index()]; }
  void on_clause_added(std::span<const Lit> lits);
  void decay();

  double decay_divisor() const { return decay_divisor_; }
  std::uint64_t decay_period() const { return decay_period_; }
  int num_vars() const { return (static_cast<int>(act_.size()) >> 1) - 1; }

 private:
  std::vector<double> act_;  // by literal index
  double decay_divisor_;
  std::uint64_t decay_period_;
};

// MOM score with frequencies taken over the minimum-size unresolved clauses.
std::int64_t mom_score(std::int64_t f_pos, std::int64_t f_neg, int exponent);

// Chooses the next decision literal (to be asserted true) according to cfg.
// Candidates are unassigned variables occurring in at least one unresolved
// clause. Throws std::logic_error if no candidate exists; the caller must
// check for termination first.
Lit pick_branch(const HeuristicConfig& cfg, const OccurrenceTracker& tracker,
                const ActivityTable& activities, SplitMix64& rng);

}  // namespace pnsat
