#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "pnsat/assignment.hpp"
#include "pnsat/clause_db.hpp"
#include "pnsat/formula.hpp"
#include "pnsat/heuristics.hpp"
#include "pnsat/occurrence_tracker.hpp"
#include "pnsat/rng.hpp"

namespace pnsat {

enum class Status { Sat, Unsat, Indeterminate };
const char* to_string(Status s);

struct SolveStats {
  // Conflicts counts the conflicts that were analyzed into a learned clause;
  // a conflict at decision level 0 terminates the search and is not counted,
  // so final_clause_count - original count == conflicts == learned_clauses.
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t learned_clauses = 0;
  std::uint64_t restarts = 0;
  std::size_t final_clause_count = 0;
  int max_decision_level = 0;
};

struct SolveResult {
  Status status = Status::Indeterminate;
  // Complete assignment indexed 1..num_vars, only for Sat. Variables the
  // search left unassigned are filled with false.
  std::vector<bool> model;
  SolveStats stats;
};

struct SolveLimits {
  std::uint64_t max_conflicts = 0;  // 0 = unlimited
  double max_seconds = 0.0;         // 0 = unlimited
};

// How conflicts are turned into learned clauses. FirstUip resolves to the
// first unique implication point of the conflict level. DecisionCut resolves
// every propagated literal away, learning the negation of the decisions that
// led to the conflict (the scheme older solvers used); clauses are longer and
// prune less.
enum class AnalysisScheme { FirstUip, DecisionCut };

struct SolverOptions {
  HeuristicConfig heuristic = HeuristicConfig::make(HeuristicKind::PolarityProductDecay);
  std::uint64_t seed = 0;
  SolveLimits limits;
  AnalysisScheme analysis = AnalysisScheme::FirstUip;
  std::uint64_t restart_interval = 0;  // conflicts between restarts; 0 = off
  // Optional CSV trace, one row per decision and per conflict:
  //   event,level,literal,learned_len,pn_product
  std::ostream* trace = nullptr;
  // Invoked before each decision; used by the property suites to compare
  // incremental state against from-scratch recounts.
  std::function<void(const class Solver&)> on_decision;
  // Extra internal checks (antecedents unit at propagation time, learned
  // clauses asserting). Violations throw std::logic_error.
  bool check_invariants = false;
};

// Conflict-driven clause learning over counter-based propagation: decisions
// come from the configured branching heuristic, unit propagation runs to
// fixpoint in FIFO order, conflicts are analyzed to the first unique
// implication point, and the search backjumps to the second-highest level in
// the learned clause. Learned clauses are never deleted. A single instance
// owns all its state; distinct instances are independent.
class Solver {
 public:
  Solver(const CnfFormula& f, SolverOptions options);

  // Runs the search to completion (or to the configured budget). May be
  // called once; the solver keeps its final state for inspection.
  SolveResult solve();

  // Stepping interface, usable directly in tests and tools.
  void push_decision(Lit l);
  // Runs unit propagation to fixpoint; returns the conflicting clause id or
  // -1. Status::Unsat is latched when a conflict hits at level 0.
  int propagate();

  struct AnalysisResult {
    std::vector<Lit> learned;  // asserting literal first
    int backjump_level = 0;
  };
  // Analyzes with the configured scheme.
  AnalysisResult analyze_conflict(int conflict_cid) const;

  void backjump(int level);
  // Appends a learned clause and asserts its first literal at the current
  // level. Returns the new clause id.
  int record_learned_clause(const std::vector<Lit>& lits);

  // Inspection.
  int decision_level() const { return static_cast<int>(level_start_.size()) - 1; }
  const std::vector<Lit>& trail() const { return trail_; }
  const std::vector<int>& level_starts() const { return level_start_; }
  int level_of(int var) const { return var_level_[var]; }
  int antecedent_of(int var) const { return var_reason_[var]; }  // -1 = none
  const Assignment& assignment() const { return assignment_; }
  const ClauseDb& clause_db() const { return db_; }
  const OccurrenceTracker& tracker() const { return tracker_; }
  const ActivityTable& activities() const { return activities_; }
  const SolveStats& stats() const { return stats_; }
  bool all_original_satisfied() const;

 private:
  AnalysisResult analyze_first_uip(int conflict_cid) const;
  AnalysisResult analyze_decision_cut(int conflict_cid) const;
  void enqueue(Lit l, int reason_cid);
  Lit decide();
  void check_antecedent_unit(Lit forced, int cid) const;
  void check_asserting(const std::vector<Lit>& learned) const;
  void trace_decision(Lit l);
  void trace_conflict(int level, std::size_t learned_len);
  SolveResult finish(Status status);

  CnfFormula original_;  // kept for the final model substitution check
  SolverOptions options_;
  ClauseDb db_;
  Assignment assignment_;
  OccurrenceTracker tracker_;
  ActivityTable activities_;
  SplitMix64 rng_;

  std::vector<Lit> trail_;
  std::vector<int> level_start_;  // trail index where each level begins
  std::vector<int> var_level_;
  std::vector<int> var_reason_;

  std::vector<int> unit_queue_;  // pending unit clause ids, FIFO
  std::size_t unit_head_ = 0;
  int pending_conflict_ = -1;

  // Scratch for analyze_conflict.
  mutable std::vector<char> seen_;
  mutable std::vector<int> to_clear_;

  SolveStats stats_;
  bool root_conflict_ = false;
  bool solved_ = false;
};

}  // namespace pnsat
