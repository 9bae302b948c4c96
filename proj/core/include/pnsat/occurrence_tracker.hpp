#pragma once

#include <cstdint>
#include <vector>

#include "pnsat/assignment.hpp"
#include "pnsat/clause_db.hpp"

namespace pnsat {

// Counter-based clause watching plus the dynamic per-literal frequencies the
// branching heuristics need. For every clause it keeps counts of satisfied
// and falsified literals over full occurrence lists; from those it maintains,
// for every literal, the number of its occurrences that are unassigned and
// inside unresolved clauses (clauses with no satisfied literal).
//
// Invariant after every event: count(l) equals a from-scratch recount over
// the attached clauses under the current assignment.
//
// Events must be delivered in trail order: attach() for a new clause,
// on_assigned() right after the assignment is written, on_unassigned() in
// exact reverse trail order right after the assignment is cleared.
class OccurrenceTracker {
 public:
  enum class ClauseState { Satisfied, Unresolved, Unit, Conflicting };

  struct AttachResult {
    ClauseState state;
    Lit unit_lit;  // valid only when state == Unit
  };

  OccurrenceTracker(const ClauseDb& db, const Assignment& assignment);

  // Registers the next unattached clause id. Clause counters are derived
  // from the current assignment.
  AttachResult attach(int cid);

  // The variable of l must already be set (making l true). Clause ids that
  // became unit are appended to newly_unit in occurrence-list order; the
  // first clause that became fully falsified (if any) lands in conflict,
  // which must be -1 on entry.
  void on_assigned(Lit l, std::vector<int>& newly_unit, int& conflict);

  // The variable of l must already be cleared; l is the literal that was
  // true. Exact inverse of on_assigned.
  void on_unassigned(Lit l);

  std::int64_t count(Lit l) const { return count_[l.index()]; }

  // p and n of a variable: the larger and smaller of its two polarity
  // counts. Ties put the un-negated literal in the positive group.
  std::int64_t pos_freq(int var) const;
  std::int64_t neg_freq(int var) const;
  Lit positive_polarity(int var) const;

  // P*N over all attached clauses under the current assignment.
  std::int64_t current_pn_product() const;

  bool clause_satisfied(int cid) const { return num_true_[cid] > 0; }
  bool clause_unresolved(int cid) const { return num_true_[cid] == 0; }
  int clause_free_size(int cid) const {
    return db_.clause_len(cid) - num_true_[cid] - num_false_[cid];
  }
  // The single unassigned literal of a unit clause.
  Lit sole_unassigned_lit(int cid) const;

  int attached_count() const { return attached_; }
  int satisfied_original_count() const { return satisfied_originals_; }

  const ClauseDb& db() const { return db_; }
  const Assignment& assignment() const { return assignment_; }

 private:
  const ClauseDb& db_;
  const Assignment& assignment_;
  std::vector<std::vector<std::int32_t>> occur_;  // by literal index
  std::vector<std::int64_t> count_;               // by literal index
  std::vector<std::int32_t> num_true_;            // by clause id
  std::vector<std::int32_t> num_false_;           // by clause id
  int attached_ = 0;
  int satisfied_originals_ = 0;
};

}  // namespace pnsat
