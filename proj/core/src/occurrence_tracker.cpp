#include "pnsat/occurrence_tracker.hpp"

#include <stdexcept>

namespace pnsat {

OccurrenceTracker::OccurrenceTracker(const ClauseDb& db, const Assignment& assignment)
    : db_(db), assignment_(assignment) {
  const std::size_t slots = 2 * (static_cast<std::size_t>(db.num_vars()) + 1);
  occur_.resize(slots);
  count_.assign(slots, 0);
}

OccurrenceTracker::AttachResult OccurrenceTracker::attach(int cid) {
  if (cid != attached_)
    throw std::logic_error("OccurrenceTracker::attach: ids must be attached in order");
  ++attached_;

  const auto lits = db_.lits(cid);
  std::int32_t nt = 0, nf = 0;
  for (Lit l : lits) {
    occur_[l.index()].push_back(cid);
    if (assignment_.is_true(l))
      ++nt;
    else if (assignment_.is_false(l))
      ++nf;
  }
  num_true_.push_back(nt);
  num_false_.push_back(nf);

  AttachResult result{ClauseState::Unresolved, Lit{}};
  if (nt > 0) {
    result.state = ClauseState::Satisfied;
    if (!db_.learned(cid)) ++satisfied_originals_;
    return result;
  }
  for (Lit l : lits)
    if (!assignment_.assigned(l.var())) ++count_[l.index()];

  const int free = static_cast<int>(lits.size()) - nf;
  if (free == 0) {
    result.state = ClauseState::Conflicting;
  } else if (free == 1) {
    result.state = ClauseState::Unit;
    result.unit_lit = sole_unassigned_lit(cid);
  }
  return result;
}

void OccurrenceTracker::on_assigned(Lit l, std::vector<int>& newly_unit,
                                    int& conflict) {
  // Clauses where l now holds: those that were unresolved become satisfied,
  // so every still-unassigned literal in them leaves the tally; l itself
  // leaves too (its variable is assigned as of this event).
  for (const std::int32_t cid : occur_[l.index()]) {
    if (num_true_[cid]++ == 0) {
      for (Lit q : db_.lits(cid))
        if (!assignment_.assigned(q.var())) --count_[q.index()];
      --count_[l.index()];
      if (!db_.learned(cid)) ++satisfied_originals_;
    }
  }
  // Clauses where ~l is falsified: still unresolved unless already
  // satisfied; ~l leaves the tally and the clause may turn unit or conflict.
  const Lit nl = ~l;
  for (const std::int32_t cid : occur_[nl.index()]) {
    ++num_false_[cid];
    if (num_true_[cid] != 0) continue;
    --count_[nl.index()];
    const int free = db_.clause_len(cid) - num_false_[cid];
    if (free == 0) {
      if (conflict < 0) conflict = cid;
    } else if (free == 1) {
      newly_unit.push_back(cid);
    }
  }
}

void OccurrenceTracker::on_unassigned(Lit l) {
  const Lit nl = ~l;
  for (const std::int32_t cid : occur_[nl.index()]) {
    --num_false_[cid];
    if (num_true_[cid] == 0) ++count_[nl.index()];
  }
  for (const std::int32_t cid : occur_[l.index()]) {
    if (--num_true_[cid] == 0) {
      for (Lit q : db_.lits(cid))
        if (!assignment_.assigned(q.var())) ++count_[q.index()];
      if (!db_.learned(cid)) --satisfied_originals_;
    }
  }
}

std::int64_t OccurrenceTracker::pos_freq(int var) const {
  const Lit pos(var, false);
  const std::int64_t a = count_[pos.index()];
  const std::int64_t b = count_[(~pos).index()];
  return a >= b ? a : b;
}

std::int64_t OccurrenceTracker::neg_freq(int var) const {
  const Lit pos(var, false);
  const std::int64_t a = count_[pos.index()];
  const std::int64_t b = count_[(~pos).index()];
  return a >= b ? b : a;
}

Lit OccurrenceTracker::positive_polarity(int var) const {
  const Lit pos(var, false);
  return count_[pos.index()] >= count_[(~pos).index()] ? pos : ~pos;
}

std::int64_t OccurrenceTracker::current_pn_product() const {
  std::int64_t total_pos = 0, total_neg = 0;
  for (int v = 1; v <= db_.num_vars(); ++v) {
    total_pos += pos_freq(v);
    total_neg += neg_freq(v);
  }
  return total_pos * total_neg;
}

Lit OccurrenceTracker::sole_unassigned_lit(int cid) const {
  for (Lit l : db_.lits(cid))
    if (!assignment_.assigned(l.var())) return l;
  throw std::logic_error("sole_unassigned_lit: clause has no unassigned literal");
}

}  // namespace pnsat
