#include "pnsat/solver.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>

namespace pnsat {

const char* to_string(Status s) {
  switch (s) {
    case Status::Sat:
      return "SAT";
    case Status::Unsat:
      return "UNSAT";
    case Status::Indeterminate:
      return "INDETERMINATE";
  }
  return "?";
}

Solver::Solver(const CnfFormula& f, SolverOptions options)
    : original_(f),
      options_(std::move(options)),
      db_(f.num_vars, f.clauses),
      assignment_(f.num_vars),
      tracker_(db_, assignment_),
      activities_(f.num_vars, options_.heuristic.decay_divisor,
                  options_.heuristic.decay_period),
      rng_(options_.seed),
      var_level_(static_cast<std::size_t>(f.num_vars) + 1, -1),
      var_reason_(static_cast<std::size_t>(f.num_vars) + 1, -1),
      seen_(static_cast<std::size_t>(f.num_vars) + 1, 0) {
  level_start_.push_back(0);
  stats_.final_clause_count = static_cast<std::size_t>(db_.size());
  for (int cid = 0; cid < db_.original_count(); ++cid) {
    const auto res = tracker_.attach(cid);
    activities_.on_clause_added(db_.lits(cid));
    if (res.state == OccurrenceTracker::ClauseState::Conflicting)
      root_conflict_ = true;
    else if (res.state == OccurrenceTracker::ClauseState::Unit)
      unit_queue_.push_back(cid);
  }
}

bool Solver::all_original_satisfied() const {
  return tracker_.satisfied_original_count() == db_.original_count();
}

void Solver::check_antecedent_unit(Lit forced, int cid) const {
  for (Lit l : db_.lits(cid)) {
    if (l == forced) {
      if (assignment_.assigned(l.var()))
        throw std::logic_error("antecedent check: forced literal already assigned");
      continue;
    }
    if (!assignment_.is_false(l))
      throw std::logic_error("antecedent check: clause not unit at propagation");
  }
}

void Solver::check_asserting(const std::vector<Lit>& learned) const {
  const int current = decision_level();
  if (learned.empty() || var_level_[learned[0].var()] != current)
    throw std::logic_error("asserting check: first literal not at conflict level");
  for (std::size_t i = 0; i < learned.size(); ++i) {
    if (!assignment_.is_false(learned[i]))
      throw std::logic_error("asserting check: learned literal not false");
    if (i > 0 && var_level_[learned[i].var()] >= current)
      throw std::logic_error("asserting check: extra conflict-level literal");
  }
}

void Solver::enqueue(Lit l, int reason_cid) {
  if (options_.check_invariants && reason_cid >= 0)
    check_antecedent_unit(l, reason_cid);
  assignment_.set(l);
  var_level_[l.var()] = decision_level();
  var_reason_[l.var()] = reason_cid;
  trail_.push_back(l);
  int conflict = -1;
  tracker_.on_assigned(l, unit_queue_, conflict);
  if (conflict >= 0 && pending_conflict_ < 0) pending_conflict_ = conflict;
}

void Solver::push_decision(Lit l) {
  level_start_.push_back(static_cast<int>(trail_.size()));
  ++stats_.decisions;
  stats_.max_decision_level = std::max(stats_.max_decision_level, decision_level());
  enqueue(l, -1);
}

int Solver::propagate() {
  while (true) {
    if (pending_conflict_ >= 0) {
      const int conflict = pending_conflict_;
      pending_conflict_ = -1;
      unit_queue_.clear();
      unit_head_ = 0;
      return conflict;
    }
    if (unit_head_ >= unit_queue_.size()) break;
    const int cid = unit_queue_[unit_head_++];
    if (tracker_.clause_satisfied(cid)) continue;
    const Lit forced = tracker_.sole_unassigned_lit(cid);
    ++stats_.propagations;
    enqueue(forced, cid);
  }
  unit_queue_.clear();
  unit_head_ = 0;
  return -1;
}

Solver::AnalysisResult Solver::analyze_conflict(int conflict_cid) const {
  return options_.analysis == AnalysisScheme::FirstUip
             ? analyze_first_uip(conflict_cid)
             : analyze_decision_cut(conflict_cid);
}

Solver::AnalysisResult Solver::analyze_first_uip(int conflict_cid) const {
  AnalysisResult res;
  res.learned.push_back(Lit{});  // slot for the asserting literal
  const int current = decision_level();

  int path = 0;
  int index = static_cast<int>(trail_.size()) - 1;
  Lit pivot{};
  int cid = conflict_cid;

  do {
    for (Lit q : db_.lits(cid)) {
      const int v = q.var();
      if (seen_[v] || var_level_[v] == 0) continue;
      seen_[v] = 1;
      to_clear_.push_back(v);
      if (var_level_[v] == current)
        ++path;
      else
        res.learned.push_back(q);
    }
    while (!seen_[trail_[index].var()]) --index;
    pivot = trail_[index];
    --index;
    cid = var_reason_[pivot.var()];
    --path;
  } while (path > 0);

  res.learned[0] = ~pivot;
  int backjump_level = 0;
  for (std::size_t i = 1; i < res.learned.size(); ++i)
    backjump_level = std::max(backjump_level, var_level_[res.learned[i].var()]);
  res.backjump_level = backjump_level;

  for (const int v : to_clear_) seen_[v] = 0;
  to_clear_.clear();

  if (options_.check_invariants) check_asserting(res.learned);
  return res;
}

Solver::AnalysisResult Solver::analyze_decision_cut(int conflict_cid) const {
  AnalysisResult res;
  int marked = 0;
  const auto mark = [&](Lit q) {
    const int v = q.var();
    if (!seen_[v] && var_level_[v] > 0) {
      seen_[v] = 1;
      to_clear_.push_back(v);
      ++marked;
    }
  };
  for (Lit q : db_.lits(conflict_cid)) mark(q);

  // Resolve every propagated literal away; what remains is the negation of
  // the decisions the conflict depends on. The walk is in reverse trail
  // order, so the conflict-level decision lands first (asserting).
  for (int index = static_cast<int>(trail_.size()) - 1; index >= 0 && marked > 0;
       --index) {
    const Lit l = trail_[index];
    if (!seen_[l.var()]) continue;
    --marked;
    const int reason = var_reason_[l.var()];
    if (reason < 0) {
      res.learned.push_back(~l);
    } else {
      for (Lit q : db_.lits(reason)) mark(q);
    }
  }

  int backjump_level = 0;
  for (std::size_t i = 1; i < res.learned.size(); ++i)
    backjump_level = std::max(backjump_level, var_level_[res.learned[i].var()]);
  res.backjump_level = backjump_level;

  for (const int v : to_clear_) seen_[v] = 0;
  to_clear_.clear();

  if (options_.check_invariants) check_asserting(res.learned);
  return res;
}

void Solver::backjump(int level) {
  if (level >= decision_level())
    throw std::logic_error("backjump: level must be below the current level");
  const std::size_t keep = static_cast<std::size_t>(level_start_[level + 1]);
  while (trail_.size() > keep) {
    const Lit l = trail_.back();
    trail_.pop_back();
    assignment_.clear(l.var());
    tracker_.on_unassigned(l);
    var_level_[l.var()] = -1;
    var_reason_[l.var()] = -1;
  }
  level_start_.resize(static_cast<std::size_t>(level) + 1);
  unit_queue_.clear();
  unit_head_ = 0;
  pending_conflict_ = -1;
}

int Solver::record_learned_clause(const std::vector<Lit>& lits) {
  const int cid = db_.add_clause(lits);
  const auto attach = tracker_.attach(cid);
  activities_.on_clause_added(db_.lits(cid));
  ++stats_.learned_clauses;
  stats_.final_clause_count = static_cast<std::size_t>(db_.size());
  switch (attach.state) {
    case OccurrenceTracker::ClauseState::Unit:
      enqueue(attach.unit_lit, cid);
      break;
    case OccurrenceTracker::ClauseState::Conflicting:
      if (pending_conflict_ < 0) pending_conflict_ = cid;
      break;
    default:
      break;  // possible after a restart; the clause just joins the database
  }
  return cid;
}

Lit Solver::decide() {
  return pick_branch(options_.heuristic, tracker_, activities_, rng_);
}

void Solver::trace_decision(Lit l) {
  *options_.trace << "decision," << decision_level() + 1 << ',' << l.to_dimacs()
                  << ",0," << tracker_.current_pn_product() << '\n';
}

void Solver::trace_conflict(int level, std::size_t learned_len) {
  *options_.trace << "conflict," << level << ",0," << learned_len << ','
                  << tracker_.current_pn_product() << '\n';
}

SolveResult Solver::finish(Status status) {
  stats_.final_clause_count = static_cast<std::size_t>(db_.size());
  SolveResult result;
  result.status = status;
  result.stats = stats_;
  if (status == Status::Sat) {
    result.model.assign(static_cast<std::size_t>(original_.num_vars) + 1, false);
    for (int v = 1; v <= original_.num_vars; ++v)
      result.model[v] = assignment_.value(v) == Value::True;
    if (!satisfies(original_, result.model))
      throw std::logic_error("internal error: SAT model fails substitution");
  }
  return result;
}

SolveResult Solver::solve() {
  if (solved_) throw std::logic_error("Solver::solve may only be called once");
  solved_ = true;

  if (options_.trace)
    *options_.trace << "event,level,literal,learned_len,pn_product\n";

  const auto start = std::chrono::steady_clock::now();
  const auto out_of_time = [&] {
    if (options_.limits.max_seconds <= 0.0) return false;
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    return elapsed.count() >= options_.limits.max_seconds;
  };
  const std::uint64_t max_conflicts = options_.limits.max_conflicts;

  if (root_conflict_) return finish(Status::Unsat);
  if (propagate() >= 0) return finish(Status::Unsat);

  std::uint64_t conflicts_since_restart = 0;
  while (true) {
    if (all_original_satisfied()) return finish(Status::Sat);
    if (out_of_time()) return finish(Status::Indeterminate);

    if (options_.on_decision) options_.on_decision(*this);
    const Lit choice = decide();
    if (options_.trace) trace_decision(choice);
    push_decision(choice);

    int conflict = propagate();
    while (conflict >= 0) {
      if (decision_level() == 0) return finish(Status::Unsat);

      const AnalysisResult analysis = analyze_conflict(conflict);
      ++stats_.conflicts;
      ++conflicts_since_restart;
      const int conflict_level = decision_level();

      int target = analysis.backjump_level;
      if (options_.restart_interval != 0 &&
          conflicts_since_restart >= options_.restart_interval) {
        target = 0;
        conflicts_since_restart = 0;
        ++stats_.restarts;
      }
      backjump(target);
      record_learned_clause(analysis.learned);

      if (activities_.decay_period() != 0 &&
          stats_.conflicts % activities_.decay_period() == 0)
        activities_.decay();

      if (options_.trace) trace_conflict(conflict_level, analysis.learned.size());

      if (max_conflicts != 0 && stats_.conflicts >= max_conflicts)
        return finish(Status::Indeterminate);
      if (stats_.conflicts % 1024 == 0 && out_of_time())
        return finish(Status::Indeterminate);

      conflict = propagate();
    }
  }
}

}  // namespace pnsat
