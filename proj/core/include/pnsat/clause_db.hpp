#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pnsat/formula.hpp"

namespace pnsat {

// Clause storage for the solver: literals live in one flat arena, clauses
// are spans into it. Original clauses come first, learned clauses are
// appended and never deleted, so a clause is learned iff its id is at least
// original_count().
class ClauseDb {
 public:
  ClauseDb(int num_vars, const std::vector<Clause>& original);

  int add_clause(std::span<const Lit> lits);  // returns the new clause id

  int size() const { return static_cast<int>(start_.size()) - 1; }
  int original_count() const { return original_count_; }
  int num_vars() const { return num_vars_; }
  bool learned(int cid) const { return cid >= original_count_; }

  std::span<const Lit> lits(int cid) const {
    return {arena_.data() + start_[cid], arena_.data() + start_[cid + 1]};
  }
  int clause_len(int cid) const { return start_[cid + 1] - start_[cid]; }

 private:
  int num_vars_;
  int original_count_ = 0;
  std::vector<Lit> arena_;
  std::vector<std::int32_t> start_;  // size()+1 offsets into arena_
};

}  // namespace pnsat
