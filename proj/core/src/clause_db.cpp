#include "pnsat/clause_db.hpp"

namespace pnsat {

ClauseDb::ClauseDb(int num_vars, const std::vector<Clause>& original)
    : num_vars_(num_vars) {
  std::size_t total = 0;
  for (const Clause& c : original) total += c.lits.size();
  arena_.reserve(total);
  start_.reserve(original.size() + 1);
  start_.push_back(0);
  for (const Clause& c : original) {
    arena_.insert(arena_.end(), c.lits.begin(), c.lits.end());
    start_.push_back(static_cast<std::int32_t>(arena_.size()));
  }
  original_count_ = static_cast<int>(original.size());
}

int ClauseDb::add_clause(std::span<const Lit> lits) {
  arena_.insert(arena_.end(), lits.begin(), lits.end());
  start_.push_back(static_cast<std::int32_t>(arena_.size()));
  return size() - 1;
}

}  // namespace pnsat
