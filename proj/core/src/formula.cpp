#include "pnsat/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace pnsat {

bool normalize_clause(std::vector<Lit>& lits) {
  std::vector<Lit> kept;
  kept.reserve(lits.size());
  for (Lit l : lits) {
    if (std::find(kept.begin(), kept.end(), ~l) != kept.end()) return true;
    if (std::find(kept.begin(), kept.end(), l) == kept.end()) kept.push_back(l);
  }
  lits = std::move(kept);
  return false;
}

double avg_clause_len(const CnfFormula& f) {
  if (f.clauses.empty())
    throw std::domain_error("average clause length of an empty formula");
  std::size_t total = 0;
  for (const Clause& c : f.clauses) total += c.lits.size();
  return static_cast<double>(total) / static_cast<double>(f.clauses.size());
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& model) {
  for (const Clause& c : f.clauses) {
    bool sat = false;
    for (Lit l : c.lits) {
      if (model[l.var()] != l.negated()) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace pnsat
