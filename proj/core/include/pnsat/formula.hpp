#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <vector>

namespace pnsat {

// A literal: 1-based variable index plus polarity. Packed so that the
// positive literal of variable v has dense index 2v and the negated one
// 2v+1; per-literal tables are indexed with index(). The packing also makes
// the default ordering "lower variable first, positive polarity first",
// which is the deterministic tie-break order used by the heuristics.
class Lit {
 public:
  constexpr Lit() = default;
  constexpr Lit(int var, bool negated) : code_(2 * var + (negated ? 1 : 0)) {
    assert(var >= 1);
  }

  // DIMACS encoding: 3 -> x3, -3 -> not(x3). d must be nonzero.
  static constexpr Lit from_dimacs(int d) {
    return d > 0 ? Lit(d, false) : Lit(-d, true);
  }

  constexpr int var() const { return code_ >> 1; }
  constexpr bool negated() const { return (code_ & 1) != 0; }
  constexpr bool valid() const { return code_ >= 2; }
  constexpr int index() const { return code_; }
  constexpr int to_dimacs() const { return negated() ? -var() : var(); }

  constexpr Lit operator~() const {
    Lit l;
    l.code_ = code_ ^ 1;
    return l;
  }

  friend constexpr auto operator<=>(Lit, Lit) = default;

 private:
  int code_ = 0;
};

struct Clause {
  std::vector<Lit> lits;
  bool learned = false;
};

// Removes duplicate literals in place (first occurrence kept); returns true
// when the clause is a tautology (contains both polarities of a variable).
bool normalize_clause(std::vector<Lit>& lits);

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  std::size_t clause_count() const { return clauses.size(); }
};

// Mean number of literals per clause. Throws std::domain_error when the
// formula has no clauses.
double avg_clause_len(const CnfFormula& f);

// True when the total assignment `model` (indexed 1..num_vars) satisfies
// every clause of f.
bool satisfies(const CnfFormula& f, const std::vector<bool>& model);

}  // namespace pnsat
