#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "pnsat/formula.hpp"

namespace pnsat {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct DimacsParseResult {
  CnfFormula formula;
  // Tautological clauses are not retained; this counts how many were seen.
  int dropped_tautologies = 0;
};

// Parses DIMACS CNF: 'c' comment lines, one "p cnf <vars> <clauses>" header,
// then clauses as whitespace-separated nonzero integers each terminated by 0.
// Duplicate literals within a clause are removed. Errors carry the offending
// line number.
DimacsParseResult parse_dimacs(std::istream& in);
DimacsParseResult parse_dimacs(const std::string& text);

void write_dimacs(std::ostream& out, const CnfFormula& f);
std::string emit_dimacs(const CnfFormula& f);

}  // namespace pnsat
