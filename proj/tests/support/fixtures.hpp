#pragma once

#include <string>

#include "pnsat/formula.hpp"

namespace pnsat::testing {

// 12 variables, 11 clauses; the running example used across the suites.
// Hand-tallied facts: 26 literal occurrences (sizes 2,2,2,3,3,3,2,2,3,2,2),
// group totals P=16 / N=10, PN product 160.
inline CnfFormula example_formula() {
  const int raw[11][3] = {
      {-1, -2, 0}, {-1, 3, 0},  {-3, -4, 0}, {2, 4, 5, /*pad*/},
      {-5, 6, -7}, {2, 7, 8},   {-8, -9, 0}, {-8, 10, 0},
      {9, -10, 11}, {-10, -12, 0}, {-11, 12, 0}};
  const int sizes[11] = {2, 2, 2, 3, 3, 3, 2, 2, 3, 2, 2};

  CnfFormula f;
  f.num_vars = 12;
  for (int i = 0; i < 11; ++i) {
    Clause c;
    for (int j = 0; j < sizes[i]; ++j) c.lits.push_back(Lit::from_dimacs(raw[i][j]));
    f.clauses.push_back(std::move(c));
  }
  return f;
}

inline std::string example_dimacs() {
  return
      "p cnf 12 11\n"
      "-1 -2 0\n"
      "-1 3 0\n"
      "-3 -4 0\n"
      "2 4 5 0\n"
      "-5 6 -7 0\n"
      "2 7 8 0\n"
      "-8 -9 0\n"
      "-8 10 0\n"
      "9 -10 11 0\n"
      "-10 -12 0\n"
      "-11 12 0\n";
}

}  // namespace pnsat::testing
