#pragma once

#include <cstdint>

#include "pnsat/formula.hpp"

namespace pnsat {

// Uniform random k-SAT instance: m clauses over n variables, each clause
// drawing k distinct variables by a partial Fisher-Yates shuffle of 1..n and
// giving each a fair-coin polarity. All randomness comes from
// SplitMix64(seed), so identical (n, m, k, seed) produce bit-identical
// formulas on every platform. Repeated clauses across the formula are
// possible, as in the standard uniform model.
// Throws std::invalid_argument unless 1 <= k <= n and m >= 0.
CnfFormula generate_ksat(int n, int m, int k, std::uint64_t seed);

}  // namespace pnsat
