#include "pnsat/generate.hpp"

#include <numeric>
#include <stdexcept>

#include "pnsat/rng.hpp"

namespace pnsat {

CnfFormula generate_ksat(int n, int m, int k, std::uint64_t seed) {
  if (k < 1 || k > n)
    throw std::invalid_argument("generate_ksat: need 1 <= k <= n");
  if (m < 0) throw std::invalid_argument("generate_ksat: need m >= 0");

  SplitMix64 rng(seed);
  CnfFormula f;
  f.num_vars = n;
  f.clauses.reserve(m);

  std::vector<int> vars(n);
  for (int i = 0; i < m; ++i) {
    std::iota(vars.begin(), vars.end(), 1);
    Clause clause;
    clause.lits.reserve(k);
    for (int j = 0; j < k; ++j) {
      const int r = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - j)));
      std::swap(vars[j], vars[r]);
      clause.lits.emplace_back(vars[j], rng.coin());
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace pnsat
