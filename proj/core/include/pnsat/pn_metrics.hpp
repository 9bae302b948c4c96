#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pnsat/assignment.hpp"
#include "pnsat/formula.hpp"

namespace pnsat {

// Per-variable polarity frequencies over unresolved clauses, split into the
// more frequent polarity (the positive group) and the less frequent one.
// A clause is unresolved when no literal in it is satisfied; only literals
// of unassigned variables are counted. Equal frequencies put the un-negated
// polarity in the positive group.
struct PolarityGroups {
  std::vector<std::int64_t> pos_count;   // p per variable, 1-based
  std::vector<std::int64_t> neg_count;   // n per variable, 1-based
  std::vector<Lit> positive_polarity;    // the positive-group literal per var
  std::int64_t total_positive = 0;       // sum of pos_count
  std::int64_t total_negative = 0;       // sum of neg_count
};

PolarityGroups polarity_groups(const CnfFormula& f,
                               const Assignment* assignment = nullptr);

// Product of the two group totals.
std::int64_t pn_product(const CnfFormula& f,
                        const Assignment* assignment = nullptr);

// Estimate of the product after asserting a variable's positive-group
// polarity, where (pos_freq, neg_freq) are that variable's group frequencies
// and mean_len is the average clause length. The estimate is not clamped and
// can come out negative when the correction terms overshoot.
// Throws std::domain_error when total_pos + total_neg == 0 and
// std::invalid_argument on out-of-range frequencies or mean_len < 1.
double predicted_new_pn_product(double total_pos, double total_neg,
                                double pos_freq, double neg_freq,
                                double mean_len);

struct RegressionResult {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  // slope / slope_stderr; absent when the fit is exact (zero residual
  // variance), where the statistic is undefined.
  std::optional<double> t_stat;
  int n_points = 0;
};

// Simple ordinary least squares y = a + b*x with the classical
// residual-variance standard error for b. Requires at least 3 points and
// non-degenerate x; throws std::invalid_argument otherwise.
RegressionResult ols_simple(std::span<const double> xs,
                            std::span<const double> ys);

struct SweepPoint {
  int num_clauses = 0;
  double mean_pn_product = 0.0;
};

// Mean initial PN product per clause count, averaging seeds_per_point fresh
// instances for each entry of m_values (strictly increasing). Instance i of
// point j is seeded with seed0 + j*seeds_per_point + i.
std::vector<SweepPoint> pn_sweep(int n, int k, const std::vector<int>& m_values,
                                 int seeds_per_point, std::uint64_t seed0);

// CSV renderings. Headers are part of the interface:
//   sweep:      m,mean_pn_product
//   regression: slope,intercept,stderr,t,n
std::string sweep_csv(std::span<const SweepPoint> points);
std::string regression_csv(const RegressionResult& r);

}  // namespace pnsat
