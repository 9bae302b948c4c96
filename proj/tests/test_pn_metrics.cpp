#include <gtest/gtest.h>

#include <cmath>

#include "pnsat/generate.hpp"
#include "pnsat/pn_metrics.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace pnsat {
namespace {

TEST(PolarityGroups, ExampleHandTally) {
  const CnfFormula f = testing::example_formula();
  const PolarityGroups g = polarity_groups(f);
  EXPECT_EQ(g.total_positive, 16);
  EXPECT_EQ(g.total_negative, 10);

  // Spot checks from the hand tally.
  EXPECT_EQ(g.pos_count[1], 2);
  EXPECT_EQ(g.neg_count[1], 0);
  EXPECT_EQ(g.positive_polarity[1], Lit(1, true));  // ~x1 occurs twice
  EXPECT_EQ(g.pos_count[2], 2);
  EXPECT_EQ(g.neg_count[2], 1);
  EXPECT_EQ(g.positive_polarity[2], Lit(2, false));
  EXPECT_EQ(g.positive_polarity[3], Lit(3, false));  // 1-1 tie -> un-negated
  EXPECT_EQ(g.pos_count[8], 2);
  EXPECT_EQ(g.neg_count[8], 1);
}

TEST(PolarityGroups, EmptyFormula) {
  CnfFormula f;
  f.num_vars = 4;
  const PolarityGroups g = polarity_groups(f);
  EXPECT_EQ(g.total_positive, 0);
  EXPECT_EQ(g.total_negative, 0);
}

TEST(PolarityGroups, SatisfiedClausesAreExcluded) {
  CnfFormula f;
  f.num_vars = 2;
  f.clauses.push_back(Clause{{Lit(1, false), Lit(2, false)}, false});
  f.clauses.push_back(Clause{{Lit(1, false), Lit(2, true)}, false});
  Assignment a(2);
  a.set(Lit(1, false));  // x1 = true satisfies both clauses
  const PolarityGroups g = polarity_groups(f, &a);
  EXPECT_EQ(g.total_positive, 0);
  EXPECT_EQ(g.total_negative, 0);
  EXPECT_EQ(pn_product(f, &a), 0);
}

TEST(PnProduct, ExampleAndEmpty) {
  EXPECT_EQ(pn_product(testing::example_formula()), 160);
  EXPECT_EQ(pn_product(CnfFormula{}), 0);
}

TEST(PnProduct, MatchesNaiveTallyOnGeneratedInstance) {
  const CnfFormula f = generate_ksat(100, 426, 3, 1);

  // Independent double-loop tally.
  std::vector<std::int64_t> occ(2 * (f.num_vars + 1), 0);
  for (const Clause& c : f.clauses)
    for (Lit l : c.lits) ++occ[l.index()];
  std::int64_t p = 0, n = 0;
  for (int v = 1; v <= f.num_vars; ++v) {
    const std::int64_t a = occ[Lit(v, false).index()];
    const std::int64_t b = occ[Lit(v, true).index()];
    p += a >= b ? a : b;
    n += a >= b ? b : a;
  }
  EXPECT_EQ(pn_product(f), p * n);
}

TEST(PnProduct, TieLabelingInvariance) {
  // Swapping which group a tied variable lands in cannot change P*N
  // contributions; recount with the flipped tie rule and compare.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CnfFormula f = generate_ksat(30, 120, 3, seed);
    std::vector<std::int64_t> occ(2 * (f.num_vars + 1), 0);
    for (const Clause& c : f.clauses)
      for (Lit l : c.lits) ++occ[l.index()];
    std::int64_t p_flipped = 0, n_flipped = 0;
    for (int v = 1; v <= f.num_vars; ++v) {
      const std::int64_t a = occ[Lit(v, false).index()];
      const std::int64_t b = occ[Lit(v, true).index()];
      // Ties put the negated polarity in the positive group instead.
      p_flipped += b >= a ? b : a;
      n_flipped += b >= a ? a : b;
    }
    EXPECT_EQ(pn_product(f), p_flipped * n_flipped);
  }
}

TEST(PnProduct, ZeroUnderCompleteSatisfyingAssignment) {
  const CnfFormula f = generate_ksat(12, 40, 3, 3);
  const auto model = testing::brute_force_model(f);
  ASSERT_TRUE(model.has_value());
  Assignment a(f.num_vars);
  for (int v = 1; v <= f.num_vars; ++v)
    a.set(Lit(v, ((*model >> (v - 1)) & 1) == 0));
  EXPECT_EQ(pn_product(f, &a), 0);
}

TEST(PredictedNewPnProduct, HandEvaluatedFixtures) {
  EXPECT_NEAR(predicted_new_pn_product(10, 5, 2, 1, 3), 128.0 / 9.0, 1e-9);
  EXPECT_DOUBLE_EQ(predicted_new_pn_product(1, 1, 0, 0, 1), 1.0);

  // Example formula state: P=16, N=10, k=26/11, variable x2 has p=2, n=1.
  const double k = 26.0 / 11.0;
  const double first = 16.0 - 2.0 - 2.0 * (k - 1.0) * (16.0 / 26.0);
  const double second = 10.0 - 1.0 - 2.0 * (k - 1.0) * (10.0 / 26.0);
  EXPECT_NEAR(predicted_new_pn_product(16, 10, 2, 1, k), first * second, 1e-12);
  EXPECT_NEAR(first * second, 97.9703, 1e-4);
}

TEST(PredictedNewPnProduct, NoRemovalIidentity) {
  for (double total_pos : {3.0, 10.0, 25.0})
    for (double total_neg : {1.0, 7.0})
      EXPECT_DOUBLE_EQ(
          predicted_new_pn_product(total_pos, total_neg, 0, 0, 2.5),
          total_pos * total_neg);
}

TEST(PredictedNewPnProduct, Errors) {
  EXPECT_THROW(predicted_new_pn_product(0, 0, 0, 0, 2), std::domain_error);
  EXPECT_THROW(predicted_new_pn_product(5, 5, 6, 0, 2), std::invalid_argument);
  EXPECT_THROW(predicted_new_pn_product(5, 5, 1, 1, 0.5), std::invalid_argument);
}

TEST(OlsSimple, ExactLinearData) {
  const double xs[] = {1, 2, 3};
  const double ys[] = {2, 4, 6};
  const RegressionResult r = ols_simple(xs, ys);
  EXPECT_DOUBLE_EQ(r.slope, 2.0);
  EXPECT_DOUBLE_EQ(r.intercept, 0.0);
  EXPECT_DOUBLE_EQ(r.slope_stderr, 0.0);
  EXPECT_FALSE(r.t_stat.has_value());  // zero residual variance
  EXPECT_EQ(r.n_points, 3);
}

TEST(OlsSimple, HandComputedDataset) {
  const double xs[] = {1, 2, 3, 4};
  const double ys[] = {2, 3, 5, 6};
  const RegressionResult r = ols_simple(xs, ys);
  EXPECT_NEAR(r.slope, 1.4, 1e-12);
  EXPECT_NEAR(r.intercept, 0.5, 1e-12);
  EXPECT_NEAR(r.slope_stderr, 0.1414213562373096, 1e-12);
  ASSERT_TRUE(r.t_stat.has_value());
  EXPECT_NEAR(*r.t_stat, 9.899494936611658, 1e-9);
}

TEST(OlsSimple, Preconditions) {
  const double xs2[] = {0, 1};
  const double ys2[] = {0, 1};
  EXPECT_THROW(ols_simple(xs2, ys2), std::invalid_argument);

  const double flat_x[] = {2, 2, 2};
  const double any_y[] = {1, 2, 3};
  EXPECT_THROW(ols_simple(flat_x, any_y), std::invalid_argument);
}

TEST(PnSweep, SinglePointOfEmptyFormulas) {
  const auto points = pn_sweep(10, 3, {0}, 5, 1);
  ASSERT_EQ(points.size(), 1u);
  EXPECT_EQ(points[0].num_clauses, 0);
  EXPECT_DOUBLE_EQ(points[0].mean_pn_product, 0.0);
}

TEST(PnSweep, RequiresStrictlyIncreasing) {
  EXPECT_THROW(pn_sweep(10, 3, {100, 100}, 2, 1), std::invalid_argument);
  EXPECT_THROW(pn_sweep(10, 3, {200, 100}, 2, 1), std::invalid_argument);
}

TEST(PnSweep, MonotoneAtSmallScale) {
  const auto points = pn_sweep(50, 3, {50, 100, 150, 200}, 10, 7);
  ASSERT_EQ(points.size(), 4u);
  for (std::size_t i = 1; i < points.size(); ++i)
    EXPECT_GT(points[i].mean_pn_product, points[i - 1].mean_pn_product);
}

TEST(PnSweep, InterpolationPointBetweenNeighbors) {
  const auto points = pn_sweep(100, 3, {400, 426, 500}, 30, 1);
  ASSERT_EQ(points.size(), 3u);
  EXPECT_GT(points[1].mean_pn_product, points[0].mean_pn_product);
  EXPECT_LT(points[1].mean_pn_product, points[2].mean_pn_product);
}

TEST(Csv, SweepAndRegressionHeaders) {
  const auto points = pn_sweep(10, 3, {5, 10}, 2, 1);
  const std::string csv = sweep_csv(points);
  EXPECT_EQ(csv.rfind("m,mean_pn_product\n", 0), 0u);
  EXPECT_EQ(csv.back(), '\n');

  const double xs[] = {1, 2, 3, 4};
  const double ys[] = {2, 3, 5, 6};
  const std::string reg = regression_csv(ols_simple(xs, ys));
  EXPECT_EQ(reg.rfind("slope,intercept,stderr,t,n\n", 0), 0u);
  EXPECT_EQ(reg.back(), '\n');
}

}  // namespace
}  // namespace pnsat
