#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pnsat/heuristics.hpp"
#include "pnsat/pn_metrics.hpp"
#include "pnsat/solver.hpp"

namespace pnsat {

struct BenchRecord {
  std::string heuristic;  // canonical token
  std::uint64_t instance_seed = 0;
  Status status = Status::Indeterminate;
  std::size_t final_clauses = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t decisions = 0;
  std::int64_t initial_pn_product = 0;
  double wall_time_s = 0.0;
};

struct MatrixParams {
  int num_vars = 100;
  int num_clauses = 426;
  int clause_len = 3;
  int repetitions = 100;
  std::vector<HeuristicConfig> heuristics;  // empty = default_bench_heuristics()
  std::uint64_t seed0 = 1;
  std::uint64_t conflict_budget = 500000;
  AnalysisScheme analysis = AnalysisScheme::FirstUip;
  int jobs = 1;
};

// Paired experiment matrix: repetition i solves the instance seeded with
// seed0 + i, identically for every heuristic. Records are returned
// heuristic-major in (heuristic, repetition) order regardless of jobs, so a
// rerun with the same parameters reproduces the same bytes. on_record (if
// given) fires as each record is produced, in completion order.
std::vector<BenchRecord> run_matrix(
    const MatrixParams& params,
    const std::function<void(const BenchRecord&)>& on_record = {});

struct AggregateStats {
  std::size_t maximum = 0;
  double mean = 0.0;
  double median = 0.0;  // mean of the two middle values for even counts
  int n_runs = 0;
  int excluded = 0;  // indeterminate records left out of the aggregates
};

// Per-heuristic aggregates of final clause counts, in first-appearance
// order. Indeterminate records are excluded and counted.
std::vector<std::pair<std::string, AggregateStats>> aggregate(
    std::span<const BenchRecord> records);

struct SignTestResult {
  int wins_a = 0;  // pairs with a < b
  int wins_b = 0;  // pairs with a > b
  int ties = 0;
  // One-sided binomial tail P[#wins_a or more out of the non-tied pairs
  // under a fair coin]; absent when every pair ties.
  std::optional<double> one_sided_p;
};

SignTestResult paired_sign_test(std::span<const std::uint64_t> a,
                                std::span<const std::uint64_t> b);

struct Table1Params {
  int num_vars = 100;
  int num_clauses = 426;
  int clause_len = 3;
  int instances = 1000;
  std::uint64_t seed0 = 1;
  std::uint64_t conflict_budget = 500000;
  HeuristicConfig heuristic = HeuristicConfig::make(HeuristicKind::PolarityProductDecay);
  AnalysisScheme analysis = AnalysisScheme::FirstUip;
  int jobs = 1;
};

struct Table1Result {
  RegressionResult regression;  // solvable (1/0) on initial PN product
  int instances_used = 0;
  int excluded = 0;  // indeterminate instances left out of the regression
};

// Generates `instances` formulas (seed0 + i), solves each with the
// configured heuristic, and regresses solvability on the initial PN product.
// Requires instances >= 30; throws std::invalid_argument otherwise.
Table1Result table1_experiment(const Table1Params& params);

// CSV with the exact header
//   heuristic,instance_seed,status,final_clauses,conflicts,decisions,initial_pn_product,wall_time_s
std::string records_csv(std::span<const BenchRecord> records);
std::string record_csv_row(const BenchRecord& r);
extern const char* const kRecordsCsvHeader;

// Markdown table with heuristics as columns and maximum/average/median rows.
std::string aggregate_markdown(
    std::span<const std::pair<std::string, AggregateStats>> aggregates);

}  // namespace pnsat
