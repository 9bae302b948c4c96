#include "pnsat/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pnsat/generate.hpp"

namespace pnsat {

const char* const kRecordsCsvHeader =
    "heuristic,instance_seed,status,final_clauses,conflicts,decisions,"
    "initial_pn_product,wall_time_s";

namespace {

BenchRecord solve_instance(const HeuristicConfig& heuristic, int n, int m, int k,
                           std::uint64_t seed, std::uint64_t conflict_budget,
                           AnalysisScheme analysis) {
  const CnfFormula f = generate_ksat(n, m, k, seed);

  BenchRecord rec;
  rec.heuristic = heuristic.summary();
  rec.instance_seed = seed;
  rec.initial_pn_product = pn_product(f);

  SolverOptions opts;
  opts.heuristic = heuristic;
  opts.seed = seed;
  opts.limits.max_conflicts = conflict_budget;
  opts.analysis = analysis;

  const auto t0 = std::chrono::steady_clock::now();
  Solver solver(f, std::move(opts));
  const SolveResult res = solver.solve();
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;

  rec.status = res.status;
  rec.final_clauses = res.stats.final_clause_count;
  rec.conflicts = res.stats.conflicts;
  rec.decisions = res.stats.decisions;
  rec.wall_time_s = dt.count();
  return rec;
}

// Runs `tasks` work items across `jobs` threads. Items are claimed off an
// atomic counter; results land in caller-owned slots, so the output order
// never depends on scheduling.
void run_tasks(int tasks, int jobs, const std::function<void(int)>& run_one) {
  jobs = std::clamp(jobs, 1, tasks > 0 ? tasks : 1);
  if (jobs <= 1) {
    for (int t = 0; t < tasks; ++t) run_one(t);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const int t = next.fetch_add(1);
        if (t >= tasks) break;
        run_one(t);
      }
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace

std::vector<BenchRecord> run_matrix(
    const MatrixParams& params,
    const std::function<void(const BenchRecord&)>& on_record) {
  if (params.repetitions < 1)
    throw std::invalid_argument("run_matrix: repetitions must be at least 1");
  const std::vector<HeuristicConfig> heuristics =
      params.heuristics.empty() ? default_bench_heuristics() : params.heuristics;

  const int reps = params.repetitions;
  const int tasks = static_cast<int>(heuristics.size()) * reps;
  std::vector<BenchRecord> records(tasks);
  std::mutex emit_mutex;

  run_tasks(tasks, params.jobs, [&](int t) {
    const int h = t / reps;
    const int i = t % reps;
    records[t] = solve_instance(heuristics[h], params.num_vars,
                                params.num_clauses, params.clause_len,
                                params.seed0 + static_cast<std::uint64_t>(i),
                                params.conflict_budget, params.analysis);
    if (on_record) {
      const std::scoped_lock lock(emit_mutex);
      on_record(records[t]);
    }
  });
  return records;
}

std::vector<std::pair<std::string, AggregateStats>> aggregate(
    std::span<const BenchRecord> records) {
  std::vector<std::string> order;
  std::vector<std::vector<std::size_t>> counts;
  std::vector<int> excluded;

  for (const BenchRecord& r : records) {
    std::size_t g = 0;
    for (; g < order.size(); ++g)
      if (order[g] == r.heuristic) break;
    if (g == order.size()) {
      order.push_back(r.heuristic);
      counts.emplace_back();
      excluded.push_back(0);
    }
    if (r.status == Status::Indeterminate)
      ++excluded[g];
    else
      counts[g].push_back(r.final_clauses);
  }

  std::vector<std::pair<std::string, AggregateStats>> out;
  out.reserve(order.size());
  for (std::size_t g = 0; g < order.size(); ++g) {
    AggregateStats a;
    a.excluded = excluded[g];
    a.n_runs = static_cast<int>(counts[g].size());
    if (!counts[g].empty()) {
      std::vector<std::size_t>& v = counts[g];
      std::sort(v.begin(), v.end());
      a.maximum = v.back();
      double sum = 0;
      for (const std::size_t c : v) sum += static_cast<double>(c);
      a.mean = sum / static_cast<double>(v.size());
      const std::size_t mid = v.size() / 2;
      a.median = v.size() % 2 == 1
                     ? static_cast<double>(v[mid])
                     : (static_cast<double>(v[mid - 1]) + static_cast<double>(v[mid])) / 2.0;
    }
    out.emplace_back(order[g], a);
  }
  return out;
}

SignTestResult paired_sign_test(std::span<const std::uint64_t> a,
                                std::span<const std::uint64_t> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("paired_sign_test: mismatched lengths");

  SignTestResult r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i])
      ++r.wins_a;
    else if (a[i] > b[i])
      ++r.wins_b;
    else
      ++r.ties;
  }

  const int trials = r.wins_a + r.wins_b;
  if (trials == 0) return r;  // all ties: the tail probability is undefined

  // One-sided binomial tail at 1/2 via log-space terms.
  const double log_half_pow = -static_cast<double>(trials) * std::log(2.0);
  double p = 0.0;
  for (int j = r.wins_a; j <= trials; ++j) {
    const double log_comb = std::lgamma(trials + 1.0) - std::lgamma(j + 1.0) -
                            std::lgamma(trials - j + 1.0);
    p += std::exp(log_comb + log_half_pow);
  }
  r.one_sided_p = std::min(p, 1.0);
  return r;
}

Table1Result table1_experiment(const Table1Params& params) {
  if (params.instances < 30)
    throw std::invalid_argument("table1_experiment: need at least 30 instances");

  struct Point {
    double x = 0;
    double y = 0;
    bool used = false;
  };
  std::vector<Point> points(params.instances);

  run_tasks(params.instances, params.jobs, [&](int i) {
    const BenchRecord rec = solve_instance(
        params.heuristic, params.num_vars, params.num_clauses, params.clause_len,
        params.seed0 + static_cast<std::uint64_t>(i), params.conflict_budget,
        params.analysis);
    if (rec.status == Status::Indeterminate) return;
    points[i].x = static_cast<double>(rec.initial_pn_product);
    points[i].y = rec.status == Status::Sat ? 1.0 : 0.0;
    points[i].used = true;
  });

  std::vector<double> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const Point& p : points) {
    if (!p.used) continue;
    xs.push_back(p.x);
    ys.push_back(p.y);
  }

  Table1Result result;
  result.instances_used = static_cast<int>(xs.size());
  result.excluded = params.instances - result.instances_used;
  result.regression = ols_simple(xs, ys);
  return result;
}

std::string record_csv_row(const BenchRecord& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s,%llu,%s,%zu,%llu,%llu,%lld,%.6f",
                r.heuristic.c_str(),
                static_cast<unsigned long long>(r.instance_seed),
                to_string(r.status), r.final_clauses,
                static_cast<unsigned long long>(r.conflicts),
                static_cast<unsigned long long>(r.decisions),
                static_cast<long long>(r.initial_pn_product), r.wall_time_s);
  return buf;
}

std::string records_csv(std::span<const BenchRecord> records) {
  std::ostringstream out;
  out << kRecordsCsvHeader << '\n';
  for (const BenchRecord& r : records) out << record_csv_row(r) << '\n';
  return out.str();
}

std::string aggregate_markdown(
    std::span<const std::pair<std::string, AggregateStats>> aggregates) {
  std::ostringstream out;
  out << "|  |";
  for (const auto& [name, stats] : aggregates) out << ' ' << name << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < aggregates.size(); ++i) out << "---|";
  out << '\n';

  char buf[64];
  out << "| maximum |";
  for (const auto& [name, stats] : aggregates) out << ' ' << stats.maximum << " |";
  out << "\n| average |";
  for (const auto& [name, stats] : aggregates) {
    std::snprintf(buf, sizeof(buf), "%.3f", stats.mean);
    out << ' ' << buf << " |";
  }
  out << "\n| median |";
  for (const auto& [name, stats] : aggregates) {
    std::snprintf(buf, sizeof(buf), "%.1f", stats.median);
    out << ' ' << buf << " |";
  }
  out << '\n';
  return out.str();
}

}  // namespace pnsat
