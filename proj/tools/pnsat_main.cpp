// pnsat command-line front-end.
//
// Subcommands: solve, gen, bench, regress, pn-sweep, pn. Every run is fully
// determined by its flags; CSV outputs start with a "# cmd:" comment echoing
// the invocation so results stay attributable. Data goes to stdout or the -o
// file, diagnostics to stderr. `solve` uses the usual SAT exit codes:
// 10 satisfiable, 20 unsatisfiable, 30 undecided within budget.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pnsat/bench.hpp"
#include "pnsat/dimacs.hpp"
#include "pnsat/generate.hpp"
#include "pnsat/pn_metrics.hpp"
#include "pnsat/solver.hpp"

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitIndeterminate = 30;

std::string command_line(int argc, char** argv) {
  std::ostringstream out;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) out << ' ';
    out << argv[i];
  }
  return out.str();
}

struct HeuristicFlags {
  std::string name = "pnprod-decay";
  std::int64_t combo_weight = 32;
  int mom_k = 1;
  double decay_divisor = 2.0;
  std::uint64_t decay_period = 256;
  std::string tie_break = "default";

  void attach(CLI::App* cmd) {
    cmd->add_option("--heuristic", name,
                    "dlis|vsids|psum|pnprod|momcombo|mom|pnprod-decay");
    cmd->add_option("--combo-weight", combo_weight, "c in (p+n)*c + p*n");
    cmd->add_option("--mom-k", mom_k, "exponent in the MOM score");
    cmd->add_option("--decay-divisor", decay_divisor,
                    "activity divisor (vsids, pnprod-decay)");
    cmd->add_option("--decay-period", decay_period, "conflicts between decays");
    cmd->add_option("--tie-break", tie_break, "index|random");
  }

  pnsat::HeuristicConfig resolve() const {
    pnsat::HeuristicConfig cfg = pnsat::heuristic_from_token(name);
    cfg.combo_weight = combo_weight;
    cfg.mom_exponent = mom_k;
    cfg.decay_divisor = decay_divisor;
    cfg.decay_period = decay_period;
    if (tie_break == "index")
      cfg.tie_break = pnsat::TieBreak::ByIndex;
    else if (tie_break == "random")
      cfg.tie_break = pnsat::TieBreak::SeededRandom;
    else if (tie_break != "default")
      throw CLI::ValidationError("--tie-break", "expected index or random");
    return cfg;
  }
};

pnsat::AnalysisScheme parse_analysis(const std::string& name) {
  if (name == "1uip") return pnsat::AnalysisScheme::FirstUip;
  if (name == "decision") return pnsat::AnalysisScheme::DecisionCut;
  throw std::runtime_error("bad --analysis (expected 1uip or decision): " + name);
}

pnsat::CnfFormula load_formula(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  pnsat::DimacsParseResult parsed = pnsat::parse_dimacs(in);
  if (parsed.dropped_tautologies > 0)
    std::cerr << "c dropped " << parsed.dropped_tautologies
              << " tautological clause(s)\n";
  return std::move(parsed.formula);
}

// Parses "100:800:100" (inclusive range) or "100,200,426".
std::vector<int> parse_m_values(const std::string& spec) {
  std::vector<int> out;
  if (spec.find(':') != std::string::npos) {
    int lo = 0, hi = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec);
    if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
        step <= 0 || lo > hi)
      throw std::runtime_error("bad --m range: " + spec);
    for (int m = lo; m <= hi; m += step) out.push_back(m);
  } else {
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ','))
      if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw std::runtime_error("bad --m list: " + spec);
  return out;
}

std::vector<pnsat::HeuristicConfig> parse_heuristic_list(const std::string& spec) {
  if (spec.empty()) return pnsat::default_bench_heuristics();
  std::vector<pnsat::HeuristicConfig> out;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) out.push_back(pnsat::heuristic_from_token(tok));
  if (out.empty()) throw std::runtime_error("empty --heuristics list");
  return out;
}

// Writes `body` (prefixed with the command echo) to path or stdout.
void write_output(const std::string& path, const std::string& cmd,
                  const std::string& body) {
  if (path.empty()) {
    std::cout << "# cmd: " << cmd << '\n' << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "# cmd: " << cmd << '\n' << body;
}

int cmd_solve(const std::string& file, const HeuristicFlags& hflags,
              std::uint64_t seed, std::uint64_t conflicts, double time_limit,
              std::uint64_t restart_interval, const std::string& analysis,
              const std::string& trace_path, const std::string& cmd) {
  const pnsat::CnfFormula f = load_formula(file);

  pnsat::SolverOptions opts;
  opts.heuristic = hflags.resolve();
  opts.seed = seed;
  opts.limits.max_conflicts = conflicts;
  opts.limits.max_seconds = time_limit;
  opts.restart_interval = restart_interval;
  opts.analysis = parse_analysis(analysis);

  std::ofstream trace;
  if (!trace_path.empty()) {
    trace.open(trace_path);
    if (!trace) throw std::runtime_error("cannot write " + trace_path);
    trace << "# cmd: " << cmd << '\n';
    opts.trace = &trace;
  }

  pnsat::Solver solver(f, std::move(opts));
  const pnsat::SolveResult res = solver.solve();

  std::cout << "c heuristic " << hflags.resolve().summary() << '\n'
            << "c decisions " << res.stats.decisions << '\n'
            << "c propagations " << res.stats.propagations << '\n'
            << "c conflicts " << res.stats.conflicts << '\n'
            << "c learned_clauses " << res.stats.learned_clauses << '\n'
            << "c final_clause_count " << res.stats.final_clause_count << '\n'
            << "c max_decision_level " << res.stats.max_decision_level << '\n'
            << "c restarts " << res.stats.restarts << '\n';

  switch (res.status) {
    case pnsat::Status::Sat: {
      std::cout << "s SATISFIABLE\n";
      std::cout << 'v';
      for (int v = 1; v <= f.num_vars; ++v)
        std::cout << ' ' << (res.model[v] ? v : -v);
      std::cout << " 0\n";
      return kExitSat;
    }
    case pnsat::Status::Unsat:
      std::cout << "s UNSATISFIABLE\n";
      return kExitUnsat;
    case pnsat::Status::Indeterminate:
      std::cout << "s UNKNOWN\n";
      return kExitIndeterminate;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cmd = command_line(argc, argv);

  CLI::App app{"CDCL SAT solver with PN-product branching heuristics"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "solve a DIMACS CNF file");
  std::string solve_file;
  solve->add_option("file", solve_file, "DIMACS CNF path")->required();
  HeuristicFlags solve_h;
  solve_h.attach(solve);
  std::uint64_t solve_seed = 0, solve_conflicts = 0, solve_restart = 0;
  double solve_time = 0.0;
  std::string solve_trace, solve_analysis = "1uip";
  solve->add_option("--seed", solve_seed, "RNG seed (random tie-breaks)");
  solve->add_option("--conflicts", solve_conflicts, "conflict budget (0 = none)");
  solve->add_option("--time-limit", solve_time, "wall-clock budget in seconds");
  solve->add_option("--restart-interval", solve_restart,
                    "conflicts between restarts (0 = no restarts)");
  solve->add_option("--analysis", solve_analysis,
                    "conflict analysis scheme: 1uip|decision");
  solve->add_option("--trace", solve_trace, "write a per-decision CSV trace");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random k-SAT instance");
  int gen_n = 100, gen_m = 426, gen_k = 3;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("-n,--vars", gen_n, "variable count");
  gen->add_option("-m,--clauses", gen_m, "clause count");
  gen->add_option("-k,--clause-len", gen_k, "literals per clause");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("-o,--output", gen_out, "output path (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "paired heuristic comparison matrix");
  pnsat::MatrixParams mp;
  std::string bench_heuristics, bench_out, bench_summary;
  bench->add_option("-n,--vars", mp.num_vars, "variable count");
  bench->add_option("-m,--clauses", mp.num_clauses, "clause count");
  bench->add_option("-k,--clause-len", mp.clause_len, "literals per clause");
  bench->add_option("--reps", mp.repetitions, "repetitions per heuristic");
  bench->add_option("--heuristics", bench_heuristics,
                    "comma-separated tokens (default: the seven standard ones)");
  bench->add_option("--seed", mp.seed0, "seed of repetition 0");
  bench->add_option("--budget", mp.conflict_budget, "conflict budget per solve");
  bench->add_option("--jobs", mp.jobs, "parallel workers");
  std::string bench_analysis = "1uip";
  bench->add_option("--analysis", bench_analysis,
                    "conflict analysis scheme: 1uip|decision");
  double bench_decay_divisor = 2.0;
  std::uint64_t bench_decay_period = 256;
  bench->add_option("--decay-divisor", bench_decay_divisor,
                    "activity divisor for decaying heuristics");
  bench->add_option("--decay-period", bench_decay_period,
                    "conflicts between decays for decaying heuristics");
  bench->add_option("-o,--output", bench_out, "records CSV path (default stdout)");
  bench->add_option("--summary", bench_summary,
                    "aggregate markdown path (default stdout when -o is set)");

  // regress
  auto* regress = app.add_subcommand(
      "regress", "regress solvability on the initial PN product");
  pnsat::Table1Params tp;
  std::string regress_out, regress_heuristic = "pnprod-decay";
  regress->add_option("-n,--vars", tp.num_vars, "variable count");
  regress->add_option("-m,--clauses", tp.num_clauses, "clause count");
  regress->add_option("-k,--clause-len", tp.clause_len, "literals per clause");
  regress->add_option("--instances", tp.instances, "instance count (>= 30)");
  regress->add_option("--seed", tp.seed0, "seed of instance 0");
  regress->add_option("--budget", tp.conflict_budget, "conflict budget per solve");
  regress->add_option("--heuristic", regress_heuristic, "solver heuristic token");
  regress->add_option("--jobs", tp.jobs, "parallel workers");
  std::string regress_analysis = "1uip";
  regress->add_option("--analysis", regress_analysis,
                      "conflict analysis scheme: 1uip|decision");
  regress->add_option("-o,--output", regress_out, "CSV path (default stdout)");

  // pn-sweep
  auto* sweep = app.add_subcommand(
      "pn-sweep", "mean initial PN product as clauses grow");
  int sweep_n = 100, sweep_k = 3, sweep_reps = 30;
  std::uint64_t sweep_seed = 1;
  std::string sweep_m = "100:800:100", sweep_out;
  sweep->add_option("-n,--vars", sweep_n, "variable count");
  sweep->add_option("-k,--clause-len", sweep_k, "literals per clause");
  sweep->add_option("--m", sweep_m, "clause counts, lo:hi:step or comma list");
  sweep->add_option("--reps", sweep_reps, "instances per point");
  sweep->add_option("--seed", sweep_seed, "base seed");
  sweep->add_option("-o,--output", sweep_out, "CSV path (default stdout)");

  // pn
  auto* pn = app.add_subcommand("pn", "print the PN product of a DIMACS file");
  std::string pn_file;
  pn->add_option("file", pn_file, "DIMACS CNF path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return cmd_solve(solve_file, solve_h, solve_seed, solve_conflicts,
                       solve_time, solve_restart, solve_analysis, solve_trace,
                       cmd);

    if (gen->parsed()) {
      const pnsat::CnfFormula f =
          pnsat::generate_ksat(gen_n, gen_m, gen_k, gen_seed);
      if (gen_out.empty()) {
        pnsat::write_dimacs(std::cout, f);
      } else {
        std::ofstream out(gen_out);
        if (!out) throw std::runtime_error("cannot write " + gen_out);
        pnsat::write_dimacs(out, f);
      }
      return 0;
    }

    if (bench->parsed()) {
      mp.analysis = parse_analysis(bench_analysis);
      mp.heuristics = parse_heuristic_list(bench_heuristics);
      for (pnsat::HeuristicConfig& cfg : mp.heuristics) {
        cfg.decay_divisor = bench_decay_divisor;
        cfg.decay_period = bench_decay_period;
      }
      const std::vector<pnsat::BenchRecord> records = pnsat::run_matrix(mp);
      write_output(bench_out, cmd, pnsat::records_csv(records));

      const auto aggregates = pnsat::aggregate(records);
      int excluded = 0;
      for (const auto& [name, stats] : aggregates) excluded += stats.excluded;
      if (excluded > 0)
        std::cerr << "c excluded " << excluded
                  << " indeterminate record(s) from the aggregates\n";
      const std::string table = pnsat::aggregate_markdown(aggregates);
      if (!bench_summary.empty())
        write_output(bench_summary, cmd, table);
      else if (!bench_out.empty())
        std::cout << table;
      return 0;
    }

    if (regress->parsed()) {
      tp.analysis = parse_analysis(regress_analysis);
      tp.heuristic = pnsat::heuristic_from_token(regress_heuristic);
      const pnsat::Table1Result result = pnsat::table1_experiment(tp);
      if (result.excluded * 10 > tp.instances)
        std::cerr << "c warning: " << result.excluded << " of " << tp.instances
                  << " instances were indeterminate (over 10%)\n";
      else if (result.excluded > 0)
        std::cerr << "c excluded " << result.excluded
                  << " indeterminate instance(s)\n";
      write_output(regress_out, cmd, pnsat::regression_csv(result.regression));
      return 0;
    }

    if (sweep->parsed()) {
      const std::vector<pnsat::SweepPoint> points = pnsat::pn_sweep(
          sweep_n, sweep_k, parse_m_values(sweep_m), sweep_reps, sweep_seed);
      write_output(sweep_out, cmd, pnsat::sweep_csv(points));
      return 0;
    }

    if (pn->parsed()) {
      const pnsat::CnfFormula f = load_formula(pn_file);
      std::cout << pnsat::pn_product(f) << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
