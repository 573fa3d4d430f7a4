// Copyright 2026 The qsbench authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end.  Subcommands:
//   gen       write seeded G(n, p) instances in the text format
//   run       scan a solver over growing sizes and persist records
//   score     recompute aggregates and the Q-score from a records file
//   report    merge record files into a beta-vs-N table
//   selftest  fast invariant suite
//
// Machine-readable output goes to stdout, human logs to stderr.  Exit codes:
// 0 success, 1 usage error, 2 runtime failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsbench/framework.hpp"
#include "qsbench/harness.hpp"
#include "qsbench/selftest.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct GenOptions {
  int n = 10;
  double p = 0.5;
  std::uint64_t seed = 1;
  int count = 1;
  std::string out_dir;
};

struct RunOptions {
  std::string problem = "max-clique";
  std::string solver;
  std::string out = "records.jsonl";
  std::string preset;
  int n_start = 0;
  int n_step = 0;
  std::optional<int> n_max;
  int instances = 100;
  double time_limit_s = 60.0;
  bool no_time_limit = false;
  double beta_star = 0.2;
  std::optional<double> stop_avg_time_s;
  std::uint64_t seed = 1;
  int workers = 0;
  bool exact_beta = false;
  int exact_cap = 400;
  double penalty = 2.0;
  // Solver knobs.
  int sa_sweeps = 512;
  int sa_restarts = 0;
  int tabu_tenure = 0;
  int tabu_stall = 1000;
  int tabu_restarts = 0;
  int qaoa_depth = 1;
  int qaoa_shots = 512;
  int qaoa_evals = 200;
  int qaoa_cap = 20;
  std::string qaoa_optimizer = "sqp";
  double gbs_scale = 1.0;
  int gbs_samples = 500;
  bool gbs_no_extension = false;
  int gbs_max_subset = 0;
};

std::string q_score_line(const qsbench::QScoreResult& result,
                         qsbench::ProblemKind problem,
                         const std::string& solver, bool no_time_limit) {
  std::string line = "Q-score " + qsbench::problem_name(problem) + " (" +
                     solver + "): " + std::to_string(result.q_score);
  if (no_time_limit) line += "*";
  if (result.censored) {
    line += " (censored: >=" + std::to_string(result.q_score) + ")";
  }
  return line;
}

int cmd_gen(const GenOptions& options) {
  for (int k = 0; k < options.count; ++k) {
    const qsbench::Graph g =
        qsbench::generate_er({options.n, options.p, options.seed + k});
    if (options.out_dir.empty()) {
      qsbench::dump_graph(g, std::cout);
    } else {
      std::filesystem::create_directories(options.out_dir);
      const std::string path = options.out_dir + "/graph_n" +
                               std::to_string(options.n) + "_s" +
                               std::to_string(options.seed + k) + ".txt";
      std::ofstream out(path);
      if (!out) {
        std::cerr << "error: cannot write " << path << '\n';
        return kExitRuntime;
      }
      qsbench::dump_graph(g, out);
      std::cout << path << '\n';
    }
  }
  return kExitSuccess;
}

qsbench::SolverConfig solver_config_from(const RunOptions& options) {
  qsbench::SolverConfig cfg;
  cfg.solver = qsbench::solver_from_name(options.solver);
  cfg.time_limit_ms = options.time_limit_s * 1000.0;
  cfg.no_time_limit = options.no_time_limit;
  cfg.clique_penalty = options.penalty;
  cfg.sa.sweeps = options.sa_sweeps;
  cfg.sa.restarts = options.sa_restarts;
  cfg.tabu.tenure = options.tabu_tenure;
  cfg.tabu.stall_limit = options.tabu_stall;
  cfg.tabu.restarts = options.tabu_restarts;
  cfg.qaoa.depth = options.qaoa_depth;
  cfg.qaoa.shots = options.qaoa_shots;
  cfg.qaoa.max_evals = options.qaoa_evals;
  cfg.qaoa.qubit_cap = options.qaoa_cap;
  if (options.qaoa_optimizer == "sqp") {
    cfg.qaoa.optimizer = qsbench::QaoaOptimizer::kSequentialQuadratic;
  } else if (options.qaoa_optimizer == "simplex") {
    cfg.qaoa.optimizer = qsbench::QaoaOptimizer::kSimplex;
  } else if (options.qaoa_optimizer == "grid") {
    cfg.qaoa.optimizer = qsbench::QaoaOptimizer::kGridThenLocal;
  } else {
    throw CLI::ValidationError("--qaoa-optimizer",
                               "must be sqp, simplex or grid");
  }
  cfg.gbs.scale_c = options.gbs_scale;
  cfg.gbs.samples = options.gbs_samples;
  cfg.gbs.use_extension = !options.gbs_no_extension;
  cfg.gbs.max_subset = options.gbs_max_subset;
  return cfg;
}

qsbench::ScanPlan scan_plan_from(const RunOptions& options) {
  qsbench::ScanPlan plan;
  if (options.preset == "annealing") {
    plan = qsbench::annealing_preset();
  } else if (options.preset == "classical") {
    plan = qsbench::classical_preset();
  } else if (!options.preset.empty()) {
    throw CLI::ValidationError("--preset", "must be annealing or classical");
  }
  plan.problem = qsbench::problem_from_name(options.problem);
  if (options.n_start > 0) plan.n_start = options.n_start;
  if (options.n_step > 0) plan.n_step = options.n_step;
  plan.n_max = options.n_max;
  plan.instances_per_n = options.instances;
  plan.beta_star = options.beta_star;
  if (options.stop_avg_time_s) {
    plan.stop_avg_wall_ms = *options.stop_avg_time_s * 1000.0;
  }
  plan.attach_exact_beta = options.exact_beta;
  plan.exact_cap = options.exact_cap;
  plan.workers = options.workers;
  plan.seed_base = options.seed;
  return plan;
}

int cmd_run(const RunOptions& options) {
  const qsbench::SolverConfig cfg = solver_config_from(options);
  const qsbench::ScanPlan plan = scan_plan_from(options);

  std::ofstream records_out(options.out);
  if (!records_out) {
    std::cerr << "error: cannot write " << options.out << '\n';
    return kExitRuntime;
  }
  std::cerr << "running " << qsbench::solver_name(cfg.solver) << " on "
            << qsbench::problem_name(plan.problem) << ", "
            << plan.instances_per_n << " instances per size, seed "
            << plan.seed_base << '\n';

  const qsbench::ScanResult result =
      qsbench::scan(plan, cfg, [&records_out](const qsbench::RunRecord& r) {
        records_out << qsbench::record_to_json(r) << '\n';
      });
  records_out.close();

  std::string csv_path = options.out;
  const std::string jsonl_suffix = ".jsonl";
  if (csv_path.size() > jsonl_suffix.size() &&
      csv_path.compare(csv_path.size() - jsonl_suffix.size(),
                       jsonl_suffix.size(), jsonl_suffix) == 0) {
    csv_path.resize(csv_path.size() - jsonl_suffix.size());
  }
  csv_path += ".csv";
  std::ofstream csv_out(csv_path);
  if (!csv_out) {
    std::cerr << "error: cannot write " << csv_path << '\n';
    return kExitRuntime;
  }
  qsbench::write_summary_csv(csv_out, result.q.series);

  for (const qsbench::BetaPoint& point : result.q.series) {
    std::cerr << "n=" << point.n << " c_mean=" << point.c_mean
              << " beta=" << point.beta;
    if (point.beta_exact) std::cerr << " beta_exact=" << *point.beta_exact;
    std::cerr << " mean_wall_ms=" << point.mean_wall_ms << '\n';
  }
  std::cout << options.out << '\n' << csv_path << '\n';
  std::cout << q_score_line(result.q, plan.problem,
                            qsbench::solver_name(cfg.solver),
                            cfg.no_time_limit)
            << '\n';
  return kExitSuccess;
}

struct ScoreOptions {
  std::string in;
  double beta_star = 0.2;
  bool exact_beta = false;
  double exact_budget_s = 300.0;
};

// Groups records by solver, then by size ascending.
std::map<std::string, std::map<int, std::vector<qsbench::RunRecord>>>
group_records(const std::vector<qsbench::RunRecord>& records) {
  std::map<std::string, std::map<int, std::vector<qsbench::RunRecord>>> groups;
  for (const qsbench::RunRecord& record : records) {
    groups[qsbench::solver_name(record.solver)][record.n].push_back(record);
  }
  return groups;
}

int cmd_score(const ScoreOptions& options) {
  std::ifstream in(options.in);
  if (!in) {
    std::cerr << "error: cannot read " << options.in << '\n';
    return kExitRuntime;
  }
  std::vector<qsbench::RunRecord> records;
  try {
    records = qsbench::read_records_jsonl(in);
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << options.in << ": " << error.what() << '\n';
    return kExitRuntime;
  }
  if (records.empty()) {
    std::cerr << "error: " << options.in << ": no records\n";
    return kExitRuntime;
  }
  const qsbench::ProblemKind problem_kind = records.front().problem;
  for (const qsbench::RunRecord& record : records) {
    if (record.problem != problem_kind) {
      std::cerr << "error: " << options.in << ": mixed problems\n";
      return kExitRuntime;
    }
  }
  if (options.exact_beta &&
      problem_kind != qsbench::ProblemKind::kMaxClique) {
    std::cerr << "error: --exact-beta requires max-clique records\n";
    return kExitRuntime;
  }
  const qsbench::QScoreProblem problem{problem_kind};
  for (const auto& [solver, by_n] : group_records(records)) {
    std::vector<qsbench::BetaPoint> series;
    for (const auto& [n, group] : by_n) {
      (void)n;
      std::optional<double> exact_mean;
      if (options.exact_beta) {
        exact_mean = qsbench::exact_mean_for_records(
            group, options.exact_budget_s * 1000.0);
      }
      series.push_back(qsbench::aggregate(problem, group, exact_mean));
    }
    const qsbench::QScoreResult result =
        qsbench::q_score_from_series(series, options.beta_star);
    for (const qsbench::BetaPoint& point : result.series) {
      std::cerr << "n=" << point.n << " c_mean=" << point.c_mean
                << " beta=" << point.beta;
      if (point.beta_exact) std::cerr << " beta_exact=" << *point.beta_exact;
      std::cerr << '\n';
    }
    std::cout << q_score_line(result, problem_kind, solver, false) << '\n';
  }
  return kExitSuccess;
}

struct ReportOptions {
  std::vector<std::string> inputs;
  std::string out;
  double beta_star = 0.2;
  bool times = false;
  bool force = false;
};

int cmd_report(const ReportOptions& options) {
  std::vector<qsbench::RunRecord> records;
  for (const std::string& path : options.inputs) {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot read " << path << '\n';
      return kExitRuntime;
    }
    try {
      const std::vector<qsbench::RunRecord> part =
          qsbench::read_records_jsonl(in);
      records.insert(records.end(), part.begin(), part.end());
    } catch (const std::invalid_argument& error) {
      std::cerr << "error: " << path << ": " << error.what() << '\n';
      return kExitRuntime;
    }
  }
  if (records.empty()) {
    std::cerr << "error: no records\n";
    return kExitRuntime;
  }
  const qsbench::ProblemKind problem_kind = records.front().problem;
  for (const qsbench::RunRecord& record : records) {
    if (record.problem != problem_kind && !options.force) {
      std::cerr << "error: inputs mix problems (use --force to override)\n";
      return kExitRuntime;
    }
  }
  const qsbench::QScoreProblem problem{problem_kind};
  const auto groups = group_records(records);
  std::vector<std::string> solvers;
  std::set<int> sizes;
  std::map<std::string, std::map<int, qsbench::BetaPoint>> points;
  for (const auto& [solver, by_n] : groups) {
    solvers.push_back(solver);
    for (const auto& [n, group] : by_n) {
      sizes.insert(n);
      points[solver][n] = qsbench::aggregate(problem, group);
    }
  }

  std::ostringstream csv;
  csv << "n";
  for (const std::string& solver : solvers) {
    csv << ",beta_" << solver;
    if (options.times) csv << ",mean_wall_ms_" << solver;
  }
  csv << '\n';
  for (const int n : sizes) {
    csv << n;
    for (const std::string& solver : solvers) {
      const auto it = points[solver].find(n);
      csv << ',';
      if (it != points[solver].end()) csv << it->second.beta;
      if (options.times) {
        csv << ',';
        if (it != points[solver].end()) csv << it->second.mean_wall_ms;
      }
    }
    csv << '\n';
  }
  if (options.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(options.out);
    if (!out) {
      std::cerr << "error: cannot write " << options.out << '\n';
      return kExitRuntime;
    }
    out << csv.str();
    std::cout << options.out << '\n';
  }

  // Aligned table for humans.
  std::cerr << std::left << std::setw(8) << "n";
  for (const std::string& solver : solvers) {
    std::cerr << std::setw(14) << ("beta_" + solver);
  }
  std::cerr << '\n';
  for (const int n : sizes) {
    std::cerr << std::left << std::setw(8) << n;
    for (const std::string& solver : solvers) {
      const auto it = points[solver].find(n);
      if (it != points[solver].end()) {
        std::cerr << std::setw(14) << std::fixed << std::setprecision(4)
                  << it->second.beta;
        std::cerr.unsetf(std::ios::fixed);
      } else {
        std::cerr << std::setw(14) << "-";
      }
    }
    std::cerr << '\n';
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q-score benchmark harness"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate G(n, p) instances");
  gen_cmd->add_option("--n", gen.n, "vertex count")->required();
  gen_cmd->add_option("--p", gen.p, "edge probability");
  gen_cmd->add_option("--seed", gen.seed, "base seed");
  gen_cmd->add_option("--count", gen.count, "number of instances");
  gen_cmd->add_option("--out-dir", gen.out_dir,
                      "write files here instead of stdout");

  RunOptions run;
  CLI::App* run_cmd = app.add_subcommand("run", "scan a solver");
  run_cmd->add_option("--problem", run.problem, "max-clique or max-cut");
  run_cmd
      ->add_option("--solver", run.solver,
                   "random, greedy, exact, sa, tabu, qaoa or gbs")
      ->required();
  run_cmd->add_option("--out", run.out, "records JSONL path");
  run_cmd->add_option("--preset", run.preset, "annealing or classical");
  run_cmd->add_option("--n-start", run.n_start, "first size");
  run_cmd->add_option("--n-step", run.n_step, "size increment");
  run_cmd->add_option("--n-max", run.n_max, "size ceiling");
  run_cmd->add_option("--instances", run.instances, "instances per size");
  run_cmd->add_option("--time-limit-s", run.time_limit_s,
                      "per-instance budget in seconds");
  run_cmd->add_flag("--no-time-limit", run.no_time_limit,
                    "disable the budget (marked * in output)");
  run_cmd->add_option("--beta-star", run.beta_star, "threshold beta*");
  run_cmd->add_option("--stop-avg-time-s", run.stop_avg_time_s,
                      "stop once a size's mean wall time exceeds this");
  run_cmd->add_option("--seed", run.seed, "seed base");
  run_cmd->add_option("--workers", run.workers,
                      "worker threads (0 = hardware)");
  run_cmd->add_flag("--exact-beta", run.exact_beta,
                    "attach exact-oracle beta (max-clique)");
  run_cmd->add_option("--exact-cap", run.exact_cap,
                      "largest size solved exactly");
  run_cmd->add_option("--penalty", run.penalty, "clique QUBO penalty");
  run_cmd->add_option("--sa-sweeps", run.sa_sweeps, "SA sweeps per restart");
  run_cmd->add_option("--sa-restarts", run.sa_restarts,
                      "SA restarts (0 = until deadline)");
  run_cmd->add_option("--tabu-tenure", run.tabu_tenure,
                      "tabu tenure (0 = min(20, n/4))");
  run_cmd->add_option("--tabu-stall", run.tabu_stall,
                      "moves without improvement before diversification");
  run_cmd->add_option("--tabu-restarts", run.tabu_restarts,
                      "tabu restarts (0 = until deadline)");
  run_cmd->add_option("--qaoa-depth", run.qaoa_depth, "QAOA depth p");
  run_cmd->add_option("--qaoa-shots", run.qaoa_shots, "readout shots");
  run_cmd->add_option("--qaoa-evals", run.qaoa_evals,
                      "optimizer evaluation budget");
  run_cmd->add_option("--qaoa-cap", run.qaoa_cap, "qubit cap");
  run_cmd->add_option("--qaoa-optimizer", run.qaoa_optimizer,
                      "sqp, simplex or grid");
  run_cmd->add_option("--gbs-scale", run.gbs_scale, "GBS subset weight scale");
  run_cmd->add_option("--gbs-samples", run.gbs_samples, "GBS samples");
  run_cmd->add_flag("--gbs-no-extension", run.gbs_no_extension,
                    "skip the clique extension step");
  run_cmd->add_option("--gbs-max-subset", run.gbs_max_subset,
                      "largest enumerated subset (0 = auto)");

  ScoreOptions score;
  CLI::App* score_cmd =
      app.add_subcommand("score", "recompute the Q-score from records");
  score_cmd->add_option("--in", score.in, "records JSONL path")->required();
  score_cmd->add_option("--beta-star", score.beta_star, "threshold beta*");
  score_cmd->add_flag("--exact-beta", score.exact_beta,
                      "recompute exact-oracle beta (max-clique)");
  score_cmd->add_option("--exact-budget-s", score.exact_budget_s,
                        "exact solve budget per instance");

  ReportOptions report;
  CLI::App* report_cmd =
      app.add_subcommand("report", "merge record files into a beta table");
  report_cmd->add_option("--in", report.inputs, "records JSONL paths")
      ->required()
      ->expected(-1);
  report_cmd->add_option("--out", report.out, "CSV output path");
  report_cmd->add_flag("--times", report.times, "add mean wall time columns");
  report_cmd->add_flag("--force", report.force, "allow mixing problems");

  bool perturb = false;
  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "fast invariant suite");
  selftest_cmd->add_flag("--perturb-constant", perturb, "")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    app.exit(help);
    return kExitSuccess;
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (run_cmd->parsed()) return cmd_run(run);
    if (score_cmd->parsed()) return cmd_score(score);
    if (report_cmd->parsed()) return cmd_report(report);
    if (selftest_cmd->parsed()) {
      return qsbench::run_selftest(std::cerr, perturb) ? kExitSuccess
                                                       : kExitRuntime;
    }
  } catch (const CLI::ValidationError& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
