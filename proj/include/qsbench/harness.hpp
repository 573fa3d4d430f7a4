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

#ifndef QSBENCH_HARNESS_HPP_
#define QSBENCH_HARNESS_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsbench/framework.hpp"
#include "qsbench/gbs.hpp"
#include "qsbench/graph.hpp"
#include "qsbench/qaoa.hpp"
#include "qsbench/solvers.hpp"

// Benchmark harness: runs a solver over seeded G(n, 1/2) instances of
// growing size under a per-instance wall-clock limit, persists one record
// per instance, aggregates beta(N) points and extracts the Q-score.

namespace qsbench {

enum class SolverKind {
  kRandomGrowth,
  kGreedy,
  kExact,
  kSimAnneal,
  kTabu,
  kQaoa,
  kGbs,
};

std::string solver_name(SolverKind kind);
SolverKind solver_from_name(const std::string& name);

struct SolverConfig {
  SolverKind solver = SolverKind::kSimAnneal;
  // Per-instance budget; covers QUBO construction, solving and decoding.
  double time_limit_ms = 60000.0;
  // Disables the budget entirely (reported with a "*" by the CLI).
  bool no_time_limit = false;
  double clique_penalty = 2.0;
  SaParams sa;
  TabuParams tabu;
  QaoaConfig qaoa;
  GbsConfig gbs;
};

// Everything recorded about one instance run.
struct RunRecord {
  ProblemKind problem = ProblemKind::kMaxClique;
  SolverKind solver = SolverKind::kSimAnneal;
  int n = 0;
  int instance_index = 0;
  std::uint64_t instance_seed = 0;
  // Mean objective; equals the problem's C_rand(n) when fell_back is set.
  double objective = 0.0;
  // True when objective == evaluate(graph, solution).
  bool valid = false;
  double wall_ms = 0.0;
  // The solver ran out of budget (its result is still the incumbent).
  bool timed_out = false;
  // Unsupported size or no valid output; objective takes the random
  // baseline by convention, contributing beta = 0.
  bool fell_back = false;
  VertexSet solution;
};

// Instance seeds are a pure function of (seed_base, n, instance_index).
std::uint64_t derive_instance_seed(std::uint64_t seed_base, int n,
                                   int instance_index);

// Runs one instance end to end.  The wall clock and the solver deadline
// start before QUBO construction.
RunRecord run_instance(const QScoreProblem& problem, const SolverConfig& cfg,
                       int n, int instance_index, std::uint64_t seed_base);

// Collapses the records of one size into a beta point.  All records must
// share problem and n.  exact_mean_optimum, when given, is the mean
// exact-oracle objective over the same instances and fills beta_exact.
BetaPoint aggregate(const QScoreProblem& problem,
                    const std::vector<RunRecord>& records,
                    std::optional<double> exact_mean_optimum = std::nullopt);

struct ScanPlan {
  ProblemKind problem = ProblemKind::kMaxClique;
  int n_start = 5;
  int n_step = 5;
  // Hard size ceiling; unset means the scan only stops on beta or time.
  std::optional<int> n_max;
  int instances_per_n = 100;
  double beta_star = 0.2;
  // Stop (censored) once the mean wall time of a size exceeds this.
  std::optional<double> stop_avg_wall_ms;
  // Recompute beta against exact-oracle means for n <= exact_cap
  // (Max-Clique only; the exact solve happens outside the timed region).
  bool attach_exact_beta = false;
  int exact_cap = 400;
  double exact_budget_ms = 300000.0;
  // Worker threads; 0 means hardware concurrency.
  int workers = 0;
  std::uint64_t seed_base = 1;
};

// Presets mirroring the published protocols.
ScanPlan annealing_preset();  // n from 5 in steps of 5
ScanPlan classical_preset();  // n from 100 in steps of 100, 100 s stop rule

struct ScanResult {
  QScoreResult q;
  std::vector<RunRecord> records;
};

// Runs sizes n_start, n_start + n_step, ... until beta <= beta_star, the
// stop_avg_wall_ms rule fires, or n_max is reached (the latter two censor
// the result).  The sink, when given, receives every record in
// deterministic order (n ascending, instance_index ascending) as sizes
// complete.
ScanResult scan(const ScanPlan& plan, const SolverConfig& cfg,
                const std::function<void(const RunRecord&)>& sink = {});

// --- Persistence ------------------------------------------------------------

// One JSON object per line, fields: problem, solver, n, instance_index,
// instance_seed, objective, valid, wall_ms, timed_out, fell_back, solution.
std::string record_to_json(const RunRecord& record);
// Throws std::invalid_argument naming the defect on malformed input.
RunRecord record_from_json(const std::string& line);

void write_records_jsonl(std::ostream& out,
                         const std::vector<RunRecord>& records);
// Throws std::invalid_argument with the 1-based line number on bad lines.
std::vector<RunRecord> read_records_jsonl(std::istream& in);

// CSV of beta points: n, c_mean, beta[, beta_exact], n_instances,
// mean_wall_ms.  The beta_exact column appears when any point carries one.
void write_summary_csv(std::ostream& out, const std::vector<BetaPoint>& series);

// Regenerates each record's instance and solves it exactly; returns mean
// exact optimum per size.  Max-Clique only.
std::optional<double> exact_mean_for_records(
    const std::vector<RunRecord>& records, double budget_ms);

}  // namespace qsbench

#endif  // QSBENCH_HARNESS_HPP_
