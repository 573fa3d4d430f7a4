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

#include "qsbench/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "qsbench/errors.hpp"
#include "qsbench/rng.hpp"

namespace qsbench {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::uint64_t solver_run_seed(std::uint64_t instance_seed, SolverKind kind) {
  return rng::hash3(instance_seed ^ rng::kTagSolver,
                    static_cast<std::uint64_t>(kind), 0);
}

// Dispatches one solve.  Returns the solution vertex set; for Max-Cut it is
// the x = 1 side of the partition.
VertexSet dispatch(const QScoreProblem& problem, const SolverConfig& cfg,
                   const Graph& g, std::uint64_t run_seed,
                   const Deadline& deadline) {
  const bool clique = problem.kind == ProblemKind::kMaxClique;
  switch (cfg.solver) {
    case SolverKind::kRandomGrowth:
      if (!clique) break;
      return random_growth_clique(g, run_seed);
    case SolverKind::kGreedy:
      if (!clique) break;
      return greedy_clique(g);
    case SolverKind::kExact: {
      if (!clique) break;
      std::optional<Deadline> budget;
      if (!cfg.no_time_limit) budget = deadline;
      return exact_max_clique(g, budget).clique;
    }
    case SolverKind::kSimAnneal:
    case SolverKind::kTabu: {
      const Qubo qubo = clique ? clique_qubo(g, cfg.clique_penalty)
                               : cut_qubo(g);
      AnnealResult result;
      if (cfg.solver == SolverKind::kSimAnneal) {
        SaParams params = cfg.sa;
        params.seed = run_seed;
        result = simulated_annealing(qubo, params, deadline);
      } else {
        TabuParams params = cfg.tabu;
        params.seed = run_seed;
        result = tabu_search(qubo, params, deadline);
      }
      if (clique) return decode_clique(g, result.assignment, /*repair=*/true);
      VertexSet side;
      for (int i = 0; i < g.vertex_count(); ++i) {
        if (result.assignment[i]) side.push_back(i);
      }
      return side;
    }
    case SolverKind::kQaoa: {
      if (!clique) break;
      QaoaConfig params = cfg.qaoa;
      params.seed = run_seed;
      return qaoa_solve_clique(g, params, deadline, cfg.clique_penalty);
    }
    case SolverKind::kGbs: {
      if (!clique) break;
      GbsConfig params = cfg.gbs;
      params.seed = run_seed;
      return gbs_solve_clique(g, params, deadline);
    }
  }
  throw std::invalid_argument("solver " + solver_name(cfg.solver) +
                              " does not support problem " +
                              problem_name(problem.kind));
}

int min_size_for(ProblemKind kind) {
  // clique_c_max needs n >= 3, cut references need n >= 2.
  return kind == ProblemKind::kMaxClique ? 3 : 2;
}

}  // namespace

std::string solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::kRandomGrowth:
      return "random";
    case SolverKind::kGreedy:
      return "greedy";
    case SolverKind::kExact:
      return "exact";
    case SolverKind::kSimAnneal:
      return "sa";
    case SolverKind::kTabu:
      return "tabu";
    case SolverKind::kQaoa:
      return "qaoa";
    case SolverKind::kGbs:
      return "gbs";
  }
  throw std::invalid_argument("solver_name: unknown solver kind");
}

SolverKind solver_from_name(const std::string& name) {
  if (name == "random") return SolverKind::kRandomGrowth;
  if (name == "greedy") return SolverKind::kGreedy;
  if (name == "exact") return SolverKind::kExact;
  if (name == "sa") return SolverKind::kSimAnneal;
  if (name == "tabu") return SolverKind::kTabu;
  if (name == "qaoa") return SolverKind::kQaoa;
  if (name == "gbs") return SolverKind::kGbs;
  throw std::invalid_argument("unknown solver name: " + name);
}

std::uint64_t derive_instance_seed(std::uint64_t seed_base, int n,
                                   int instance_index) {
  return rng::hash3(seed_base ^ rng::kTagInstance,
                    static_cast<std::uint64_t>(n),
                    static_cast<std::uint64_t>(instance_index));
}

RunRecord run_instance(const QScoreProblem& problem, const SolverConfig& cfg,
                       int n, int instance_index, std::uint64_t seed_base) {
  if (n < min_size_for(problem.kind)) {
    throw std::invalid_argument("run_instance: size below problem minimum");
  }
  RunRecord record;
  record.problem = problem.kind;
  record.solver = cfg.solver;
  record.n = n;
  record.instance_index = instance_index;
  record.instance_seed = derive_instance_seed(seed_base, n, instance_index);

  const Graph g = generate_er({n, 0.5, record.instance_seed});
  const std::uint64_t run_seed =
      solver_run_seed(record.instance_seed, cfg.solver);

  // Everything from here on, QUBO construction included, counts against the
  // budget.
  const Clock::time_point start = Clock::now();
  const Deadline deadline = cfg.no_time_limit
                                ? Deadline::unlimited()
                                : Deadline(cfg.time_limit_ms);
  bool unsupported = false;
  VertexSet solution;
  try {
    solution = dispatch(problem, cfg, g, run_seed, deadline);
  } catch (const UnsupportedSizeError&) {
    unsupported = true;
  }
  record.wall_ms = ms_since(start);
  record.timed_out = !cfg.no_time_limit && deadline.expired();

  const bool no_output =
      problem.kind == ProblemKind::kMaxClique && solution.empty() && n > 0;
  if (unsupported || no_output) {
    record.fell_back = true;
    record.valid = false;
    record.solution.clear();
    record.objective = problem.c_rand(n);
    return record;
  }
  record.solution = solution;
  record.objective = problem.evaluate(g, solution);
  record.valid = true;
  return record;
}

BetaPoint aggregate(const QScoreProblem& problem,
                    const std::vector<RunRecord>& records,
                    std::optional<double> exact_mean_optimum) {
  if (records.empty()) {
    throw std::invalid_argument("aggregate: no records");
  }
  const int n = records.front().n;
  double objective_sum = 0.0;
  double wall_sum = 0.0;
  for (const RunRecord& record : records) {
    if (record.n != n || record.problem != problem.kind) {
      throw std::invalid_argument(
          "aggregate: records mix sizes or problems");
    }
    objective_sum += record.objective;
    wall_sum += record.wall_ms;
  }
  BetaPoint point;
  point.n = n;
  point.n_instances = static_cast<int>(records.size());
  point.c_mean = objective_sum / point.n_instances;
  point.beta = beta(problem, n, point.c_mean);
  point.mean_wall_ms = wall_sum / point.n_instances;
  if (exact_mean_optimum) {
    const double c_rand = problem.c_rand(n);
    point.beta_exact =
        (point.c_mean - c_rand) / (*exact_mean_optimum - c_rand);
  }
  return point;
}

ScanPlan annealing_preset() {
  ScanPlan plan;
  plan.n_start = 5;
  plan.n_step = 5;
  return plan;
}

ScanPlan classical_preset() {
  ScanPlan plan;
  plan.n_start = 100;
  plan.n_step = 100;
  plan.stop_avg_wall_ms = 100000.0;
  return plan;
}

std::optional<double> exact_mean_for_records(
    const std::vector<RunRecord>& records, double budget_ms) {
  if (records.empty()) return std::nullopt;
  double sum = 0.0;
  for (const RunRecord& record : records) {
    if (record.problem != ProblemKind::kMaxClique) return std::nullopt;
    const Graph g = generate_er({record.n, 0.5, record.instance_seed});
    sum += static_cast<double>(
        exact_max_clique(g, Deadline(budget_ms)).clique.size());
  }
  return sum / static_cast<double>(records.size());
}

ScanResult scan(const ScanPlan& plan, const SolverConfig& cfg,
                const std::function<void(const RunRecord&)>& sink) {
  if (plan.n_start < min_size_for(plan.problem)) {
    throw std::invalid_argument("scan: n_start below problem minimum");
  }
  if (plan.n_step < 1) throw std::invalid_argument("scan: n_step must be >= 1");
  if (plan.instances_per_n < 1) {
    throw std::invalid_argument("scan: instances_per_n must be >= 1");
  }
  if (plan.attach_exact_beta && plan.problem != ProblemKind::kMaxClique) {
    throw std::invalid_argument(
        "scan: exact-oracle beta is only available for max-clique");
  }
  const QScoreProblem problem{plan.problem};
  int workers = plan.workers > 0
                    ? plan.workers
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;

  ScanResult result;
  std::vector<BetaPoint> series;
  std::set<std::uint64_t> seen_seeds;

  for (int n = plan.n_start;; n += plan.n_step) {
    if (plan.n_max && n > *plan.n_max) break;
    std::vector<RunRecord> batch(
        static_cast<std::size_t>(plan.instances_per_n));
    const int batch_workers =
        std::min(workers, plan.instances_per_n);
    if (batch_workers <= 1) {
      for (int k = 0; k < plan.instances_per_n; ++k) {
        batch[k] = run_instance(problem, cfg, n, k, plan.seed_base);
      }
    } else {
      std::atomic<int> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(batch_workers));
      for (int w = 0; w < batch_workers; ++w) {
        pool.emplace_back([&] {
          try {
            while (true) {
              const int k = next.fetch_add(1);
              if (k >= plan.instances_per_n) return;
              batch[k] = run_instance(problem, cfg, n, k, plan.seed_base);
            }
          } catch (...) {
            const std::scoped_lock lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(plan.instances_per_n);
          }
        });
      }
      for (std::thread& t : pool) t.join();
      if (failure) std::rethrow_exception(failure);
    }
    for (const RunRecord& record : batch) {
      if (!seen_seeds.insert(record.instance_seed).second) {
        throw std::runtime_error("scan: instance seed collision detected");
      }
      if (sink) sink(record);
    }

    std::optional<double> exact_mean;
    if (plan.attach_exact_beta && n <= plan.exact_cap) {
      exact_mean = exact_mean_for_records(batch, plan.exact_budget_ms);
    }
    const BetaPoint point = aggregate(problem, batch, exact_mean);
    series.push_back(point);
    result.records.insert(result.records.end(), batch.begin(), batch.end());

    if (point.beta <= plan.beta_star) break;
    if (plan.stop_avg_wall_ms && point.mean_wall_ms > *plan.stop_avg_wall_ms) {
      break;
    }
  }
  result.q = q_score_from_series(series, plan.beta_star);
  return result;
}

// --- Persistence ------------------------------------------------------------

namespace {

nlohmann::ordered_json record_to_ordered_json(const RunRecord& record) {
  nlohmann::ordered_json j;
  j["problem"] = problem_name(record.problem);
  j["solver"] = solver_name(record.solver);
  j["n"] = record.n;
  j["instance_index"] = record.instance_index;
  j["instance_seed"] = record.instance_seed;
  j["objective"] = record.objective;
  j["valid"] = record.valid;
  j["wall_ms"] = record.wall_ms;
  j["timed_out"] = record.timed_out;
  j["fell_back"] = record.fell_back;
  j["solution"] = record.solution;
  return j;
}

}  // namespace

std::string record_to_json(const RunRecord& record) {
  return record_to_ordered_json(record).dump();
}

RunRecord record_from_json(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& error) {
    throw std::invalid_argument(std::string("bad JSON: ") + error.what());
  }
  RunRecord record;
  try {
    record.problem = problem_from_name(j.at("problem").get<std::string>());
    record.solver = solver_from_name(j.at("solver").get<std::string>());
    record.n = j.at("n").get<int>();
    record.instance_index = j.at("instance_index").get<int>();
    record.instance_seed = j.at("instance_seed").get<std::uint64_t>();
    record.objective = j.at("objective").get<double>();
    record.valid = j.at("valid").get<bool>();
    record.wall_ms = j.at("wall_ms").get<double>();
    record.timed_out = j.at("timed_out").get<bool>();
    record.fell_back = j.at("fell_back").get<bool>();
    record.solution = j.at("solution").get<VertexSet>();
  } catch (const nlohmann::json::exception& error) {
    throw std::invalid_argument(std::string("bad record: ") + error.what());
  }
  return record;
}

void write_records_jsonl(std::ostream& out,
                         const std::vector<RunRecord>& records) {
  for (const RunRecord& record : records) {
    out << record_to_json(record) << '\n';
  }
}

std::vector<RunRecord> read_records_jsonl(std::istream& in) {
  std::vector<RunRecord> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      records.push_back(record_from_json(line));
    } catch (const std::invalid_argument& error) {
      throw std::invalid_argument("line " + std::to_string(line_number) +
                                  ": " + error.what());
    }
  }
  return records;
}

void write_summary_csv(std::ostream& out,
                       const std::vector<BetaPoint>& series) {
  bool with_exact = false;
  for (const BetaPoint& point : series) {
    if (point.beta_exact) with_exact = true;
  }
  char buffer[64];
  auto format = [&buffer](double value) {
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return std::string(buffer);
  };
  out << (with_exact ? "n,c_mean,beta,beta_exact,n_instances,mean_wall_ms"
                     : "n,c_mean,beta,n_instances,mean_wall_ms")
      << '\n';
  for (const BetaPoint& point : series) {
    out << point.n << ',' << format(point.c_mean) << ','
        << format(point.beta) << ',';
    if (with_exact) {
      out << (point.beta_exact ? format(*point.beta_exact) : std::string())
          << ',';
    }
    out << point.n_instances << ',' << format(point.mean_wall_ms) << '\n';
  }
}

}  // namespace qsbench
