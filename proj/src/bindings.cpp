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

// Python bindings (qsbench._core).  The module exposes the main operations:
// instance generation, the reference costs and beta/Q-score math, the
// individual solvers, the benchmark harness with its JSONL persistence, and
// the hafnian primitive.  Long-running calls release the GIL.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qsbench/deadline.hpp"
#include "qsbench/errors.hpp"
#include "qsbench/framework.hpp"
#include "qsbench/gbs.hpp"
#include "qsbench/graph.hpp"
#include "qsbench/harness.hpp"
#include "qsbench/qubo.hpp"
#include "qsbench/selftest.hpp"
#include "qsbench/solvers.hpp"

namespace py = pybind11;

namespace qsbench {
namespace {

// def_readwrite would return copies of struct-typed members; this exposes
// them as mutable references so `cfg.sa.sweeps = 64` works as expected.
template <typename Class, typename Member>
void bind_nested(py::class_<Class>& cls, const char* name,
                 Member Class::*field) {
  cls.def_property(
      name,
      py::cpp_function([field](Class& c) -> Member& { return c.*field; },
                       py::return_value_policy::reference_internal),
      py::cpp_function(
          [field](Class& c, const Member& value) { c.*field = value; }));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Q-score benchmarking core: instances, solvers, harness";

  py::register_exception<UnsupportedSizeError>(m, "UnsupportedSizeError",
                                               PyExc_RuntimeError);

  // --- enums ---------------------------------------------------------------

  py::enum_<ProblemKind>(m, "ProblemKind")
      .value("MAX_CLIQUE", ProblemKind::kMaxClique)
      .value("MAX_CUT", ProblemKind::kMaxCut);

  py::enum_<SolverKind>(m, "SolverKind")
      .value("RANDOM_GROWTH", SolverKind::kRandomGrowth)
      .value("GREEDY", SolverKind::kGreedy)
      .value("EXACT", SolverKind::kExact)
      .value("SIM_ANNEAL", SolverKind::kSimAnneal)
      .value("TABU", SolverKind::kTabu)
      .value("QAOA", SolverKind::kQaoa)
      .value("GBS", SolverKind::kGbs);

  py::enum_<QaoaOptimizer>(m, "QaoaOptimizer")
      .value("SEQUENTIAL_QUADRATIC", QaoaOptimizer::kSequentialQuadratic)
      .value("SIMPLEX", QaoaOptimizer::kSimplex)
      .value("GRID_THEN_LOCAL", QaoaOptimizer::kGridThenLocal);

  m.def("problem_name", &problem_name);
  m.def("problem_from_name", &problem_from_name);
  m.def("solver_name", &solver_name);
  m.def("solver_from_name", &solver_from_name);

  // --- graphs ----------------------------------------------------------------

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def("add_edge", &Graph::add_edge, py::arg("i"), py::arg("j"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("has_edge", &Graph::has_edge, py::arg("i"), py::arg("j"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def("edges", &Graph::edges)
      .def("to_text", [](const Graph& g) { return graph_to_string(g); })
      .def_static(
          "from_text",
          [](const std::string& text) { return graph_from_string(text); },
          py::arg("text"))
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        std::ostringstream out;
        out << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count()
            << ")";
        return out.str();
      });

  m.def(
      "generate_er",
      [](int n, double p, std::uint64_t seed) {
        return generate_er({n, p, seed});
      },
      py::arg("n"), py::arg("p") = 0.5, py::arg("seed") = 0,
      "Sample an Erdos-Renyi G(n, p) graph, deterministic in seed.");
  m.def("is_clique", &is_clique, py::arg("g"), py::arg("s"));
  m.def("cut_value", &cut_value, py::arg("g"), py::arg("s"));

  // --- reference costs and beta ----------------------------------------------

  m.def("clique_c_rand", &clique_c_rand,
        "Random-growth baseline of Max-Clique at p = 1/2 (~1.6416326).");
  m.def("clique_c_rand_partial", &clique_c_rand_partial, py::arg("terms"));
  m.def("clique_c_max", &clique_c_max, py::arg("n"));
  m.def("clique_random_size_survival", &clique_random_size_survival,
        py::arg("p"), py::arg("i"));
  m.def("clique_random_size_pmf", &clique_random_size_pmf, py::arg("p"),
        py::arg("i"));
  m.def("cut_c_rand", &cut_c_rand, py::arg("n"));
  m.def("cut_c_max", &cut_c_max, py::arg("n"));
  m.def(
      "beta",
      [](ProblemKind kind, int n, double c_mean) {
        const QScoreProblem problem{kind};
        return beta(problem, n, c_mean);
      },
      py::arg("problem"), py::arg("n"), py::arg("c_mean"),
      "Normalized quality (c_mean - c_rand) / (c_max - c_rand).");
  m.def(
      "evaluate",
      [](ProblemKind kind, const Graph& g, const VertexSet& s) {
        const QScoreProblem problem{kind};
        return problem.evaluate(g, s);
      },
      py::arg("problem"), py::arg("g"), py::arg("s"),
      "Objective of a solution: clique size or crossing-edge count.");

  py::class_<BetaPoint>(m, "BetaPoint")
      .def(py::init<>())
      .def_readwrite("n", &BetaPoint::n)
      .def_readwrite("c_mean", &BetaPoint::c_mean)
      .def_readwrite("beta", &BetaPoint::beta)
      .def_readwrite("n_instances", &BetaPoint::n_instances)
      .def_readwrite("beta_exact", &BetaPoint::beta_exact)
      .def_readwrite("mean_wall_ms", &BetaPoint::mean_wall_ms)
      .def("__repr__", [](const BetaPoint& p) {
        std::ostringstream out;
        out << "BetaPoint(n=" << p.n << ", c_mean=" << p.c_mean
            << ", beta=" << p.beta << ", n_instances=" << p.n_instances
            << ")";
        return out.str();
      });

  py::class_<QScoreResult>(m, "QScoreResult")
      .def_readonly("q_score", &QScoreResult::q_score)
      .def_readonly("beta_star", &QScoreResult::beta_star)
      .def_readonly("series", &QScoreResult::series)
      .def_readonly("censored", &QScoreResult::censored)
      .def("__repr__", [](const QScoreResult& r) {
        std::ostringstream out;
        out << "QScoreResult(q_score=" << r.q_score
            << (r.censored ? ", censored" : "") << ")";
        return out.str();
      });

  m.def("q_score_from_series", &q_score_from_series, py::arg("series"),
        py::arg("beta_star") = 0.2);

  // --- individual solvers ------------------------------------------------------

  m.def("random_growth_clique", &random_growth_clique, py::arg("g"),
        py::arg("seed"));
  m.def("greedy_clique", &greedy_clique, py::arg("g"));
  m.def(
      "exact_max_clique",
      [](const Graph& g, std::optional<double> budget_ms) {
        ExactCliqueResult result;
        {
          py::gil_scoped_release release;
          result = budget_ms ? exact_max_clique(g, Deadline(*budget_ms))
                             : exact_max_clique(g);
        }
        return py::make_tuple(result.clique, result.proven_optimal,
                              result.nodes_explored);
      },
      py::arg("g"), py::arg("budget_ms") = std::nullopt,
      "Branch-and-bound maximum clique; returns (clique, proven_optimal, "
      "nodes_explored).");
  m.def(
      "hafnian",
      [](const std::vector<std::vector<double>>& rows) {
        const int k = static_cast<int>(rows.size());
        std::vector<double> flat;
        flat.reserve(static_cast<std::size_t>(k) * k);
        for (const auto& row : rows) {
          if (static_cast<int>(row.size()) != k) {
            throw std::invalid_argument("hafnian: matrix must be square");
          }
          flat.insert(flat.end(), row.begin(), row.end());
        }
        return hafnian(flat, k);
      },
      py::arg("matrix"),
      "Hafnian of a symmetric matrix given as a list of rows.");

  // --- solver configuration ----------------------------------------------------

  py::class_<SaParams>(m, "SaParams")
      .def(py::init<>())
      .def_readwrite("sweeps", &SaParams::sweeps)
      .def_readwrite("beta_initial", &SaParams::beta_initial)
      .def_readwrite("beta_final", &SaParams::beta_final)
      .def_readwrite("restarts", &SaParams::restarts)
      .def_readwrite("seed", &SaParams::seed);

  py::class_<TabuParams>(m, "TabuParams")
      .def(py::init<>())
      .def_readwrite("tenure", &TabuParams::tenure)
      .def_readwrite("stall_limit", &TabuParams::stall_limit)
      .def_readwrite("restarts", &TabuParams::restarts)
      .def_readwrite("seed", &TabuParams::seed);

  py::class_<QaoaConfig>(m, "QaoaConfig")
      .def(py::init<>())
      .def_readwrite("depth", &QaoaConfig::depth)
      .def_readwrite("optimizer", &QaoaConfig::optimizer)
      .def_readwrite("max_evals", &QaoaConfig::max_evals)
      .def_readwrite("shots", &QaoaConfig::shots)
      .def_readwrite("seed", &QaoaConfig::seed)
      .def_readwrite("qubit_cap", &QaoaConfig::qubit_cap);

  py::class_<GbsConfig>(m, "GbsConfig")
      .def(py::init<>())
      .def_readwrite("scale_c", &GbsConfig::scale_c)
      .def_readwrite("samples", &GbsConfig::samples)
      .def_readwrite("use_extension", &GbsConfig::use_extension)
      .def_readwrite("max_subset", &GbsConfig::max_subset)
      .def_readwrite("seed", &GbsConfig::seed);

  py::class_<SolverConfig> solver_config(m, "SolverConfig");
  solver_config.def(py::init<>())
      .def_readwrite("solver", &SolverConfig::solver)
      .def_readwrite("time_limit_ms", &SolverConfig::time_limit_ms)
      .def_readwrite("no_time_limit", &SolverConfig::no_time_limit)
      .def_readwrite("clique_penalty", &SolverConfig::clique_penalty);
  bind_nested(solver_config, "sa", &SolverConfig::sa);
  bind_nested(solver_config, "tabu", &SolverConfig::tabu);
  bind_nested(solver_config, "qaoa", &SolverConfig::qaoa);
  bind_nested(solver_config, "gbs", &SolverConfig::gbs);

  // --- harness -------------------------------------------------------------------

  py::class_<RunRecord>(m, "RunRecord")
      .def(py::init<>())
      .def_readwrite("problem", &RunRecord::problem)
      .def_readwrite("solver", &RunRecord::solver)
      .def_readwrite("n", &RunRecord::n)
      .def_readwrite("instance_index", &RunRecord::instance_index)
      .def_readwrite("instance_seed", &RunRecord::instance_seed)
      .def_readwrite("objective", &RunRecord::objective)
      .def_readwrite("valid", &RunRecord::valid)
      .def_readwrite("wall_ms", &RunRecord::wall_ms)
      .def_readwrite("timed_out", &RunRecord::timed_out)
      .def_readwrite("fell_back", &RunRecord::fell_back)
      .def_readwrite("solution", &RunRecord::solution)
      .def("to_json", [](const RunRecord& r) { return record_to_json(r); })
      .def("__repr__", [](const RunRecord& r) { return record_to_json(r); });

  m.def("derive_instance_seed", &derive_instance_seed, py::arg("seed_base"),
        py::arg("n"), py::arg("instance_index"));
  m.def(
      "run_instance",
      [](ProblemKind kind, const SolverConfig& cfg, int n, int instance_index,
         std::uint64_t seed_base) {
        const QScoreProblem problem{kind};
        py::gil_scoped_release release;
        return run_instance(problem, cfg, n, instance_index, seed_base);
      },
      py::arg("problem"), py::arg("config"), py::arg("n"),
      py::arg("instance_index"), py::arg("seed_base"),
      "Run one seeded instance end to end and return its record.");
  m.def(
      "aggregate",
      [](ProblemKind kind, const std::vector<RunRecord>& records,
         std::optional<double> exact_mean_optimum) {
        const QScoreProblem problem{kind};
        return aggregate(problem, records, exact_mean_optimum);
      },
      py::arg("problem"), py::arg("records"),
      py::arg("exact_mean_optimum") = std::nullopt);
  m.def(
      "exact_mean_for_records",
      [](const std::vector<RunRecord>& records, double budget_ms) {
        py::gil_scoped_release release;
        return exact_mean_for_records(records, budget_ms);
      },
      py::arg("records"), py::arg("budget_ms") = 300000.0);

  py::class_<ScanPlan>(m, "ScanPlan")
      .def(py::init<>())
      .def_readwrite("problem", &ScanPlan::problem)
      .def_readwrite("n_start", &ScanPlan::n_start)
      .def_readwrite("n_step", &ScanPlan::n_step)
      .def_readwrite("n_max", &ScanPlan::n_max)
      .def_readwrite("instances_per_n", &ScanPlan::instances_per_n)
      .def_readwrite("beta_star", &ScanPlan::beta_star)
      .def_readwrite("stop_avg_wall_ms", &ScanPlan::stop_avg_wall_ms)
      .def_readwrite("attach_exact_beta", &ScanPlan::attach_exact_beta)
      .def_readwrite("exact_cap", &ScanPlan::exact_cap)
      .def_readwrite("exact_budget_ms", &ScanPlan::exact_budget_ms)
      .def_readwrite("workers", &ScanPlan::workers)
      .def_readwrite("seed_base", &ScanPlan::seed_base);

  m.def("annealing_preset", &annealing_preset);
  m.def("classical_preset", &classical_preset);

  py::class_<ScanResult>(m, "ScanResult")
      .def_readonly("q", &ScanResult::q)
      .def_readonly("records", &ScanResult::records);

  m.def(
      "scan",
      [](const ScanPlan& plan, const SolverConfig& cfg) {
        py::gil_scoped_release release;
        return scan(plan, cfg);
      },
      py::arg("plan"), py::arg("config"),
      "Scan sizes until beta drops to beta_star (or a stop rule fires) and "
      "extract the Q-score.");

  // --- persistence -----------------------------------------------------------------

  m.def("record_to_json", &record_to_json, py::arg("record"));
  m.def("record_from_json", &record_from_json, py::arg("line"));
  m.def(
      "records_to_jsonl",
      [](const std::vector<RunRecord>& records) {
        std::ostringstream out;
        write_records_jsonl(out, records);
        return out.str();
      },
      py::arg("records"));
  m.def(
      "records_from_jsonl",
      [](const std::string& text) {
        std::istringstream in(text);
        return read_records_jsonl(in);
      },
      py::arg("text"));
  m.def(
      "summary_csv",
      [](const std::vector<BetaPoint>& series) {
        std::ostringstream out;
        write_summary_csv(out, series);
        return out.str();
      },
      py::arg("series"));

  m.def("run_selftest", []() {
    std::ostringstream log;
    const bool ok = run_selftest(log);
    return py::make_tuple(ok, log.str());
  });
}

}  // namespace qsbench
