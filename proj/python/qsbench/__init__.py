# Copyright 2026 The qsbench authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Q-score benchmarking toolkit.

Random Erdos-Renyi instances, classical and quantum-simulator solvers
(simulated annealing, tabu, exact branch-and-bound, QAOA state-vector and
Gaussian-boson-sampling pipelines), and the harness that turns per-instance
objectives into beta(N) curves and a Q-score.
"""

from qsbench._core import (
    BetaPoint,
    GbsConfig,
    Graph,
    ProblemKind,
    QScoreResult,
    QaoaConfig,
    QaoaOptimizer,
    RunRecord,
    SaParams,
    ScanPlan,
    ScanResult,
    SolverConfig,
    SolverKind,
    TabuParams,
    UnsupportedSizeError,
    aggregate,
    annealing_preset,
    beta,
    classical_preset,
    clique_c_max,
    clique_c_rand,
    clique_c_rand_partial,
    clique_random_size_pmf,
    clique_random_size_survival,
    cut_c_max,
    cut_c_rand,
    cut_value,
    derive_instance_seed,
    evaluate,
    exact_max_clique,
    exact_mean_for_records,
    generate_er,
    greedy_clique,
    hafnian,
    is_clique,
    problem_from_name,
    problem_name,
    q_score_from_series,
    random_growth_clique,
    record_from_json,
    record_to_json,
    records_from_jsonl,
    records_to_jsonl,
    run_instance,
    run_selftest,
    scan,
    solver_from_name,
    solver_name,
    summary_csv,
)

__all__ = [
    "BetaPoint",
    "GbsConfig",
    "Graph",
    "ProblemKind",
    "QScoreResult",
    "QaoaConfig",
    "QaoaOptimizer",
    "RunRecord",
    "SaParams",
    "ScanPlan",
    "ScanResult",
    "SolverConfig",
    "SolverKind",
    "TabuParams",
    "UnsupportedSizeError",
    "aggregate",
    "annealing_preset",
    "beta",
    "classical_preset",
    "clique_c_max",
    "clique_c_rand",
    "clique_c_rand_partial",
    "clique_random_size_pmf",
    "clique_random_size_survival",
    "cut_c_max",
    "cut_c_rand",
    "cut_value",
    "derive_instance_seed",
    "evaluate",
    "exact_max_clique",
    "exact_mean_for_records",
    "generate_er",
    "greedy_clique",
    "hafnian",
    "is_clique",
    "problem_from_name",
    "problem_name",
    "q_score_from_series",
    "random_growth_clique",
    "record_from_json",
    "record_to_json",
    "records_from_jsonl",
    "records_to_jsonl",
    "run_instance",
    "run_selftest",
    "scan",
    "solver_from_name",
    "solver_name",
    "summary_csv",
]

__version__ = "0.1.0"
