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

"""Smoke tests for the qsbench Python module and the CLI."""

import json
import os
import subprocess
from pathlib import Path

import pytest

import qsbench as qs

MAX_CLIQUE = qs.ProblemKind.MAX_CLIQUE


def test_reference_costs():
    assert abs(qs.clique_c_rand() - 1.6416325) < 1e-7
    assert qs.clique_c_rand_partial(2) == 1.25
    assert qs.clique_random_size_survival(0.5, 3) == pytest.approx(0.125)
    assert qs.cut_c_rand(100) == 1250.0
    assert qs.cut_c_max(100) == pytest.approx(1428.0)
    assert qs.clique_c_max(16) == pytest.approx(5.885390, abs=1e-5)
    for n in (8, 50, 200):
        assert qs.beta(MAX_CLIQUE, n, qs.clique_c_rand()) == 0.0
        assert qs.beta(MAX_CLIQUE, n, qs.clique_c_max(n)) == 1.0


def test_graph_generation_round_trip():
    g = qs.generate_er(24, 0.5, seed=12345)
    assert g == qs.generate_er(24, 0.5, seed=12345)
    assert g != qs.generate_er(24, 0.5, seed=12346)
    assert qs.Graph.from_text(g.to_text()) == g
    assert 0 < g.edge_count < 24 * 23 // 2
    assert sum(g.degree(v) for v in range(24)) == 2 * g.edge_count

    tiny = qs.Graph(3)
    tiny.add_edge(0, 1)
    tiny.add_edge(0, 2)
    assert tiny.edges() == [(0, 1), (0, 2)]
    with pytest.raises(Exception):
        tiny.add_edge(0, 0)


def test_solvers_agree_with_exact():
    g = qs.generate_er(12, 0.5, seed=7)
    clique, proven, nodes = qs.exact_max_clique(g)
    assert proven and nodes > 0
    assert qs.is_clique(g, clique)
    greedy = qs.greedy_clique(g)
    assert qs.is_clique(g, greedy)
    assert 1 <= len(greedy) <= len(clique)
    growth = qs.random_growth_clique(g, seed=3)
    assert qs.is_clique(g, growth)
    assert growth == qs.random_growth_clique(g, seed=3)


def test_run_instance_and_nested_config():
    cfg = qs.SolverConfig()
    cfg.solver = qs.SolverKind.SIM_ANNEAL
    cfg.no_time_limit = True
    cfg.sa.restarts = 2  # nested structs must be mutable in place
    assert cfg.sa.restarts == 2
    record = qs.run_instance(MAX_CLIQUE, cfg, 10, 0, 99)
    assert record.valid and not record.fell_back
    g = qs.generate_er(10, 0.5, seed=record.instance_seed)
    assert qs.evaluate(MAX_CLIQUE, g, record.solution) == record.objective
    replay = qs.run_instance(MAX_CLIQUE, cfg, 10, 0, 99)
    assert replay.objective == record.objective
    assert replay.solution == record.solution


def test_record_json_round_trip():
    cfg = qs.SolverConfig()
    cfg.solver = qs.SolverKind.GREEDY
    cfg.no_time_limit = True
    record = qs.run_instance(MAX_CLIQUE, cfg, 8, 1, 42)
    line = qs.record_to_json(record)
    parsed = json.loads(line)
    assert parsed["problem"] == "max-clique"
    assert parsed["solver"] == "greedy"
    assert parsed["n"] == 8
    back = qs.record_from_json(line)
    assert back.solution == record.solution
    assert back.objective == record.objective

    other = qs.run_instance(MAX_CLIQUE, cfg, 8, 2, 42)
    text = qs.records_to_jsonl([record, other])
    assert [r.instance_index for r in qs.records_from_jsonl(text)] == [1, 2]


def test_scan_and_q_score():
    plan = qs.ScanPlan()
    plan.n_start = 3
    plan.n_step = 3
    plan.n_max = 9
    plan.instances_per_n = 5
    plan.workers = 1
    plan.seed_base = 5
    cfg = qs.SolverConfig()
    cfg.solver = qs.SolverKind.GREEDY
    cfg.no_time_limit = True
    result = qs.scan(plan, cfg)
    assert result.q.q_score == 9
    assert result.q.censored  # greedy stays above beta* up to the ceiling
    assert len(result.records) == 15
    csv = qs.summary_csv(result.q.series)
    assert csv.splitlines()[0].startswith("n,c_mean,beta")

    series = [qs.BetaPoint(), qs.BetaPoint()]
    series[0].n, series[0].beta = 5, 0.9
    series[1].n, series[1].beta = 10, 0.1
    assert qs.q_score_from_series(series, 0.2).q_score == 5


def test_hafnian():
    k4 = [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]
    assert qs.hafnian(k4) == pytest.approx(3.0)
    assert qs.hafnian([]) == pytest.approx(1.0)
    with pytest.raises(Exception):
        qs.hafnian([[0, 1], [1, 0], [0, 0]])  # not square


def test_unsupported_size_falls_back():
    cfg = qs.SolverConfig()
    cfg.solver = qs.SolverKind.QAOA
    cfg.no_time_limit = True
    cfg.qaoa.qubit_cap = 4
    record = qs.run_instance(MAX_CLIQUE, cfg, 8, 0, 1)
    assert record.fell_back and not record.valid
    assert record.objective == pytest.approx(qs.clique_c_rand())


def test_gbs_instance():
    cfg = qs.SolverConfig()
    cfg.solver = qs.SolverKind.GBS
    cfg.no_time_limit = True
    cfg.gbs.samples = 50
    record = qs.run_instance(MAX_CLIQUE, cfg, 10, 1, 11)
    assert record.valid
    g = qs.generate_er(10, 0.5, seed=record.instance_seed)
    assert qs.is_clique(g, record.solution)


def test_selftest_passes():
    ok, log = qs.run_selftest()
    assert ok
    assert log.strip()


# --- CLI -----------------------------------------------------------------


def cli_path():
    env = os.environ.get("QSBENCH_CLI")
    if env and Path(env).exists():
        return env
    fallback = Path(__file__).resolve().parents[2] / "build" / "qsbench"
    if fallback.exists():
        return str(fallback)
    return None


requires_cli = pytest.mark.skipif(cli_path() is None,
                                  reason="qsbench CLI binary not available")


def run_cli(*args, expect=0):
    proc = subprocess.run([cli_path(), *args], capture_output=True, text=True)
    assert proc.returncode == expect, proc.stderr
    return proc


@requires_cli
def test_cli_selftest():
    run_cli("selftest")


@requires_cli
def test_cli_gen(tmp_path):
    proc = run_cli("gen", "--n", "12", "--seed", "5", "--count", "2",
                   "--out-dir", str(tmp_path))
    paths = [Path(line) for line in proc.stdout.splitlines() if line.strip()]
    assert len(paths) == 2
    for path in paths:
        graph = qs.Graph.from_text(path.read_text())
        assert graph.vertex_count == 12


@requires_cli
def test_cli_run_score_report(tmp_path):
    records = tmp_path / "records.jsonl"
    # A single size (ceiling == start) keeps the record count independent of
    # whether beta clears the threshold.
    proc = run_cli("run", "--solver", "greedy", "--n-start", "5",
                   "--n-step", "5", "--n-max", "5", "--instances", "4",
                   "--no-time-limit", "--seed", "3", "--out", str(records))
    assert "Q-score" in proc.stdout
    assert records.exists()
    csv = tmp_path / "records.csv"
    assert csv.exists()
    assert csv.read_text().splitlines()[0].startswith("n,c_mean,beta")
    loaded = qs.records_from_jsonl(records.read_text())
    assert len(loaded) == 4  # one size, four instances

    score = run_cli("score", "--in", str(records))
    assert "Q-score" in score.stdout

    report = run_cli("report", "--in", str(records))
    assert report.stdout.splitlines()[0].startswith("n,")
