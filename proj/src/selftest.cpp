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

#include "qsbench/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <vector>

#include "qsbench/framework.hpp"
#include "qsbench/gbs.hpp"
#include "qsbench/graph.hpp"
#include "qsbench/qubo.hpp"

namespace qsbench {

namespace {

constexpr double kSeriesReference = 1.6416325;

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

std::vector<double> adjacency_matrix(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (const auto& [i, j] : g.edges()) {
    m[static_cast<std::size_t>(i) * n + j] = 1.0;
    m[static_cast<std::size_t>(j) * n + i] = 1.0;
  }
  return m;
}

// Reference answers by exhaustive enumeration; deliberately built on raw
// subset loops rather than the solver or QUBO code paths being checked.
int brute_force_max_clique(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet s;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) s.push_back(v);
    }
    if (static_cast<int>(s.size()) <= best) continue;
    if (is_clique(g, s)) best = static_cast<int>(s.size());
  }
  return best;
}

std::int64_t brute_force_max_cut(const Graph& g) {
  const int n = g.vertex_count();
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::int64_t cut = 0;
    for (const auto& [i, j] : g.edges()) {
      if (((mask >> i) & 1u) != ((mask >> j) & 1u)) ++cut;
    }
    best = std::max(best, cut);
  }
  return best;
}

double brute_force_qubo_min(const Qubo& q) {
  const int n = q.n_vars();
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::uint8_t> x(static_cast<std::size_t>(n), 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (int v = 0; v < n; ++v) x[v] = (mask >> v) & 1u;
    best = std::min(best, q.energy(x));
  }
  return best;
}

}  // namespace

bool run_selftest(std::ostream& log, bool perturb_constant) {
  bool all_passed = true;
  const auto check = [&](const char* name, bool passed) {
    log << (passed ? "[PASS] " : "[FAIL] ") << name << '\n';
    all_passed = all_passed && passed;
  };

  double series = clique_c_rand();
  if (perturb_constant) series += 1e-3;
  check("random-baseline series constant",
        std::abs(series - kSeriesReference) <= 1e-7);

  double pmf_total = 0.0;
  for (int i = 1; i <= 60; ++i) pmf_total += clique_random_size_pmf(0.5, i);
  check("growth size distribution normalizes",
        std::abs(pmf_total - 1.0) <= 1e-12);

  check("hafnian oracle values",
        std::abs(hafnian({}, 0) - 1.0) <= 1e-12 &&
            std::abs(hafnian(adjacency_matrix(complete_graph(4)), 4) - 3.0) <=
                1e-12 &&
            std::abs(hafnian(adjacency_matrix(cycle_graph(6)), 6) - 2.0) <=
                1e-12 &&
            std::abs(hafnian(adjacency_matrix(complete_graph(6)), 6) - 15.0) <=
                1e-12);

  bool qubo_exact = true;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int n = 4 + static_cast<int>(seed % 7);
    const Graph g = generate_er({n, 0.5, seed * 7919});
    if (brute_force_qubo_min(clique_qubo(g, 2.0)) !=
        -static_cast<double>(brute_force_max_clique(g))) {
      qubo_exact = false;
    }
    if (brute_force_qubo_min(cut_qubo(g)) !=
        -static_cast<double>(brute_force_max_cut(g))) {
      qubo_exact = false;
    }
  }
  check("QUBO optima match exhaustive search (n <= 10)", qubo_exact);

  const QScoreProblem clique = max_clique_problem();
  const double c_rand = clique.c_rand(16);
  const double c_max = clique.c_max(16);
  check("beta identities",
        beta(clique, 16, c_rand) == 0.0 && beta(clique, 16, c_max) == 1.0);

  const QScoreResult q = q_score_from_series(
      {{5, 0.0, 1.0, 1, {}, 0.0}, {10, 0.0, 0.5, 1, {}, 0.0},
       {15, 0.0, 0.1, 1, {}, 0.0}},
      0.2);
  check("q-score extraction", q.q_score == 10 && !q.censored);

  const Graph sample = generate_er({24, 0.5, 12345});
  check("graph text round trip",
        graph_from_string(graph_to_string(sample)) == sample);

  bool ising_matches = true;
  const Graph ising_graph = generate_er({8, 0.5, 4242});
  const Qubo q_model = clique_qubo(ising_graph, 2.0);
  const IsingModel ising = to_ising(q_model);
  for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
    std::vector<std::uint8_t> x(8);
    std::vector<int> z(8);
    for (int v = 0; v < 8; ++v) {
      x[v] = (mask >> v) & 1u;
      z[v] = x[v] ? -1 : 1;
    }
    if (std::abs(q_model.energy(x) - ising.energy(z)) > 1e-9) {
      ising_matches = false;
    }
  }
  check("Ising transform preserves energies", ising_matches);

  return all_passed;
}

}  // namespace qsbench
