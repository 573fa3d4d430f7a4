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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qsbench/framework.hpp"
#include "qsbench/graph.hpp"
#include "qsbench/qubo.hpp"
#include "qsbench/solvers.hpp"

namespace {

qsbench::Graph complete_graph(int n) {
  qsbench::Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

qsbench::Graph cycle_graph(int n) {
  qsbench::Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(0, n - 1);
  return g;
}

// Independent oracle: clique number by subset enumeration.
int brute_force_omega(const qsbench::Graph& g) {
  int best = 0;
  const int n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    qsbench::VertexSet s;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1) s.push_back(i);
    }
    if (static_cast<int>(s.size()) > best && qsbench::is_clique(g, s)) {
      best = static_cast<int>(s.size());
    }
  }
  return best;
}

double brute_force_min(const qsbench::Qubo& q) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << q.n_vars()); ++mask) {
    std::vector<std::uint8_t> x(q.n_vars(), 0);
    for (int i = 0; i < q.n_vars(); ++i) x[i] = (mask >> i) & 1;
    best = std::min(best, q.energy(x));
  }
  return best;
}

}  // namespace

TEST_CASE("random growth baseline") {
  const qsbench::Graph k6 = complete_graph(6);
  CHECK(qsbench::random_growth_clique(k6, 1) ==
        qsbench::VertexSet{0, 1, 2, 3, 4, 5});

  const qsbench::Graph edgeless(5);
  CHECK(qsbench::random_growth_clique(edgeless, 9).size() == 1);

  // Deterministic in the seed.
  const qsbench::Graph g = qsbench::generate_er({30, 0.5, 5});
  CHECK(qsbench::random_growth_clique(g, 7) ==
        qsbench::random_growth_clique(g, 7));

  // Always a clique, sorted.
  for (std::uint64_t s = 0; s < 200; ++s) {
    const qsbench::VertexSet c = qsbench::random_growth_clique(g, s);
    CHECK(qsbench::is_clique(g, c));
    CHECK_FALSE(c.empty());
  }
}

TEST_CASE("random growth mean matches the series constant") {
  // Averaged over fresh G(30, 1/2) draws the grown-clique size has mean
  // sum_i i (1 - 2^-i) 2^(-i(i-1)/2); check within four standard errors.
  const int trials = 20000;
  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    const qsbench::Graph g =
        qsbench::generate_er({30, 0.5, 90000 + static_cast<std::uint64_t>(t)});
    sum += static_cast<double>(
        qsbench::random_growth_clique(g, 17 + static_cast<std::uint64_t>(t))
            .size());
  }
  const double mean = sum / trials;
  double expected = 0.0;
  double second = 0.0;
  for (int i = 1; i <= 30; ++i) {
    const double pmf = qsbench::clique_random_size_pmf(0.5, i);
    expected += i * pmf;
    second += static_cast<double>(i) * i * pmf;
  }
  const double sigma = std::sqrt(second - expected * expected);
  CHECK(std::abs(mean - expected) < 4 * sigma / std::sqrt(trials));
  CHECK(expected == doctest::Approx(qsbench::clique_c_rand()).epsilon(1e-9));
}

TEST_CASE("greedy clique") {
  CHECK(qsbench::greedy_clique(complete_graph(5)) ==
        qsbench::VertexSet{0, 1, 2, 3, 4});
  CHECK(qsbench::greedy_clique(qsbench::Graph(4)) == qsbench::VertexSet{0});
  CHECK(qsbench::greedy_clique(cycle_graph(5)) == qsbench::VertexSet{0, 1});

  // Degree-greedy is fooled by a star: the hub has the highest degree but
  // only leaf neighbours, while the true maximum clique is the triangle.
  qsbench::Graph trap(8);
  trap.add_edge(0, 1);
  trap.add_edge(1, 2);
  trap.add_edge(0, 2);
  for (int leaf = 4; leaf < 8; ++leaf) trap.add_edge(3, leaf);
  CHECK(qsbench::greedy_clique(trap) == qsbench::VertexSet{3, 4});
  CHECK(qsbench::exact_max_clique(trap).clique == qsbench::VertexSet{0, 1, 2});

  // Always a clique on random instances.
  for (int t = 0; t < 30; ++t) {
    const qsbench::Graph g =
        qsbench::generate_er({40, 0.5, 300 + static_cast<std::uint64_t>(t)});
    CHECK(qsbench::is_clique(g, qsbench::greedy_clique(g)));
  }
}

TEST_CASE("exact solver against enumeration") {
  CHECK(qsbench::exact_max_clique(complete_graph(6)).clique.size() == 6);
  CHECK(qsbench::exact_max_clique(qsbench::Graph(0)).clique.empty());
  CHECK(qsbench::exact_max_clique(qsbench::Graph(3)).clique.size() == 1);
  CHECK(qsbench::exact_max_clique(cycle_graph(7)).clique.size() == 2);

  for (int t = 0; t < 50; ++t) {
    const qsbench::Graph g =
        qsbench::generate_er({12, 0.5, 500 + static_cast<std::uint64_t>(t)});
    const qsbench::ExactCliqueResult r = qsbench::exact_max_clique(g);
    CHECK(r.proven_optimal);
    CHECK(qsbench::is_clique(g, r.clique));
    CHECK(static_cast<int>(r.clique.size()) == brute_force_omega(g));
    CHECK(r.nodes_explored > 0);
  }
}

TEST_CASE("exact solver is anytime under a deadline") {
  // Dense 300-vertex instance: the proof cannot finish in a millisecond,
  // but a valid incumbent clique comes back immediately.
  const qsbench::Graph g = qsbench::generate_er({300, 0.9, 1});
  const qsbench::ExactCliqueResult r =
      qsbench::exact_max_clique(g, qsbench::Deadline(1.0));
  CHECK(qsbench::is_clique(g, r.clique));
  CHECK(r.clique.size() >= qsbench::greedy_clique(g).size());
  CHECK_FALSE(r.proven_optimal);

  // Unlimited deadline on a small instance still proves optimality.
  const qsbench::Graph small = qsbench::generate_er({20, 0.5, 2});
  const qsbench::ExactCliqueResult done =
      qsbench::exact_max_clique(small, qsbench::Deadline::unlimited());
  CHECK(done.proven_optimal);
}

TEST_CASE("simulated annealing finds small optima") {
  int optimal = 0;
  const int cases = 100;
  for (int t = 0; t < cases; ++t) {
    const qsbench::Graph g =
        qsbench::generate_er({12, 0.5, 3000 + static_cast<std::uint64_t>(t)});
    const qsbench::Qubo q = qsbench::clique_qubo(g);
    qsbench::SaParams params;
    params.sweeps = 128;
    params.restarts = 4;
    params.seed = 42 + static_cast<std::uint64_t>(t);
    const qsbench::AnnealResult r =
        qsbench::simulated_annealing(q, params, qsbench::Deadline::unlimited());
    CHECK(r.energy == doctest::Approx(q.energy(r.assignment)).epsilon(1e-9));
    if (std::abs(r.energy - brute_force_min(q)) < 1e-9) ++optimal;
  }
  CHECK(optimal >= 95);
}

TEST_CASE("tabu search finds small optima") {
  int optimal = 0;
  const int cases = 100;
  for (int t = 0; t < cases; ++t) {
    const qsbench::Graph g =
        qsbench::generate_er({12, 0.5, 4000 + static_cast<std::uint64_t>(t)});
    const qsbench::Qubo q = qsbench::cut_qubo(g);
    qsbench::TabuParams params;
    params.stall_limit = 200;
    params.restarts = 2;
    params.seed = 48 + static_cast<std::uint64_t>(t);
    const qsbench::AnnealResult r =
        qsbench::tabu_search(q, params, qsbench::Deadline::unlimited());
    CHECK(r.energy == doctest::Approx(q.energy(r.assignment)).epsilon(1e-9));
    if (std::abs(r.energy - brute_force_min(q)) < 1e-9) ++optimal;
  }
  CHECK(optimal >= 95);
}

TEST_CASE("annealer energy bookkeeping on fuzzed QUBOs") {
  std::uint64_t s = 1;
  auto next_coeff = [&s]() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(static_cast<std::int64_t>(s >> 11)) /
               static_cast<double>(1LL << 52) -
           1.0;  // roughly uniform in [-1, 1)
  };
  for (int t = 0; t < 20; ++t) {
    qsbench::Qubo q(16);
    q.set_offset(next_coeff());
    for (int i = 0; i < 16; ++i) q.add_linear(i, 2.0 * next_coeff());
    for (int i = 0; i < 16; ++i) {
      for (int j = i + 1; j < 16; ++j) {
        if (((i * 31 + j * 17 + t) % 3) == 0) {
          q.add_quadratic(i, j, 2.0 * next_coeff());
        }
      }
    }
    qsbench::SaParams sa;
    sa.sweeps = 64;
    sa.restarts = 2;
    sa.seed = 100 + static_cast<std::uint64_t>(t);
    const qsbench::AnnealResult rs =
        qsbench::simulated_annealing(q, sa, qsbench::Deadline::unlimited());
    CHECK(rs.energy == doctest::Approx(q.energy(rs.assignment)).epsilon(1e-9));

    qsbench::TabuParams tb;
    tb.stall_limit = 100;
    tb.restarts = 1;
    tb.seed = 200 + static_cast<std::uint64_t>(t);
    const qsbench::AnnealResult rt =
        qsbench::tabu_search(q, tb, qsbench::Deadline::unlimited());
    CHECK(rt.energy == doctest::Approx(q.energy(rt.assignment)).epsilon(1e-9));
    // Tabu's steepest descent from a random start should never lose to the
    // all-zeros assignment.
    CHECK(rt.energy <= q.energy(std::vector<std::uint8_t>(16, 0)) + 1e-9);
  }
}

TEST_CASE("annealers are deterministic and monotone in restarts") {
  const qsbench::Graph g = qsbench::generate_er({25, 0.5, 31});
  const qsbench::Qubo q = qsbench::clique_qubo(g);

  qsbench::SaParams sa;
  sa.sweeps = 64;
  sa.restarts = 2;
  sa.seed = 9;
  const qsbench::AnnealResult a =
      qsbench::simulated_annealing(q, sa, qsbench::Deadline::unlimited());
  const qsbench::AnnealResult b =
      qsbench::simulated_annealing(q, sa, qsbench::Deadline::unlimited());
  CHECK(a.energy == b.energy);
  CHECK(a.assignment == b.assignment);
  CHECK(a.restarts_run == 2);

  // The first restarts of a longer run replay the shorter run exactly, so
  // more restarts can only improve the best energy.
  sa.restarts = 6;
  const qsbench::AnnealResult c =
      qsbench::simulated_annealing(q, sa, qsbench::Deadline::unlimited());
  CHECK(c.energy <= a.energy);

  qsbench::TabuParams tb;
  tb.restarts = 1;
  tb.seed = 9;
  const qsbench::AnnealResult ta =
      qsbench::tabu_search(q, tb, qsbench::Deadline::unlimited());
  const qsbench::AnnealResult tc =
      qsbench::tabu_search(q, tb, qsbench::Deadline::unlimited());
  CHECK(ta.energy == tc.energy);
  CHECK(ta.assignment == tc.assignment);
}

TEST_CASE("annealers are anytime on large instances") {
  // A large Max-Cut QUBO with a short budget: both solvers must come back
  // promptly with a consistent incumbent instead of finishing their ladder.
  const qsbench::Graph g = qsbench::generate_er({3000, 0.5, 77});
  const qsbench::Qubo q = qsbench::cut_qubo(g);

  qsbench::SaParams sa;
  sa.sweeps = 100000;  // far more than the budget allows
  sa.restarts = 0;     // until the deadline
  sa.seed = 5;
  const qsbench::AnnealResult rs =
      qsbench::simulated_annealing(q, sa, qsbench::Deadline(50.0));
  CHECK(rs.restarts_run >= 1);
  CHECK(rs.energy == doctest::Approx(q.energy(rs.assignment)).epsilon(1e-6));
  // A random start cuts about half the edges; even a clipped run should not
  // do worse.
  CHECK(rs.energy < -0.45 * static_cast<double>(g.edge_count()));

  qsbench::TabuParams tb;
  tb.restarts = 0;
  tb.seed = 5;
  const qsbench::AnnealResult rt =
      qsbench::tabu_search(q, tb, qsbench::Deadline(50.0));
  CHECK(rt.energy == doctest::Approx(q.energy(rt.assignment)).epsilon(1e-6));
  CHECK(rt.energy < -0.45 * static_cast<double>(g.edge_count()));
}

TEST_CASE("parameter validation") {
  const qsbench::Qubo q = qsbench::clique_qubo(complete_graph(4));
  qsbench::SaParams sa;
  sa.sweeps = 0;
  CHECK_THROWS_AS(
      qsbench::simulated_annealing(q, sa, qsbench::Deadline::unlimited()),
      std::invalid_argument);
  qsbench::TabuParams tb;
  tb.stall_limit = 0;
  CHECK_THROWS_AS(qsbench::tabu_search(q, tb, qsbench::Deadline::unlimited()),
                  std::invalid_argument);

  // Zero-variable models are legal and return the offset.
  qsbench::Qubo empty(0);
  empty.set_offset(2.5);
  CHECK(qsbench::simulated_annealing(empty, qsbench::SaParams{},
                                     qsbench::Deadline::unlimited())
            .energy == doctest::Approx(2.5));
  CHECK(qsbench::tabu_search(empty, qsbench::TabuParams{},
                             qsbench::Deadline::unlimited())
            .energy == doctest::Approx(2.5));
}
