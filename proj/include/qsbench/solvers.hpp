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

#ifndef QSBENCH_SOLVERS_HPP_
#define QSBENCH_SOLVERS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "qsbench/deadline.hpp"
#include "qsbench/graph.hpp"
#include "qsbench/qubo.hpp"

// Classical reference solvers.  All of them are deterministic given their
// inputs and seed when the deadline is not binding; under a binding deadline
// they follow the anytime contract and return the best incumbent found.

namespace qsbench {

// The random baseline: visit vertices in uniformly random order, add each
// drawn vertex if it is adjacent to everything accepted so far, and stop at
// the first rejection.  Its size distribution on G(n, p) follows
// P[X >= i] = p^(i(i-1)/2), with mean ~1.64 at p = 1/2 independent of n.
VertexSet random_growth_clique(const Graph& g, std::uint64_t seed);

// Deterministic greedy: repeatedly add the vertex of highest degree within
// the shrinking candidate set (ties to the lowest index).
VertexSet greedy_clique(const Graph& g);

struct ExactCliqueResult {
  VertexSet clique;
  // True when the search space was exhausted, i.e. clique is a maximum
  // clique; false when the deadline cut the proof short and clique is only
  // the best incumbent.
  bool proven_optimal = false;
  std::int64_t nodes_explored = 0;
};

// Branch and bound over bitset neighbourhoods with a greedy-colouring upper
// bound.  Anytime under the optional deadline.
ExactCliqueResult exact_max_clique(
    const Graph& g, std::optional<Deadline> deadline = std::nullopt);

struct SaParams {
  // Sweeps per restart (one sweep = n_vars single-flip attempts).
  int sweeps = 512;
  // Inverse-temperature ladder, geometric from beta_initial to beta_final.
  // Zero means auto-scale: beta_initial accepts the worst uphill move with
  // probability ~1/2, beta_final accepts a unit uphill move with
  // probability ~1e-4.
  double beta_initial = 0.0;
  double beta_final = 0.0;
  // Restarts before giving up; 0 means keep restarting until the deadline
  // (one restart if the deadline is unlimited).
  int restarts = 0;
  std::uint64_t seed = 1;
};

struct TabuParams {
  // Moves a flipped variable stays tabu; 0 means min(20, n/4), at least 1.
  int tenure = 0;
  // Consecutive non-improving moves before a diversifying restart.
  int stall_limit = 1000;
  // Restarts before giving up; 0 means keep restarting until the deadline
  // (one restart if the deadline is unlimited).
  int restarts = 0;
  std::uint64_t seed = 1;
};

struct AnnealResult {
  std::vector<std::uint8_t> assignment;
  double energy = 0.0;
  std::int64_t restarts_run = 0;
};

// Single-flip Metropolis annealing over the QUBO.  Keeps the best-energy
// assignment seen across all restarts.
AnnealResult simulated_annealing(const Qubo& q, const SaParams& params,
                                 const Deadline& deadline);

// Steepest single-flip tabu search with aspiration (a tabu move is allowed
// when it beats the best energy seen).
AnnealResult tabu_search(const Qubo& q, const TabuParams& params,
                         const Deadline& deadline);

}  // namespace qsbench

#endif  // QSBENCH_SOLVERS_HPP_
