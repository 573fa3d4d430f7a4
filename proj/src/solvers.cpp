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

#include "qsbench/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qsbench/rng.hpp"

namespace qsbench {

namespace {

using Bitset = std::vector<std::uint64_t>;

bool bitset_empty(const Bitset& b) {
  for (std::uint64_t w : b) {
    if (w) return false;
  }
  return true;
}

}  // namespace

VertexSet random_growth_clique(const Graph& g, std::uint64_t seed) {
  const int n = g.vertex_count();
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) pool[v] = v;
  rng::SplitMix64 gen(seed);
  VertexSet clique;
  // Partial Fisher-Yates: position k receives a uniform draw from the
  // untried suffix.  The walk stops at the first vertex that does not extend
  // the clique.
  for (int k = 0; k < n; ++k) {
    const int pick =
        k + static_cast<int>(gen.next_below(static_cast<std::uint64_t>(n - k)));
    std::swap(pool[k], pool[pick]);
    const int v = pool[k];
    bool adjacent_to_all = true;
    for (int u : clique) {
      if (!g.has_edge(u, v)) {
        adjacent_to_all = false;
        break;
      }
    }
    if (!adjacent_to_all) break;
    clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

VertexSet greedy_clique(const Graph& g) {
  const int n = g.vertex_count();
  const int words = g.words_per_row();
  Bitset candidates(static_cast<std::size_t>(words), 0);
  for (int v = 0; v < n; ++v) candidates[v / 64] |= 1ULL << (v % 64);
  VertexSet clique;
  while (!bitset_empty(candidates)) {
    // Highest degree counted inside the candidate set, ties to lowest index.
    int best = -1;
    int best_degree = -1;
    for (int w = 0; w < words; ++w) {
      std::uint64_t word = candidates[w];
      while (word) {
        const int v = w * 64 + std::countr_zero(word);
        word &= word - 1;
        int degree = 0;
        auto nbrs = g.row(v);
        for (int x = 0; x < words; ++x) {
          degree += std::popcount(nbrs[x] & candidates[x]);
        }
        if (degree > best_degree) {
          best_degree = degree;
          best = v;
        }
      }
    }
    clique.push_back(best);
    auto nbrs = g.row(best);
    for (int x = 0; x < words; ++x) candidates[x] &= nbrs[x];
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

// --- Exact branch and bound -------------------------------------------------

namespace {

class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const Graph& g, const std::optional<Deadline>& deadline)
      : g_(g), words_(g.words_per_row()), deadline_(deadline) {}

  ExactCliqueResult run() {
    const int n = g_.vertex_count();
    // Seed the incumbent so pruning has a floor from the start.
    best_ = greedy_clique(g_);
    Bitset all(static_cast<std::size_t>(words_), 0);
    for (int v = 0; v < n; ++v) all[v / 64] |= 1ULL << (v % 64);
    current_.clear();
    expand(all);
    ExactCliqueResult result;
    result.clique = best_;
    std::sort(result.clique.begin(), result.clique.end());
    result.proven_optimal = !aborted_;
    result.nodes_explored = nodes_;
    return result;
  }

 private:
  static constexpr int kPollInterval = 2048;

  bool deadline_hit() {
    if (!deadline_) return false;
    if (++since_poll_ < kPollInterval) return false;
    since_poll_ = 0;
    if (deadline_->expired()) aborted_ = true;
    return aborted_;
  }

  // Greedy colouring of the candidate set; emits vertices in ascending
  // colour order.  A vertex of colour c cannot be in a clique of more than
  // c candidates, which gives the pruning bound below.
  void colour_sort(const Bitset& candidates, std::vector<int>& order,
                   std::vector<int>& colours) {
    order.clear();
    colours.clear();
    Bitset uncoloured = candidates;
    Bitset colour_class(static_cast<std::size_t>(words_));
    int colour = 0;
    while (!bitset_empty(uncoloured)) {
      ++colour;
      colour_class = uncoloured;
      while (!bitset_empty(colour_class)) {
        int v = -1;
        for (int w = 0; w < words_; ++w) {
          if (colour_class[w]) {
            v = w * 64 + std::countr_zero(colour_class[w]);
            break;
          }
        }
        order.push_back(v);
        colours.push_back(colour);
        uncoloured[v / 64] &= ~(1ULL << (v % 64));
        colour_class[v / 64] &= ~(1ULL << (v % 64));
        auto nbrs = g_.row(v);
        for (int w = 0; w < words_; ++w) colour_class[w] &= ~nbrs[w];
      }
    }
  }

  void expand(const Bitset& candidates) {
    ++nodes_;
    if (aborted_ || deadline_hit()) return;
    std::vector<int> order;
    std::vector<int> colours;
    colour_sort(candidates, order, colours);
    Bitset remaining = candidates;
    for (int k = static_cast<int>(order.size()) - 1; k >= 0; --k) {
      if (aborted_) return;
      const int v = order[k];
      if (static_cast<int>(current_.size()) + colours[k] <=
          static_cast<int>(best_.size())) {
        return;
      }
      current_.push_back(v);
      Bitset next(static_cast<std::size_t>(words_));
      auto nbrs = g_.row(v);
      bool any = false;
      for (int w = 0; w < words_; ++w) {
        next[w] = remaining[w] & nbrs[w];
        any |= next[w] != 0;
      }
      if (current_.size() > best_.size()) best_ = current_;
      if (any) expand(next);
      current_.pop_back();
      remaining[v / 64] &= ~(1ULL << (v % 64));
    }
  }

  const Graph& g_;
  const int words_;
  const std::optional<Deadline>& deadline_;
  VertexSet best_;
  VertexSet current_;
  bool aborted_ = false;
  std::int64_t nodes_ = 0;
  int since_poll_ = 0;
};

}  // namespace

ExactCliqueResult exact_max_clique(const Graph& g,
                                   std::optional<Deadline> deadline) {
  if (g.vertex_count() == 0) {
    return {VertexSet{}, true, 0};
  }
  MaxCliqueSearch search(g, deadline);
  return search.run();
}

// --- Annealing-style QUBO solvers -------------------------------------------

namespace {

// Compressed adjacency of the quadratic terms, with each coefficient listed
// from both endpoints for O(deg) incremental field updates.
struct SparseQubo {
  int n = 0;
  double offset = 0.0;
  std::vector<double> linear;
  std::vector<int> head;  // size n+1
  std::vector<int> nbr;
  std::vector<double> coeff;

  explicit SparseQubo(const Qubo& q)
      : n(q.n_vars()), offset(q.offset()), linear(q.linear()) {
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    const auto& quad = q.quadratic();
    for (const auto& [i, j, c] : quad) {
      (void)c;
      ++degree[i];
      ++degree[j];
    }
    head.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) head[i + 1] = head[i] + degree[i];
    nbr.resize(static_cast<std::size_t>(head[n]));
    coeff.resize(static_cast<std::size_t>(head[n]));
    std::vector<int> cursor(head.begin(), head.end() - 1);
    for (const auto& [i, j, c] : quad) {
      nbr[cursor[i]] = j;
      coeff[cursor[i]++] = c;
      nbr[cursor[j]] = i;
      coeff[cursor[j]++] = c;
    }
  }
};

// Mutable single-flip state: assignment, local fields and total energy.
struct FlipState {
  const SparseQubo& q;
  std::vector<std::uint8_t> x;
  std::vector<double> field;  // field[i] = linear[i] + sum_j c_ij x_j
  double energy = 0.0;

  explicit FlipState(const SparseQubo& qubo) : q(qubo) {}

  void reset_random(rng::SplitMix64& gen) {
    x.assign(static_cast<std::size_t>(q.n), 0);
    for (int i = 0; i < q.n; ++i) x[i] = gen.next() >> 63;
    recompute();
  }

  void recompute() {
    field = q.linear;
    energy = q.offset;
    for (int i = 0; i < q.n; ++i) {
      if (!x[i]) continue;
      energy += q.linear[i];
      for (int k = q.head[i]; k < q.head[i + 1]; ++k) {
        const int j = q.nbr[k];
        field[j] += q.coeff[k];
        if (x[j] && j > i) energy += q.coeff[k];
      }
    }
  }

  double flip_delta(int i) const { return x[i] ? -field[i] : field[i]; }

  void flip(int i) {
    energy += flip_delta(i);
    x[i] ^= 1;
    const double sign = x[i] ? 1.0 : -1.0;
    for (int k = q.head[i]; k < q.head[i + 1]; ++k) {
      field[q.nbr[k]] += sign * q.coeff[k];
    }
  }
};

double worst_uphill_estimate(const SparseQubo& q) {
  double worst = 0.0;
  for (int i = 0; i < q.n; ++i) {
    double reach = std::abs(q.linear[i]);
    for (int k = q.head[i]; k < q.head[i + 1]; ++k) {
      reach += std::abs(q.coeff[k]);
    }
    worst = std::max(worst, reach);
  }
  return std::max(worst, 1.0);
}

}  // namespace

AnnealResult simulated_annealing(const Qubo& q, const SaParams& params,
                                 const Deadline& deadline) {
  if (params.sweeps < 1) {
    throw std::invalid_argument("simulated_annealing: sweeps must be >= 1");
  }
  const SparseQubo sq(q);
  const int n = sq.n;
  AnnealResult result;
  result.assignment.assign(static_cast<std::size_t>(n), 0);
  result.energy = sq.offset;
  if (n == 0) return result;

  double beta_initial = params.beta_initial;
  double beta_final = params.beta_final;
  if (beta_initial <= 0.0) {
    beta_initial = std::log(2.0) / worst_uphill_estimate(sq);
  }
  if (beta_final <= 0.0) beta_final = std::log(1e4);
  if (beta_final <= beta_initial) beta_final = beta_initial * 10.0;
  const double ratio =
      params.sweeps > 1
          ? std::pow(beta_final / beta_initial, 1.0 / (params.sweeps - 1))
          : 1.0;

  rng::SplitMix64 gen(params.seed);
  FlipState state(sq);
  double best_energy = std::numeric_limits<double>::infinity();
  const std::int64_t max_restarts =
      params.restarts > 0 ? params.restarts
                          : (deadline.is_unlimited()
                                 ? 1
                                 : std::numeric_limits<std::int64_t>::max());
  for (std::int64_t restart = 0; restart < max_restarts; ++restart) {
    if (restart > 0 && deadline.expired()) break;
    state.reset_random(gen);
    if (state.energy < best_energy) {
      best_energy = state.energy;
      result.assignment = state.x;
    }
    double beta = params.sweeps > 1 ? beta_initial : beta_final;
    bool stop = false;
    for (int sweep = 0; sweep < params.sweeps && !stop; ++sweep) {
      for (int attempt = 0; attempt < n; ++attempt) {
        const int i = static_cast<int>(
            gen.next_below(static_cast<std::uint64_t>(n)));
        const double delta = state.flip_delta(i);
        if (delta <= 0.0 ||
            gen.next_double() < std::exp(-beta * delta)) {
          state.flip(i);
          if (state.energy < best_energy) {
            best_energy = state.energy;
            result.assignment = state.x;
          }
        }
      }
      beta *= ratio;
      if (deadline.expired()) stop = true;
    }
    result.restarts_run = restart + 1;
    if (stop) break;
  }
  result.energy = best_energy;
  return result;
}

AnnealResult tabu_search(const Qubo& q, const TabuParams& params,
                         const Deadline& deadline) {
  if (params.stall_limit < 1) {
    throw std::invalid_argument("tabu_search: stall_limit must be >= 1");
  }
  const SparseQubo sq(q);
  const int n = sq.n;
  AnnealResult result;
  result.assignment.assign(static_cast<std::size_t>(n), 0);
  result.energy = sq.offset;
  if (n == 0) return result;

  int tenure = params.tenure > 0 ? params.tenure
                                 : std::max(1, std::min(20, n / 4));
  tenure = std::min(tenure, std::max(1, n - 1));

  rng::SplitMix64 gen(params.seed);
  FlipState state(sq);
  state.reset_random(gen);
  double best_energy = state.energy;
  result.assignment = state.x;
  std::vector<std::int64_t> tabu_until(static_cast<std::size_t>(n), -1);
  std::int64_t iter = 0;
  std::int64_t stall = 0;
  std::int64_t restarts_done = 0;
  const std::int64_t max_restarts =
      params.restarts > 0 ? params.restarts
                          : (deadline.is_unlimited()
                                 ? 1
                                 : std::numeric_limits<std::int64_t>::max());
  constexpr std::int64_t kPollInterval = 16;

  while (true) {
    // Steepest admissible move: best delta among non-tabu variables, or a
    // tabu one that beats the incumbent (aspiration).  Ties go to the lowest
    // index via the strict comparison.
    int move = -1;
    double move_delta = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double delta = state.flip_delta(i);
      const bool tabu = tabu_until[i] > iter;
      if (tabu && !(state.energy + delta < best_energy)) continue;
      if (delta < move_delta) {
        move_delta = delta;
        move = i;
      }
    }
    if (move < 0) {
      // Everything tabu and nothing aspires; take the oldest tabu variable.
      move = 0;
      for (int i = 1; i < n; ++i) {
        if (tabu_until[i] < tabu_until[move]) move = i;
      }
    }
    state.flip(move);
    tabu_until[move] = iter + tenure;
    ++iter;
    if (state.energy < best_energy - 1e-12) {
      best_energy = state.energy;
      result.assignment = state.x;
      stall = 0;
    } else {
      ++stall;
    }
    if (iter % kPollInterval == 0 && deadline.expired()) break;
    if (stall >= params.stall_limit) {
      ++restarts_done;
      result.restarts_run = restarts_done;
      if (restarts_done >= max_restarts) break;
      state.reset_random(gen);
      std::fill(tabu_until.begin(), tabu_until.end(), -1);
      stall = 0;
      if (state.energy < best_energy) {
        best_energy = state.energy;
        result.assignment = state.x;
      }
    }
  }
  result.energy = best_energy;
  return result;
}

}  // namespace qsbench
