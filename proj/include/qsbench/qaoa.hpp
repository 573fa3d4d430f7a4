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

#ifndef QSBENCH_QAOA_HPP_
#define QSBENCH_QAOA_HPP_

#include <complex>
#include <cstdint>
#include <vector>

#include "qsbench/deadline.hpp"
#include "qsbench/graph.hpp"
#include "qsbench/qubo.hpp"

// Dense state-vector simulation of depth-p QAOA.
//
// The circuit alternates a diagonal cost layer exp(-i gamma H_C), with H_C
// the Ising image of the problem QUBO, and the transverse mixer
// exp(-i beta sum_k X_k), starting from |+...+>.  With 2^n amplitudes held
// in memory the cost expectation is exact, so parameter optimization runs on
// noiseless values; measurement shots enter only in the final readout.

namespace qsbench {

enum class QaoaOptimizer {
  // Quasi-Newton refinement with central-difference gradients.
  kSequentialQuadratic,
  // Nelder-Mead simplex refinement.
  kSimplex,
  // Compass (pattern) search refinement.
  kGridThenLocal,
};

struct QaoaConfig {
  int depth = 1;
  QaoaOptimizer optimizer = QaoaOptimizer::kSequentialQuadratic;
  // Total expectation-evaluation budget across grid seeding and refinement.
  int max_evals = 200;
  // Measurement shots for the final readout.
  int shots = 512;
  std::uint64_t seed = 1;
  // Largest simulable spin count; instances above it are unsupported.
  int qubit_cap = 20;
};

struct QaoaParameters {
  std::vector<double> gammas;
  std::vector<double> betas;
  double expectation = 0.0;
  int evals_used = 0;
};

// Exact <H_C> after the depth-p circuit.  gammas and betas must both have
// size p >= 1.  Throws UnsupportedSizeError when the spin count exceeds cap.
double qaoa_expectation(const IsingModel& ising,
                        const std::vector<double>& gammas,
                        const std::vector<double>& betas, int qubit_cap = 20);

// Coarse grid seed over [0, pi) x [0, pi/2), then local refinement with the
// configured method, capped at cfg.max_evals evaluations.  Deterministic
// given cfg.seed.  Anytime: polls the deadline between evaluations and
// returns the best parameters found so far.
QaoaParameters qaoa_optimize(const IsingModel& ising, const QaoaConfig& cfg,
                             const Deadline& deadline);

// Sampled basis states (bit i of a draw = x_i) from the final state at the
// given parameters.
std::vector<std::uint64_t> qaoa_sample(const IsingModel& ising,
                                       const std::vector<double>& gammas,
                                       const std::vector<double>& betas,
                                       int shots, std::uint64_t seed,
                                       int qubit_cap = 20);

// End-to-end Max-Clique solve: clique QUBO -> Ising -> optimize -> sample ->
// decode with repair; returns the largest clique over the shots.
VertexSet qaoa_solve_clique(const Graph& g, const QaoaConfig& cfg,
                            const Deadline& deadline, double penalty = 2.0);

}  // namespace qsbench

#endif  // QSBENCH_QAOA_HPP_
