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

#ifndef QSBENCH_FRAMEWORK_HPP_
#define QSBENCH_FRAMEWORK_HPP_

#include <optional>
#include <string>
#include <vector>

#include "qsbench/graph.hpp"

// Q-score scaffolding: reference costs for the random baseline and the
// asymptotic optimum, the beta(N) quality ratio, and the extraction of the
// Q-score from a series of measured points.
//
// For a problem instantiation, beta(N) = (C(N) - C_rand(N)) / (C_max(N) -
// C_rand(N)) where C(N) is the mean objective reached by the solver over
// random instances of size N, C_rand(N) the expected objective of a random
// assignment, and C_max(N) the (asymptotic) optimum.  The Q-score is the
// largest N whose measured beta stays above a threshold beta* (0.2 by
// default).

namespace qsbench {

enum class ProblemKind { kMaxClique, kMaxCut };

std::string problem_name(ProblemKind kind);
ProblemKind problem_from_name(const std::string& name);

// --- Max-Clique references ------------------------------------------------

// Size distribution of the clique grown by uniform random vertex insertion
// on G(n, p), n large: P[X >= i] = p^(i(i-1)/2).
double clique_random_size_survival(double p, int i);
// P[X = i] = (1 - p^i) * p^(i(i-1)/2), i >= 1.
double clique_random_size_pmf(double p, int i);

// Partial sum of E[X] = sum_{i>=1} i * (1 - 2^-i) * 2^(-i(i-1)/2) over the
// first `terms` terms (p = 1/2 baseline).
double clique_c_rand_partial(int terms);

// Random baseline for Max-Clique at p = 1/2: the series above summed to
// convergence (terms below 1e-12 dropped).  Approximately 1.6416326, and
// independent of n.
double clique_c_rand();

// Asymptotic maximum clique size of G(n, 1/2):
// 2*log2(n) - 2*log2(log2(n)) + 2*log2(e/2) + 1.  Requires n >= 3.  The
// error of this estimate is below the beta* = 0.2 band for n >= 20 or so;
// at very small n it can even fall below the true mean optimum, which is
// why exact-oracle betas exist (see harness).
double clique_c_max(int n);

// --- Max-Cut references ---------------------------------------------------

// Expected cut of a uniform random partition: floor(n/2)*ceil(n/2)/2, the
// exact form of the n^2/8 baseline.  Requires n >= 2.
double cut_c_rand(int n);

// Asymptotic optimum cut of G(n, 1/2): n^2/8 + 0.178*n^(3/2).
double cut_c_max(int n);

// --- Problem handle ---------------------------------------------------------

// Bundles the reference costs and the objective evaluation of one metric
// instantiation, so harness code can stay problem-agnostic.
struct QScoreProblem {
  ProblemKind kind = ProblemKind::kMaxClique;

  double c_rand(int n) const;
  double c_max(int n) const;
  // Objective of a solution: clique size for Max-Clique (s must be a clique),
  // crossing-edge count for Max-Cut (s is one side of the partition).
  double evaluate(const Graph& g, const VertexSet& s) const;
};

QScoreProblem max_clique_problem();
QScoreProblem max_cut_problem();

// beta(N) for a measured mean objective c_mean.  Affine in c_mean; 0 at the
// random baseline and 1 at the asymptotic optimum.  May exceed 1 or go
// negative at small n where the asymptotic C_max is inexact.
double beta(const QScoreProblem& problem, int n, double c_mean);

// One aggregated scan point.
struct BetaPoint {
  int n = 0;
  double c_mean = 0.0;
  double beta = 0.0;
  int n_instances = 0;
  // beta recomputed against the exact-oracle optimum mean, when attached.
  std::optional<double> beta_exact;
  double mean_wall_ms = 0.0;
};

struct QScoreResult {
  // Largest n in the series with beta > beta_star; 0 when no point passes.
  int q_score = 0;
  double beta_star = 0.2;
  std::vector<BetaPoint> series;
  // True when the series ended while still above beta_star (resource-bound
  // scan); the result is then a lower bound and is reported as ">= n".
  bool censored = false;
};

// Extracts the Q-score from a series sorted by strictly increasing n.
// Throws std::invalid_argument on unsorted or duplicate sizes.
QScoreResult q_score_from_series(const std::vector<BetaPoint>& series,
                                 double beta_star = 0.2);

}  // namespace qsbench

#endif  // QSBENCH_FRAMEWORK_HPP_
