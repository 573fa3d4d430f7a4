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

#include "qsbench/framework.hpp"

#include <cmath>
#include <stdexcept>

namespace qsbench {

namespace {
constexpr double kSeriesCutoff = 1e-12;
}  // namespace

std::string problem_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kMaxClique:
      return "max-clique";
    case ProblemKind::kMaxCut:
      return "max-cut";
  }
  throw std::invalid_argument("problem_name: unknown problem kind");
}

ProblemKind problem_from_name(const std::string& name) {
  if (name == "max-clique") return ProblemKind::kMaxClique;
  if (name == "max-cut") return ProblemKind::kMaxCut;
  throw std::invalid_argument("unknown problem name: " + name);
}

double clique_random_size_survival(double p, int i) {
  if (p <= 0.0 || p >= 1.0) {
    throw std::invalid_argument("survival: p must be in (0, 1)");
  }
  if (i < 1) throw std::invalid_argument("survival: i must be >= 1");
  // Growing a clique vertex by vertex succeeds i-1 times with probabilities
  // p^0 * p^1 * ... * p^(i-1) of each new vertex being adjacent to the
  // current members, hence p^(i(i-1)/2).
  return std::pow(p, 0.5 * i * (i - 1));
}

double clique_random_size_pmf(double p, int i) {
  // P[X = i] = P[X >= i] - P[X >= i+1] = (1 - p^i) * p^(i(i-1)/2).
  return (1.0 - std::pow(p, i)) * clique_random_size_survival(p, i);
}

double clique_c_rand_partial(int terms) {
  if (terms < 0) throw std::invalid_argument("series: terms must be >= 0");
  double sum = 0.0;
  for (int i = 1; i <= terms; ++i) {
    sum += i * clique_random_size_pmf(0.5, i);
  }
  return sum;
}

double clique_c_rand() {
  double sum = 0.0;
  for (int i = 1;; ++i) {
    const double term = i * clique_random_size_pmf(0.5, i);
    if (term < kSeriesCutoff) break;
    sum += term;
  }
  return sum;
}

double clique_c_max(int n) {
  if (n < 3) throw std::invalid_argument("clique_c_max: requires n >= 3");
  const double log2n = std::log2(static_cast<double>(n));
  const double e = std::exp(1.0);
  return 2.0 * log2n - 2.0 * std::log2(log2n) + 2.0 * std::log2(e / 2.0) +
         1.0;
}

double cut_c_rand(int n) {
  if (n < 2) throw std::invalid_argument("cut_c_rand: requires n >= 2");
  // Each of the floor(n/2)*ceil(n/2) edges of a balanced bipartition exists
  // with probability 1/2; a uniform assignment cuts an expected half of the
  // present edges, which works out to this exact closed form.
  return static_cast<double>(n / 2) * static_cast<double>((n + 1) / 2) / 2.0;
}

double cut_c_max(int n) {
  if (n < 2) throw std::invalid_argument("cut_c_max: requires n >= 2");
  const double dn = static_cast<double>(n);
  return dn * dn / 8.0 + 0.178 * std::pow(dn, 1.5);
}

double QScoreProblem::c_rand(int n) const {
  switch (kind) {
    case ProblemKind::kMaxClique:
      if (n < 1) throw std::invalid_argument("c_rand: requires n >= 1");
      return clique_c_rand();
    case ProblemKind::kMaxCut:
      return cut_c_rand(n);
  }
  throw std::invalid_argument("c_rand: unknown problem kind");
}

double QScoreProblem::c_max(int n) const {
  switch (kind) {
    case ProblemKind::kMaxClique:
      return clique_c_max(n);
    case ProblemKind::kMaxCut:
      return cut_c_max(n);
  }
  throw std::invalid_argument("c_max: unknown problem kind");
}

double QScoreProblem::evaluate(const Graph& g, const VertexSet& s) const {
  switch (kind) {
    case ProblemKind::kMaxClique:
      if (!is_clique(g, s)) {
        throw std::invalid_argument("evaluate: solution is not a clique");
      }
      return static_cast<double>(s.size());
    case ProblemKind::kMaxCut:
      return static_cast<double>(cut_value(g, s));
  }
  throw std::invalid_argument("evaluate: unknown problem kind");
}

QScoreProblem max_clique_problem() { return {ProblemKind::kMaxClique}; }
QScoreProblem max_cut_problem() { return {ProblemKind::kMaxCut}; }

double beta(const QScoreProblem& problem, int n, double c_mean) {
  const double c_rand = problem.c_rand(n);
  const double c_max = problem.c_max(n);
  return (c_mean - c_rand) / (c_max - c_rand);
}

QScoreResult q_score_from_series(const std::vector<BetaPoint>& series,
                                 double beta_star) {
  for (std::size_t k = 1; k < series.size(); ++k) {
    if (series[k].n <= series[k - 1].n) {
      throw std::invalid_argument(
          "q_score_from_series: sizes must be strictly increasing");
    }
  }
  QScoreResult result;
  result.beta_star = beta_star;
  result.series = series;
  for (const BetaPoint& point : series) {
    if (point.beta > beta_star) result.q_score = point.n;
  }
  // A series whose last point still clears beta* was cut short by resource
  // limits, not by the metric crossing the threshold.
  result.censored = !series.empty() && series.back().beta > beta_star;
  return result;
}

}  // namespace qsbench
