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
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qsbench/framework.hpp"

namespace {

// Frozen oracle values, computed independently of the implementation:
// partial sums of sum_i i * (1 - 2^-i) * 2^(-i(i-1)/2) by hand.
//   i=1: 1 * (1/2)   * 1     = 0.5
//   i=2: 2 * (3/4)   * 1/2   = 0.75      -> 1.25
//   i=3: 3 * (7/8)   * 1/8   = 0.328125  -> 1.578125
//   i=4: 4 * (15/16) * 1/64  = 0.05859375 -> 1.63671875
constexpr double kPartial2 = 1.25;
constexpr double kPartial4 = 1.63671875;
constexpr double kSeriesLimit = 1.6416325;  // published to 8 digits

}  // namespace

TEST_CASE("problem names round trip") {
  using qsbench::ProblemKind;
  CHECK(qsbench::problem_name(ProblemKind::kMaxClique) == "max-clique");
  CHECK(qsbench::problem_name(ProblemKind::kMaxCut) == "max-cut");
  CHECK(qsbench::problem_from_name("max-clique") == ProblemKind::kMaxClique);
  CHECK(qsbench::problem_from_name("max-cut") == ProblemKind::kMaxCut);
  CHECK_THROWS_AS(qsbench::problem_from_name("tsp"), std::invalid_argument);
}

TEST_CASE("random growth size law at p = 1/2") {
  // Survival: P[X >= i] = p^(i(i-1)/2).
  CHECK(qsbench::clique_random_size_survival(0.5, 1) == doctest::Approx(1.0));
  CHECK(qsbench::clique_random_size_survival(0.5, 2) == doctest::Approx(0.5));
  CHECK(qsbench::clique_random_size_survival(0.5, 3) ==
        doctest::Approx(0.125));
  CHECK(qsbench::clique_random_size_survival(0.5, 4) ==
        doctest::Approx(1.0 / 64));
  // pmf: P[X = i] = (1 - p^i) p^(i(i-1)/2).
  CHECK(qsbench::clique_random_size_pmf(0.5, 1) == doctest::Approx(0.5));
  CHECK(qsbench::clique_random_size_pmf(0.5, 2) == doctest::Approx(0.375));
  CHECK(qsbench::clique_random_size_pmf(0.5, 3) ==
        doctest::Approx(7.0 / 64));
  // pmf sums to one.
  double total = 0.0;
  for (int i = 1; i <= 64; ++i) {
    total += qsbench::clique_random_size_pmf(0.5, i);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  // pmf(i) = survival(i) - survival(i+1).
  for (int i = 1; i <= 10; ++i) {
    CHECK(qsbench::clique_random_size_pmf(0.5, i) ==
          doctest::Approx(qsbench::clique_random_size_survival(0.5, i) -
                          qsbench::clique_random_size_survival(0.5, i + 1))
              .epsilon(1e-13));
  }
  CHECK_THROWS_AS(qsbench::clique_random_size_survival(0.0, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(qsbench::clique_random_size_survival(1.0, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(qsbench::clique_random_size_pmf(0.5, 0),
                  std::invalid_argument);
}

TEST_CASE("clique random baseline series") {
  CHECK(qsbench::clique_c_rand_partial(1) == doctest::Approx(0.5));
  CHECK(qsbench::clique_c_rand_partial(2) == doctest::Approx(kPartial2));
  CHECK(qsbench::clique_c_rand_partial(4) == doctest::Approx(kPartial4));
  CHECK(std::abs(qsbench::clique_c_rand() - kSeriesLimit) < 1e-7);
  // The series converges: adding more terms cannot move it by 1e-12.
  CHECK(std::abs(qsbench::clique_c_rand() -
                 qsbench::clique_c_rand_partial(60)) < 1e-12);
  // Monotone increasing partial sums from the empty sum up.
  CHECK(qsbench::clique_c_rand_partial(0) == doctest::Approx(0.0));
  CHECK(qsbench::clique_c_rand_partial(3) > qsbench::clique_c_rand_partial(2));
  CHECK_THROWS_AS(qsbench::clique_c_rand_partial(-1), std::invalid_argument);
}

TEST_CASE("clique asymptotic optimum") {
  // 2 log2 n - 2 log2 log2 n + 2 log2(e/2) + 1 evaluated independently.
  CHECK(qsbench::clique_c_max(16) == doctest::Approx(5.885390).epsilon(1e-5));
  CHECK(qsbench::clique_c_max(1024) ==
        doctest::Approx(15.2415339).epsilon(1e-6));
  // Spot formula at n = 4: 4 - 2 + 2 log2(e/2) + 1 = 3 + 2(log2 e - 1).
  const double expected4 = 3.0 + 2.0 * (std::log2(std::exp(1.0)) - 1.0);
  CHECK(qsbench::clique_c_max(4) == doctest::Approx(expected4));
  // Monotone increasing for n >= 3.
  for (int n = 3; n < 200; ++n) {
    CHECK(qsbench::clique_c_max(n + 1) > qsbench::clique_c_max(n));
  }
  CHECK_THROWS_AS(qsbench::clique_c_max(2), std::invalid_argument);
}

TEST_CASE("cut references") {
  // floor(n/2) * ceil(n/2) / 2.
  CHECK(qsbench::cut_c_rand(2) == doctest::Approx(0.5));
  CHECK(qsbench::cut_c_rand(5) == doctest::Approx(3.0));
  CHECK(qsbench::cut_c_rand(100) == doctest::Approx(1250.0));
  CHECK(qsbench::cut_c_rand(101) == doctest::Approx(50 * 51 / 2.0));
  CHECK_THROWS_AS(qsbench::cut_c_rand(1), std::invalid_argument);
  // n^2/8 + 0.178 n^1.5.
  CHECK(qsbench::cut_c_max(100) == doctest::Approx(1428.0).epsilon(1e-9));
  CHECK(qsbench::cut_c_max(8) ==
        doctest::Approx(8.0 + 0.178 * std::pow(8.0, 1.5)));
}

TEST_CASE("beta is an affine map between the references") {
  const qsbench::QScoreProblem clique = qsbench::max_clique_problem();
  const int n = 16;
  CHECK(qsbench::beta(clique, n, clique.c_rand(n)) == doctest::Approx(0.0));
  CHECK(qsbench::beta(clique, n, clique.c_max(n)) == doctest::Approx(1.0));
  // Spot check: mean clique size 3.1219 at n = 3 maps to beta ~ 0.71.
  CHECK(qsbench::beta(clique, 3, 3.1219) ==
        doctest::Approx(0.71).epsilon(0.005 / 0.71));

  const qsbench::QScoreProblem cut = qsbench::max_cut_problem();
  CHECK(qsbench::beta(cut, 100, cut.c_rand(100)) == doctest::Approx(0.0));
  CHECK(qsbench::beta(cut, 100, cut.c_max(100)) == doctest::Approx(1.0));
  // Midpoint maps to one half.
  const double mid = (cut.c_rand(100) + cut.c_max(100)) / 2;
  CHECK(qsbench::beta(cut, 100, mid) == doctest::Approx(0.5));
}

TEST_CASE("problem evaluation") {
  qsbench::Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  const qsbench::QScoreProblem clique = qsbench::max_clique_problem();
  CHECK(clique.evaluate(g, {0, 1, 2}) == doctest::Approx(3.0));
  CHECK(clique.evaluate(g, {}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(clique.evaluate(g, {0, 3}), std::invalid_argument);

  const qsbench::QScoreProblem cut = qsbench::max_cut_problem();
  CHECK(cut.evaluate(g, {2}) == doctest::Approx(3.0));
  CHECK(cut.evaluate(g, {0, 3}) == doctest::Approx(3.0));
}

TEST_CASE("q score extraction") {
  using qsbench::BetaPoint;
  std::vector<BetaPoint> series;
  series.push_back({5, 0.0, 1.0, 10, std::nullopt, 0.0});
  series.push_back({10, 0.0, 0.5, 10, std::nullopt, 0.0});
  series.push_back({15, 0.0, 0.1, 10, std::nullopt, 0.0});
  const qsbench::QScoreResult r = qsbench::q_score_from_series(series, 0.2);
  CHECK(r.q_score == 10);
  CHECK_FALSE(r.censored);
  CHECK(r.beta_star == doctest::Approx(0.2));
  CHECK(r.series.size() == 3);

  // Strictly-above semantics: beta == beta* does not pass.
  std::vector<BetaPoint> edge;
  edge.push_back({5, 0.0, 0.2, 10, std::nullopt, 0.0});
  CHECK(qsbench::q_score_from_series(edge, 0.2).q_score == 0);

  // A series that ends above the threshold is censored.
  std::vector<BetaPoint> open_ended;
  open_ended.push_back({5, 0.0, 0.9, 10, std::nullopt, 0.0});
  open_ended.push_back({10, 0.0, 0.6, 10, std::nullopt, 0.0});
  const qsbench::QScoreResult c = qsbench::q_score_from_series(open_ended, 0.2);
  CHECK(c.q_score == 10);
  CHECK(c.censored);

  // Dips are tolerated: the largest passing n wins even after a dip.
  std::vector<BetaPoint> dip;
  dip.push_back({5, 0.0, 0.1, 10, std::nullopt, 0.0});
  dip.push_back({10, 0.0, 0.5, 10, std::nullopt, 0.0});
  dip.push_back({15, 0.0, 0.05, 10, std::nullopt, 0.0});
  CHECK(qsbench::q_score_from_series(dip, 0.2).q_score == 10);

  // No point passes.
  std::vector<BetaPoint> fail;
  fail.push_back({5, 0.0, 0.05, 10, std::nullopt, 0.0});
  CHECK(qsbench::q_score_from_series(fail, 0.2).q_score == 0);

  // Unsorted and duplicate sizes are rejected; so is an empty series.
  std::vector<BetaPoint> bad;
  bad.push_back({10, 0.0, 0.5, 10, std::nullopt, 0.0});
  bad.push_back({5, 0.0, 0.9, 10, std::nullopt, 0.0});
  CHECK_THROWS_AS(qsbench::q_score_from_series(bad, 0.2),
                  std::invalid_argument);
  std::vector<BetaPoint> dup;
  dup.push_back({5, 0.0, 0.5, 10, std::nullopt, 0.0});
  dup.push_back({5, 0.0, 0.9, 10, std::nullopt, 0.0});
  CHECK_THROWS_AS(qsbench::q_score_from_series(dup, 0.2),
                  std::invalid_argument);
  // The empty series scores zero and is not censored.
  const qsbench::QScoreResult none = qsbench::q_score_from_series({}, 0.2);
  CHECK(none.q_score == 0);
  CHECK_FALSE(none.censored);
}
