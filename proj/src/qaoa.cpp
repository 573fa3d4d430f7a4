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

#include "qsbench/qaoa.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qsbench/errors.hpp"
#include "qsbench/rng.hpp"

namespace qsbench {

namespace {

// Diagonal cost table plus the state-vector workspace for one Ising model.
class QaoaEngine {
 public:
  QaoaEngine(const IsingModel& ising, int qubit_cap) : n_(ising.n_spins) {
    if (n_ < 1) {
      throw std::invalid_argument("qaoa: need at least one spin");
    }
    if (n_ > qubit_cap) {
      throw UnsupportedSizeError("qaoa: spin count exceeds the qubit cap");
    }
    build_energy_table(ising);
    amps_.resize(energies_.size());
  }

  int n() const { return n_; }
  const std::vector<double>& energies() const { return energies_; }

  // Runs the depth-p circuit from |+...+> and leaves the state in amps_.
  void run(const std::vector<double>& gammas,
           const std::vector<double>& betas) {
    if (gammas.empty() || gammas.size() != betas.size()) {
      throw std::invalid_argument(
          "qaoa: gammas and betas must have equal size p >= 1");
    }
    const std::size_t dim = amps_.size();
    const double init = 1.0 / std::sqrt(static_cast<double>(dim));
    std::fill(amps_.begin(), amps_.end(),
              std::complex<double>(init, 0.0));
    for (std::size_t layer = 0; layer < gammas.size(); ++layer) {
      apply_phase(gammas[layer]);
      apply_mixer(betas[layer]);
    }
  }

  double expectation(const std::vector<double>& gammas,
                     const std::vector<double>& betas) {
    run(gammas, betas);
    double value = 0.0;
    for (std::size_t s = 0; s < amps_.size(); ++s) {
      value += std::norm(amps_[s]) * energies_[s];
    }
    return value;
  }

  // Samples basis-state indices from the current state in amps_.
  std::vector<std::uint64_t> sample(int shots, std::uint64_t seed) const {
    std::vector<double> cdf(amps_.size());
    double acc = 0.0;
    for (std::size_t s = 0; s < amps_.size(); ++s) {
      acc += std::norm(amps_[s]);
      cdf[s] = acc;
    }
    cdf.back() = std::max(cdf.back(), 1.0);
    rng::SplitMix64 gen(seed);
    std::vector<std::uint64_t> draws(static_cast<std::size_t>(shots));
    for (auto& draw : draws) {
      const double u = gen.next_double();
      draw = static_cast<std::uint64_t>(
          std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    }
    return draws;
  }

 private:
  // Energies over all basis states, bit i of the index being x_i and spin
  // z_i = 1 - 2 x_i.  Filled along a Gray-code walk so each step costs one
  // local-field lookup instead of a full evaluation.
  void build_energy_table(const IsingModel& ising) {
    const std::size_t dim = std::size_t{1} << n_;
    energies_.assign(dim, 0.0);
    std::vector<std::vector<std::pair<int, double>>> adj(
        static_cast<std::size_t>(n_));
    for (const auto& [i, j, c] : ising.j) {
      adj[i].emplace_back(j, c);
      adj[j].emplace_back(i, c);
    }
    std::vector<int> z(static_cast<std::size_t>(n_), 1);
    double energy = ising.constant;
    for (int i = 0; i < n_; ++i) energy += ising.h[i];
    for (const auto& [i, j, c] : ising.j) {
      (void)i;
      (void)j;
      energy += c;
    }
    energies_[0] = energy;
    std::size_t gray = 0;
    for (std::size_t k = 1; k < dim; ++k) {
      const int b = std::countr_zero(k);
      const std::size_t next_gray = k ^ (k >> 1);
      double local = ising.h[b];
      for (const auto& [j, c] : adj[b]) local += c * z[j];
      energy -= 2.0 * z[b] * local;
      z[b] = -z[b];
      gray = next_gray;
      energies_[gray] = energy;
    }
  }

  void apply_phase(double gamma) {
    for (std::size_t s = 0; s < amps_.size(); ++s) {
      amps_[s] *= std::polar(1.0, -gamma * energies_[s]);
    }
  }

  void apply_mixer(double beta) {
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    const std::complex<double> minus_i_s(0.0, -s);
    for (int b = 0; b < n_; ++b) {
      const std::size_t stride = std::size_t{1} << b;
      for (std::size_t base = 0; base < amps_.size();
           base += stride << 1) {
        for (std::size_t k = base; k < base + stride; ++k) {
          const std::complex<double> a0 = amps_[k];
          const std::complex<double> a1 = amps_[k + stride];
          amps_[k] = c * a0 + minus_i_s * a1;
          amps_[k + stride] = c * a1 + minus_i_s * a0;
        }
      }
    }
  }

  int n_;
  std::vector<double> energies_;
  std::vector<std::complex<double>> amps_;
};

// Evaluation budget shared by the seeding and refinement stages.
class BudgetedObjective {
 public:
  BudgetedObjective(QaoaEngine& engine, int max_evals,
                    const Deadline& deadline)
      : engine_(engine), max_evals_(max_evals), deadline_(deadline) {}

  bool can_eval() const {
    return evals_ < max_evals_ && !deadline_.expired();
  }
  int evals() const { return evals_; }

  // point = (gammas..., betas...); lower is better.
  double operator()(const std::vector<double>& point) {
    ++evals_;
    const std::size_t p = point.size() / 2;
    const std::vector<double> gammas(point.begin(),
                                     point.begin() + static_cast<long>(p));
    const std::vector<double> betas(point.begin() + static_cast<long>(p),
                                    point.end());
    return engine_.expectation(gammas, betas);
  }

 private:
  QaoaEngine& engine_;
  int max_evals_;
  const Deadline& deadline_;
  int evals_ = 0;
};

struct BestPoint {
  std::vector<double> point;
  double value = std::numeric_limits<double>::infinity();

  void offer(const std::vector<double>& candidate, double v) {
    if (v < value) {
      value = v;
      point = candidate;
    }
  }
};

void grid_seed(BudgetedObjective& objective, int depth, std::uint64_t seed,
               BestPoint& best) {
  const double pi = std::numbers::pi;
  if (depth == 1) {
    // 12 x 8 grid over [0, pi) x [0, pi/2).
    for (int a = 0; a < 12 && objective.can_eval(); ++a) {
      for (int b = 0; b < 8 && objective.can_eval(); ++b) {
        const std::vector<double> point = {pi * a / 12.0,
                                           0.5 * pi * b / 8.0};
        best.offer(point, objective(point));
      }
    }
    return;
  }
  // For deeper circuits the grid is replaced by seeded uniform draws over
  // the same box per layer.
  rng::SplitMix64 gen(seed);
  for (int trial = 0; trial < 96 && objective.can_eval(); ++trial) {
    std::vector<double> point(static_cast<std::size_t>(2 * depth));
    for (int l = 0; l < depth; ++l) {
      point[l] = pi * gen.next_double();
      point[depth + l] = 0.5 * pi * gen.next_double();
    }
    best.offer(point, objective(point));
  }
}

std::vector<double> numeric_gradient(BudgetedObjective& objective,
                                     const std::vector<double>& point,
                                     bool& ok) {
  constexpr double kStep = 1e-4;
  std::vector<double> grad(point.size(), 0.0);
  for (std::size_t d = 0; d < point.size(); ++d) {
    if (!objective.can_eval()) {
      ok = false;
      return grad;
    }
    std::vector<double> forward = point;
    forward[d] += kStep;
    const double f_plus = objective(forward);
    if (!objective.can_eval()) {
      ok = false;
      return grad;
    }
    std::vector<double> backward = point;
    backward[d] -= kStep;
    const double f_minus = objective(backward);
    grad[d] = (f_plus - f_minus) / (2.0 * kStep);
  }
  ok = true;
  return grad;
}

// Quasi-Newton (BFGS) descent with numeric gradients and Armijo
// backtracking.
void refine_quasi_newton(BudgetedObjective& objective, BestPoint& best) {
  const std::size_t dim = best.point.size();
  std::vector<double> x = best.point;
  double fx = best.value;
  std::vector<std::vector<double>> h_inv(dim, std::vector<double>(dim, 0.0));
  for (std::size_t d = 0; d < dim; ++d) h_inv[d][d] = 1.0;
  bool ok = false;
  std::vector<double> grad = numeric_gradient(objective, x, ok);
  while (ok && objective.can_eval()) {
    double grad_norm = 0.0;
    for (double gd : grad) grad_norm = std::max(grad_norm, std::abs(gd));
    if (grad_norm < 1e-7) break;
    std::vector<double> direction(dim, 0.0);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        direction[r] -= h_inv[r][c] * grad[c];
      }
    }
    double slope = 0.0;
    for (std::size_t d = 0; d < dim; ++d) slope += direction[d] * grad[d];
    if (slope >= 0.0) {
      // Reset to steepest descent if the approximation lost definiteness.
      for (std::size_t r = 0; r < dim; ++r) {
        std::fill(h_inv[r].begin(), h_inv[r].end(), 0.0);
        h_inv[r][r] = 1.0;
        direction[r] = -grad[r];
      }
      slope = 0.0;
      for (std::size_t d = 0; d < dim; ++d) slope += direction[d] * grad[d];
    }
    double step = 1.0;
    std::vector<double> x_next = x;
    double f_next = fx;
    bool accepted = false;
    for (int halving = 0; halving < 10 && objective.can_eval(); ++halving) {
      for (std::size_t d = 0; d < dim; ++d) {
        x_next[d] = x[d] + step * direction[d];
      }
      f_next = objective(x_next);
      best.offer(x_next, f_next);
      if (f_next <= fx + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    bool grad_ok = false;
    const std::vector<double> grad_next =
        numeric_gradient(objective, x_next, grad_ok);
    if (!grad_ok) break;
    // BFGS update of the inverse Hessian.
    std::vector<double> s(dim), y(dim);
    double sy = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      s[d] = x_next[d] - x[d];
      y[d] = grad_next[d] - grad[d];
      sy += s[d] * y[d];
    }
    if (sy > 1e-12) {
      std::vector<double> hy(dim, 0.0);
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) hy[r] += h_inv[r][c] * y[c];
      }
      double yhy = 0.0;
      for (std::size_t d = 0; d < dim; ++d) yhy += y[d] * hy[d];
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
          h_inv[r][c] += ((sy + yhy) * s[r] * s[c]) / (sy * sy) -
                         (hy[r] * s[c] + s[r] * hy[c]) / sy;
        }
      }
    }
    x = x_next;
    fx = f_next;
    grad = grad_next;
  }
}

void refine_simplex(BudgetedObjective& objective, std::uint64_t seed,
                    BestPoint& best) {
  const std::size_t dim = best.point.size();
  const double initial_scale = 0.1;
  std::vector<std::vector<double>> simplex(dim + 1, best.point);
  std::vector<double> values(dim + 1, best.value);
  rng::SplitMix64 gen(seed);
  for (std::size_t v = 1; v <= dim && objective.can_eval(); ++v) {
    simplex[v][v - 1] += initial_scale * (0.5 + gen.next_double());
    values[v] = objective(simplex[v]);
    best.offer(simplex[v], values[v]);
  }
  while (objective.can_eval()) {
    std::vector<std::size_t> rank(dim + 1);
    for (std::size_t k = 0; k <= dim; ++k) rank[k] = k;
    std::sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
      return values[a] < values[b];
    });
    const std::size_t lo = rank[0], hi = rank[dim], next_hi = rank[dim - 1];
    if (std::abs(values[hi] - values[lo]) < 1e-10) break;
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t k = 0; k <= dim; ++k) {
      if (k == hi) continue;
      for (std::size_t d = 0; d < dim; ++d) centroid[d] += simplex[k][d];
    }
    for (std::size_t d = 0; d < dim; ++d) centroid[d] /= dim;
    auto blend = [&](double t) {
      std::vector<double> point(dim);
      for (std::size_t d = 0; d < dim; ++d) {
        point[d] = centroid[d] + t * (simplex[hi][d] - centroid[d]);
      }
      return point;
    };
    const std::vector<double> reflected = blend(-1.0);
    const double f_reflected = objective(reflected);
    best.offer(reflected, f_reflected);
    if (f_reflected < values[lo] && objective.can_eval()) {
      const std::vector<double> expanded = blend(-2.0);
      const double f_expanded = objective(expanded);
      best.offer(expanded, f_expanded);
      if (f_expanded < f_reflected) {
        simplex[hi] = expanded;
        values[hi] = f_expanded;
      } else {
        simplex[hi] = reflected;
        values[hi] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[next_hi]) {
      simplex[hi] = reflected;
      values[hi] = f_reflected;
      continue;
    }
    if (!objective.can_eval()) break;
    const std::vector<double> contracted = blend(0.5);
    const double f_contracted = objective(contracted);
    best.offer(contracted, f_contracted);
    if (f_contracted < values[hi]) {
      simplex[hi] = contracted;
      values[hi] = f_contracted;
      continue;
    }
    for (std::size_t k = 0; k <= dim && objective.can_eval(); ++k) {
      if (k == lo) continue;
      for (std::size_t d = 0; d < dim; ++d) {
        simplex[k][d] = 0.5 * (simplex[k][d] + simplex[lo][d]);
      }
      values[k] = objective(simplex[k]);
      best.offer(simplex[k], values[k]);
    }
  }
}

void refine_compass(BudgetedObjective& objective, BestPoint& best) {
  const std::size_t dim = best.point.size();
  double step = std::numbers::pi / 12.0;
  std::vector<double> x = best.point;
  double fx = best.value;
  while (step > 1e-5 && objective.can_eval()) {
    bool improved = false;
    for (std::size_t d = 0; d < dim && objective.can_eval(); ++d) {
      for (const double sign : {1.0, -1.0}) {
        if (!objective.can_eval()) break;
        std::vector<double> candidate = x;
        candidate[d] += sign * step;
        const double f_candidate = objective(candidate);
        best.offer(candidate, f_candidate);
        if (f_candidate < fx) {
          x = candidate;
          fx = f_candidate;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
}

}  // namespace

double qaoa_expectation(const IsingModel& ising,
                        const std::vector<double>& gammas,
                        const std::vector<double>& betas, int qubit_cap) {
  QaoaEngine engine(ising, qubit_cap);
  return engine.expectation(gammas, betas);
}

QaoaParameters qaoa_optimize(const IsingModel& ising, const QaoaConfig& cfg,
                             const Deadline& deadline) {
  if (cfg.depth < 1) {
    throw std::invalid_argument("qaoa_optimize: depth must be >= 1");
  }
  if (cfg.max_evals < 1) {
    throw std::invalid_argument("qaoa_optimize: max_evals must be >= 1");
  }
  QaoaEngine engine(ising, cfg.qubit_cap);
  BudgetedObjective objective(engine, cfg.max_evals, deadline);
  BestPoint best;
  best.point.assign(static_cast<std::size_t>(2 * cfg.depth), 0.0);
  if (objective.can_eval()) {
    best.value = objective(best.point);
  }
  grid_seed(objective, cfg.depth, rng::mix64(cfg.seed ^ 0x47524944ULL), best);
  if (objective.can_eval()) {
    switch (cfg.optimizer) {
      case QaoaOptimizer::kSequentialQuadratic:
        refine_quasi_newton(objective, best);
        break;
      case QaoaOptimizer::kSimplex:
        refine_simplex(objective, rng::mix64(cfg.seed ^ 0x53494d50ULL), best);
        break;
      case QaoaOptimizer::kGridThenLocal:
        refine_compass(objective, best);
        break;
    }
  }
  QaoaParameters result;
  const std::size_t p = static_cast<std::size_t>(cfg.depth);
  result.gammas.assign(best.point.begin(), best.point.begin() + p);
  result.betas.assign(best.point.begin() + p, best.point.end());
  result.expectation = best.value;
  result.evals_used = objective.evals();
  return result;
}

std::vector<std::uint64_t> qaoa_sample(const IsingModel& ising,
                                       const std::vector<double>& gammas,
                                       const std::vector<double>& betas,
                                       int shots, std::uint64_t seed,
                                       int qubit_cap) {
  if (shots < 1) throw std::invalid_argument("qaoa_sample: shots must be >= 1");
  QaoaEngine engine(ising, qubit_cap);
  engine.run(gammas, betas);
  return engine.sample(shots, seed);
}

VertexSet qaoa_solve_clique(const Graph& g, const QaoaConfig& cfg,
                            const Deadline& deadline, double penalty) {
  const int n = g.vertex_count();
  if (n > cfg.qubit_cap) {
    throw UnsupportedSizeError("qaoa_solve_clique: instance above qubit cap");
  }
  if (n == 0) return {};
  const Qubo qubo = clique_qubo(g, penalty);
  const IsingModel ising = to_ising(qubo);
  const QaoaParameters params = qaoa_optimize(ising, cfg, deadline);
  const std::vector<std::uint64_t> draws =
      qaoa_sample(ising, params.gammas, params.betas, cfg.shots,
                  rng::mix64(cfg.seed ^ 0x53484f54ULL), cfg.qubit_cap);
  VertexSet best;
  std::vector<std::uint8_t> x(static_cast<std::size_t>(n), 0);
  for (const std::uint64_t draw : draws) {
    for (int i = 0; i < n; ++i) x[i] = (draw >> i) & 1ULL;
    const VertexSet clique = decode_clique(g, x, /*repair=*/true);
    if (clique.size() > best.size()) best = clique;
  }
  return best;
}

}  // namespace qsbench
