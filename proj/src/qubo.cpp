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

#include "qsbench/qubo.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qsbench/gbs.hpp"

namespace qsbench {

Qubo::Qubo(int n_vars) : n_(n_vars) {
  if (n_vars < 0) throw std::invalid_argument("Qubo: n_vars must be >= 0");
  linear_.assign(static_cast<std::size_t>(n_), 0.0);
}

void Qubo::add_linear(int i, double c) {
  if (i < 0 || i >= n_) throw std::out_of_range("Qubo: variable out of range");
  linear_[i] += c;
}

void Qubo::add_quadratic(int i, int j, double c) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) {
    throw std::out_of_range("Qubo: variable out of range");
  }
  if (i == j) {
    throw std::invalid_argument("Qubo: diagonal terms belong in linear()");
  }
  quad_.emplace_back(std::min(i, j), std::max(i, j), c);
  dirty_ = true;
}

void Qubo::finalize() const {
  if (!dirty_) return;
  std::sort(quad_.begin(), quad_.end(),
            [](const auto& a, const auto& b) {
              return std::make_pair(std::get<0>(a), std::get<1>(a)) <
                     std::make_pair(std::get<0>(b), std::get<1>(b));
            });
  std::vector<std::tuple<int, int, double>> folded;
  folded.reserve(quad_.size());
  for (const auto& term : quad_) {
    if (!folded.empty() &&
        std::get<0>(folded.back()) == std::get<0>(term) &&
        std::get<1>(folded.back()) == std::get<1>(term)) {
      std::get<2>(folded.back()) += std::get<2>(term);
    } else {
      folded.push_back(term);
    }
  }
  quad_ = std::move(folded);
  dirty_ = false;
}

const std::vector<std::tuple<int, int, double>>& Qubo::quadratic() const {
  finalize();
  return quad_;
}

double Qubo::energy(const std::vector<std::uint8_t>& assignment) const {
  if (static_cast<int>(assignment.size()) != n_) {
    throw std::invalid_argument("Qubo: assignment length mismatch");
  }
  double e = offset_;
  for (int i = 0; i < n_; ++i) {
    if (assignment[i]) e += linear_[i];
  }
  for (const auto& [i, j, c] : quadratic()) {
    if (assignment[i] && assignment[j]) e += c;
  }
  return e;
}

double IsingModel::energy(const std::vector<int>& spins) const {
  if (static_cast<int>(spins.size()) != n_spins) {
    throw std::invalid_argument("IsingModel: spin vector length mismatch");
  }
  for (int s : spins) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("IsingModel: spins must be +1 or -1");
    }
  }
  double e = constant;
  for (int i = 0; i < n_spins; ++i) e += h[i] * spins[i];
  for (const auto& [i, k, c] : j) e += c * spins[i] * spins[k];
  return e;
}

Qubo clique_qubo(const Graph& g, double penalty) {
  if (penalty <= 1.0) {
    throw std::invalid_argument(
        "clique_qubo: penalty must exceed 1 to keep minima clique-shaped");
  }
  const int n = g.vertex_count();
  Qubo q(n);
  for (int i = 0; i < n; ++i) q.add_linear(i, -1.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.has_edge(i, j)) q.add_quadratic(i, j, penalty);
    }
  }
  return q;
}

Qubo cut_qubo(const Graph& g) {
  const int n = g.vertex_count();
  Qubo q(n);
  for (const auto& [i, j] : g.edges()) {
    q.add_linear(i, -1.0);
    q.add_linear(j, -1.0);
    q.add_quadratic(i, j, 2.0);
  }
  return q;
}

double qubo_energy(const Qubo& q, const std::vector<std::uint8_t>& x) {
  return q.energy(x);
}

IsingModel to_ising(const Qubo& q) {
  // x_i = (1 - z_i)/2:
  //   c x_i        -> c/2 - (c/2) z_i
  //   c x_i x_j    -> c/4 - (c/4) z_i - (c/4) z_j + (c/4) z_i z_j
  IsingModel ising;
  ising.n_spins = q.n_vars();
  ising.constant = q.offset();
  ising.h.assign(static_cast<std::size_t>(q.n_vars()), 0.0);
  for (int i = 0; i < q.n_vars(); ++i) {
    const double c = q.linear()[i];
    ising.constant += c / 2.0;
    ising.h[i] -= c / 2.0;
  }
  ising.j.reserve(q.quadratic().size());
  for (const auto& [i, j, c] : q.quadratic()) {
    ising.constant += c / 4.0;
    ising.h[i] -= c / 4.0;
    ising.h[j] -= c / 4.0;
    ising.j.emplace_back(i, j, c / 4.0);
  }
  return ising;
}

VertexSet decode_clique(const Graph& g, const std::vector<std::uint8_t>& x,
                        bool repair) {
  if (static_cast<int>(x.size()) != g.vertex_count()) {
    throw std::invalid_argument("decode_clique: assignment length mismatch");
  }
  VertexSet selected;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (x[i]) selected.push_back(i);
  }
  if (is_clique(g, selected)) return selected;
  if (repair) return shrink_to_clique(g, selected);
  int best = selected.front();
  for (int v : selected) {
    if (g.degree(v) > g.degree(best)) best = v;
  }
  return {best};
}

void dump_qubo(const Qubo& q, std::ostream& out) {
  out << q.n_vars() << ' ' << q.offset() << '\n';
  for (int i = 0; i < q.n_vars(); ++i) {
    if (q.linear()[i] != 0.0) {
      out << i << ' ' << i << ' ' << q.linear()[i] << '\n';
    }
  }
  for (const auto& [i, j, c] : q.quadratic()) {
    if (c != 0.0) out << i << ' ' << j << ' ' << c << '\n';
  }
}

std::string qubo_to_string(const Qubo& q) {
  std::ostringstream out;
  dump_qubo(q, out);
  return out.str();
}

}  // namespace qsbench
