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

#ifndef QSBENCH_QUBO_HPP_
#define QSBENCH_QUBO_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include "qsbench/graph.hpp"

// Quadratic unconstrained binary optimization models (minimization
// convention) and their Ising twins.  Both metric instantiations reduce to a
// QUBO here, which is what the annealing-style solvers and the QAOA
// simulator consume.

namespace qsbench {

// Minimize offset + sum_i linear[i] x_i + sum_{i<j} q_ij x_i x_j over
// x in {0,1}^n.  Quadratic terms are stored sparsely with i < j, sorted,
// one entry per pair.
class Qubo {
 public:
  explicit Qubo(int n_vars);

  int n_vars() const { return n_; }
  double offset() const { return offset_; }
  void set_offset(double offset) { offset_ = offset; }

  const std::vector<double>& linear() const { return linear_; }
  void add_linear(int i, double c);

  // Accumulates c onto the (min(i,j), max(i,j)) coefficient; i != j.
  void add_quadratic(int i, int j, double c);

  // Quadratic terms as (i, j, c) with i < j, ascending lexicographic order.
  const std::vector<std::tuple<int, int, double>>& quadratic() const;

  double energy(const std::vector<std::uint8_t>& assignment) const;

 private:
  void finalize() const;

  int n_;
  double offset_ = 0.0;
  std::vector<double> linear_;
  // Accumulation buffer; folded into sorted unique form lazily.
  mutable std::vector<std::tuple<int, int, double>> quad_;
  mutable bool dirty_ = false;
};

// Ising form: minimize constant + sum_i h[i] z_i + sum_{i<j} J_ij z_i z_j
// over z in {-1, +1}^n.
struct IsingModel {
  int n_spins = 0;
  double constant = 0.0;
  std::vector<double> h;
  std::vector<std::tuple<int, int, double>> j;  // i < j, sorted

  double energy(const std::vector<int>& spins) const;
};

// Max-Clique as a QUBO: minimize -sum_i x_i + penalty * sum_{(i,j) not in E,
// i<j} x_i x_j.  Any penalty > 1 makes dropping a conflicting vertex always
// profitable, so minima are exactly the maximum cliques and the optimum
// value is -omega(G).  Default penalty is 2.
Qubo clique_qubo(const Graph& g, double penalty = 2.0);

// Max-Cut as a QUBO: minimize -sum_{(i,j) in E} (x_i + x_j - 2 x_i x_j).
// The optimum value is -maxcut(G).
Qubo cut_qubo(const Graph& g);

double qubo_energy(const Qubo& q, const std::vector<std::uint8_t>& x);

// Exact change of variables x_i = (1 - z_i) / 2.  Energies are preserved:
// qubo(x) == ising(z) for the corresponding assignments.
IsingModel to_ising(const Qubo& q);

// Reads a clique/cut solver's bit assignment back into a vertex set.  For
// Max-Clique: the selected set if it already is a clique; otherwise, with
// repair, the result of iteratively shrinking it to a clique; without
// repair, the best single selected vertex (highest graph degree, ties to the
// lowest index).  Never returns a non-clique; returns the empty set only for
// the all-zeros assignment.
VertexSet decode_clique(const Graph& g, const std::vector<std::uint8_t>& x,
                        bool repair = true);

// Text dump.  Header "n_vars offset", then "i i c" lines for linear terms
// and "i j c" (i < j) lines for quadratic terms, ascending.
void dump_qubo(const Qubo& q, std::ostream& out);
std::string qubo_to_string(const Qubo& q);

}  // namespace qsbench

#endif  // QSBENCH_QUBO_HPP_
