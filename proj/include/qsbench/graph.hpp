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

#ifndef QSBENCH_GRAPH_HPP_
#define QSBENCH_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qsbench {

// A set of vertex indices, kept sorted ascending with no duplicates.
using VertexSet = std::vector<int>;

// Simple undirected graph on dense vertices 0..n-1, no self loops, no
// parallel edges.  Adjacency is stored as one bitset row per vertex (64-bit
// words), which is what the clique solvers want: neighbourhood intersection
// is a word-wise AND.  Instances are built once and treated as immutable
// afterwards.
class Graph {
 public:
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }
  int words_per_row() const { return words_; }

  // Valid only during construction; i != j, both in range.  Adding an edge
  // twice is a no-op.
  void add_edge(int i, int j);

  bool has_edge(int i, int j) const;
  int degree(int v) const;

  // Bitset view of v's neighbourhood (words_per_row() words).
  std::span<const std::uint64_t> row(int v) const;

  // All edges as (i, j) pairs with i < j, ascending lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_;
  int words_;
  std::int64_t m_;
  std::vector<std::uint64_t> bits_;
};

// Parameters of an Erdos-Renyi draw G(n, p).
struct ErdosRenyiSpec {
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
};

// Samples G(n, p): every unordered pair (i, j) is an edge independently with
// probability p.  The decision for a pair is a pure function of
// (seed, i, j), so the same spec always yields the same graph and two graphs
// of different sizes agree on shared pairs only by coincidence of the hash.
Graph generate_er(const ErdosRenyiSpec& spec);

// True iff every pair of distinct vertices in s is an edge.  The empty set
// and singletons are cliques.  s must be sorted, duplicate-free and in range.
bool is_clique(const Graph& g, const VertexSet& s);

// Number of edges with exactly one endpoint in s (s is one side of the cut).
std::int64_t cut_value(const Graph& g, const VertexSet& s);

// Degree of each vertex of s counted within the subgraph induced by s,
// in the same order as s.
std::vector<int> subgraph_degrees(const Graph& g, const VertexSet& s);

// Throws std::invalid_argument unless s is sorted ascending, duplicate-free
// and within [0, n).
void validate_vertex_set(const Graph& g, const VertexSet& s);

// Text round trip.  Format: "n m" header line, then one "i j" line per edge
// with i < j, ascending.  load(dump(g)) reproduces g bit-exactly.
void dump_graph(const Graph& g, std::ostream& out);
Graph load_graph(std::istream& in);
std::string graph_to_string(const Graph& g);
Graph graph_from_string(const std::string& text);

}  // namespace qsbench

#endif  // QSBENCH_GRAPH_HPP_
