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

#include "qsbench/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qsbench/rng.hpp"

namespace qsbench {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), m_(0) {
  if (n < 0) throw std::invalid_argument("Graph: vertex count must be >= 0");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::invalid_argument("Graph: self loops not allowed");
  std::uint64_t& wi = bits_[static_cast<std::size_t>(i) * words_ + j / 64];
  if (wi & (1ULL << (j % 64))) return;
  wi |= 1ULL << (j % 64);
  bits_[static_cast<std::size_t>(j) * words_ + i / 64] |= 1ULL << (i % 64);
  ++m_;
}

bool Graph::has_edge(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  if (i == j) return false;
  return (bits_[static_cast<std::size_t>(i) * words_ + j / 64] >>
          (j % 64)) & 1ULL;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w) {
    d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
  }
  return d;
}

std::span<const std::uint64_t> Graph::row(int v) const {
  check_vertex(v);
  return {bits_.data() + static_cast<std::size_t>(v) * words_,
          static_cast<std::size_t>(words_)};
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(static_cast<std::size_t>(m_));
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (has_edge(i, j)) result.emplace_back(i, j);
    }
  }
  return result;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && bits_ == other.bits_;
}

Graph generate_er(const ErdosRenyiSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("generate_er: n must be >= 0");
  if (spec.p < 0.0 || spec.p > 1.0) {
    throw std::invalid_argument("generate_er: p must be in [0, 1]");
  }
  Graph g(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    for (int j = i + 1; j < spec.n; ++j) {
      const std::uint64_t h =
          rng::hash3(spec.seed ^ rng::kTagEdge, static_cast<std::uint64_t>(i),
                     static_cast<std::uint64_t>(j));
      if (rng::to_unit_double(h) < spec.p) g.add_edge(i, j);
    }
  }
  return g;
}

void validate_vertex_set(const Graph& g, const VertexSet& s) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 0 || s[k] >= g.vertex_count()) {
      throw std::invalid_argument("vertex set: index out of range");
    }
    if (k > 0 && s[k] <= s[k - 1]) {
      throw std::invalid_argument(
          "vertex set: must be sorted ascending without duplicates");
    }
  }
}

bool is_clique(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (!g.has_edge(s[a], s[b])) return false;
    }
  }
  return true;
}

std::int64_t cut_value(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  std::vector<char> in_s(g.vertex_count(), 0);
  for (int v : s) in_s[v] = 1;
  std::int64_t crossing = 0;
  for (int v : s) {
    auto words = g.row(v);
    for (int w = 0; w < g.words_per_row(); ++w) {
      std::uint64_t bitsword = words[w];
      while (bitsword) {
        const int u = w * 64 + std::countr_zero(bitsword);
        bitsword &= bitsword - 1;
        if (!in_s[u]) ++crossing;
      }
    }
  }
  return crossing;
}

std::vector<int> subgraph_degrees(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  std::vector<int> degrees(s.size(), 0);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (g.has_edge(s[a], s[b])) {
        ++degrees[a];
        ++degrees[b];
      }
    }
  }
  return degrees;
}

void dump_graph(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
}

Graph load_graph(std::istream& in) {
  std::int64_t n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw std::invalid_argument("load_graph: malformed header");
  }
  Graph g(static_cast<int>(n));
  for (std::int64_t e = 0; e < m; ++e) {
    int i, j;
    if (!(in >> i >> j)) {
      throw std::invalid_argument("load_graph: truncated edge list");
    }
    g.add_edge(i, j);
  }
  if (g.edge_count() != m) {
    throw std::invalid_argument("load_graph: duplicate edges in input");
  }
  return g;
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  dump_graph(g, out);
  return out.str();
}

Graph graph_from_string(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

}  // namespace qsbench
