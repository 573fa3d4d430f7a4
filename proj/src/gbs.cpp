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

#include "qsbench/gbs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "qsbench/errors.hpp"
#include "qsbench/rng.hpp"

namespace qsbench {

namespace {

constexpr int kMaxHafnianDim = 16;
constexpr int kMaxGbsVertices = 24;
constexpr double kSymmetryTolerance = 1e-12;

// Haf over the active indices: fix the lowest, pair it with every other
// active index, recurse on the rest.  (k-1)!! products in the worst case.
double hafnian_recursive(const std::vector<double>& m, int k,
                         std::vector<int>& active) {
  if (active.empty()) return 1.0;
  const int first = active.front();
  double sum = 0.0;
  for (std::size_t p = 1; p < active.size(); ++p) {
    const int partner = active[p];
    const double weight = m[static_cast<std::size_t>(first) * k + partner];
    if (weight == 0.0) continue;
    std::vector<int> rest;
    rest.reserve(active.size() - 2);
    for (std::size_t q = 1; q < active.size(); ++q) {
      if (q != p) rest.push_back(active[q]);
    }
    sum += weight * hafnian_recursive(m, k, rest);
  }
  return sum;
}

}  // namespace

double hafnian(const std::vector<double>& matrix, int k) {
  if (k < 0 || k % 2 != 0) {
    throw std::invalid_argument("hafnian: dimension must be even");
  }
  if (k > kMaxHafnianDim) {
    throw std::invalid_argument("hafnian: dimension exceeds 16");
  }
  if (static_cast<int>(matrix.size()) != k * k) {
    throw std::invalid_argument("hafnian: matrix size mismatch");
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (std::abs(matrix[static_cast<std::size_t>(i) * k + j] -
                   matrix[static_cast<std::size_t>(j) * k + i]) >
          kSymmetryTolerance) {
        throw std::invalid_argument("hafnian: matrix must be symmetric");
      }
    }
  }
  std::vector<int> active(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) active[i] = i;
  return hafnian_recursive(matrix, k, active);
}

VertexSet SubsetDistribution::subset(std::size_t index) const {
  VertexSet s;
  std::uint32_t mask = masks.at(index);
  while (mask) {
    s.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

SubsetDistribution subset_distribution(const Graph& g, const GbsConfig& cfg) {
  const int n = g.vertex_count();
  if (n > kMaxGbsVertices) {
    throw UnsupportedSizeError("subset_distribution: n exceeds 24");
  }
  int max_subset = cfg.max_subset;
  if (max_subset == 0) max_subset = std::min(n - (n % 2), kMaxHafnianDim);
  if (max_subset % 2 != 0 || max_subset < 0 || max_subset > n ||
      max_subset > kMaxHafnianDim) {
    throw std::invalid_argument(
        "subset_distribution: max_subset must be even, <= n and <= 16");
  }
  if (cfg.scale_c <= 0.0) {
    throw std::invalid_argument("subset_distribution: scale_c must be > 0");
  }

  SubsetDistribution dist;
  dist.n = n;
  std::vector<double> weights;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size % 2 != 0 || size > max_subset) continue;
    // Hafnian of the adjacency submatrix induced by the mask.
    std::vector<int> members;
    members.reserve(static_cast<std::size_t>(size));
    for (std::uint32_t rest = mask; rest;) {
      members.push_back(std::countr_zero(rest));
      rest &= rest - 1;
    }
    std::vector<double> sub(static_cast<std::size_t>(size) * size, 0.0);
    for (int a = 0; a < size; ++a) {
      for (int b = a + 1; b < size; ++b) {
        if (g.has_edge(members[a], members[b])) {
          sub[static_cast<std::size_t>(a) * size + b] = 1.0;
          sub[static_cast<std::size_t>(b) * size + a] = 1.0;
        }
      }
    }
    const double haf = hafnian(sub, size);
    if (haf == 0.0) continue;
    const double weight = std::pow(cfg.scale_c, size) * haf * haf;
    dist.masks.push_back(mask);
    weights.push_back(weight);
    dist.total_weight += weight;
  }
  dist.probabilities.resize(weights.size());
  for (std::size_t k = 0; k < weights.size(); ++k) {
    dist.probabilities[k] = weights[k] / dist.total_weight;
  }
  return dist;
}

std::vector<VertexSet> sample_subsets(const SubsetDistribution& dist,
                                      int count, std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("sample_subsets: count < 0");
  if (dist.masks.empty()) {
    throw std::invalid_argument("sample_subsets: empty distribution");
  }
  std::vector<double> cdf(dist.probabilities.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < dist.probabilities.size(); ++k) {
    acc += dist.probabilities[k];
    cdf[k] = acc;
  }
  cdf.back() = 1.0;
  rng::SplitMix64 gen(seed);
  std::vector<VertexSet> samples;
  samples.reserve(static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) {
    const double u = gen.next_double();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t index = static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(it - cdf.begin(),
                                 static_cast<std::ptrdiff_t>(cdf.size()) - 1));
    samples.push_back(dist.subset(index));
  }
  return samples;
}

VertexSet shrink_to_clique(const Graph& g, VertexSet s) {
  validate_vertex_set(g, s);
  while (!is_clique(g, s)) {
    const std::vector<int> degrees = subgraph_degrees(g, s);
    std::size_t drop = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
      if (degrees[k] < degrees[drop]) drop = k;
    }
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(drop));
  }
  return s;
}

VertexSet extend_clique(const Graph& g, VertexSet clique) {
  if (!is_clique(g, clique)) {
    throw std::invalid_argument("extend_clique: input must be a clique");
  }
  while (true) {
    int best = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (std::binary_search(clique.begin(), clique.end(), v)) continue;
      bool adjacent_to_all = true;
      for (int u : clique) {
        if (!g.has_edge(u, v)) {
          adjacent_to_all = false;
          break;
        }
      }
      if (!adjacent_to_all) continue;
      if (best < 0 || g.degree(v) > g.degree(best)) best = v;
    }
    if (best < 0) return clique;
    clique.insert(std::upper_bound(clique.begin(), clique.end(), best), best);
  }
}

VertexSet gbs_solve_clique(const Graph& g, const GbsConfig& cfg,
                           const Deadline& deadline) {
  if (cfg.samples <= 0) {
    throw std::invalid_argument("gbs_solve_clique: samples must be > 0");
  }
  const SubsetDistribution dist = subset_distribution(g, cfg);
  VertexSet best;
  if (deadline.expired()) return best;
  constexpr int kBatch = 32;
  rng::SplitMix64 gen(cfg.seed);
  int drawn = 0;
  while (drawn < cfg.samples) {
    const int batch = std::min(kBatch, cfg.samples - drawn);
    const std::vector<VertexSet> samples =
        sample_subsets(dist, batch, gen.next());
    drawn += batch;
    for (const VertexSet& sample : samples) {
      VertexSet clique = shrink_to_clique(g, sample);
      // A vacuum draw carries no photons and therefore no information;
      // extending it would degenerate into a purely classical search.
      if (clique.empty()) continue;
      if (cfg.use_extension) clique = extend_clique(g, clique);
      if (clique.size() > best.size()) best = clique;
    }
    if (deadline.expired()) break;
  }
  return best;
}

}  // namespace qsbench
