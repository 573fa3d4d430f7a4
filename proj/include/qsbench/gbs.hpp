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

#ifndef QSBENCH_GBS_HPP_
#define QSBENCH_GBS_HPP_

#include <cstdint>
#include <vector>

#include "qsbench/deadline.hpp"
#include "qsbench/graph.hpp"

// Gaussian-boson-sampling style clique search, simulated exactly.
//
// Encoding a graph's adjacency matrix into a GBS device makes the device
// sample vertex subsets S with probability proportional to
// c^|S| * Haf(A_S)^2, where A_S is the adjacency submatrix, Haf the hafnian
// (which counts perfect matchings for 0/1 matrices) and c a scale knob that
// plays the role of the squeezing strength.  Dense subgraphs have many
// perfect matchings, so samples land near cliques; local shrink/extend
// post-processing turns them into actual cliques.  Only even-size subsets
// have nonzero hafnians, so odd sizes never appear.

namespace qsbench {

struct GbsConfig {
  // Subset weight scale; weight of S is scale_c^|S| * Haf(A_S)^2.
  double scale_c = 1.0;
  // Samples drawn per instance.
  int samples = 500;
  // Grow shrunk samples to maximal cliques before scoring.
  bool use_extension = true;
  // Largest subset size enumerated; 0 means min(n rounded down to even, 16).
  int max_subset = 0;
  std::uint64_t seed = 1;
};

// Hafnian of a symmetric k x k matrix (flattened row-major), by recursive
// pairing of the lowest-index row with each partner.  k must be even and
// at most 16; the hafnian of the empty matrix is 1.  The diagonal is
// ignored.  Throws std::invalid_argument for odd k or an asymmetry beyond
// 1e-12.
double hafnian(const std::vector<double>& matrix, int k);

// Exact GBS subset distribution over even-size subsets |S| <= max_subset,
// each represented as a bitmask over the n <= 24 vertices.  Zero-weight
// subsets are dropped; probabilities are normalized.  Throws
// UnsupportedSizeError when n or max_subset exceed the enumeration bounds.
struct SubsetDistribution {
  int n = 0;
  std::vector<std::uint32_t> masks;  // ascending, even popcount
  std::vector<double> probabilities;
  double total_weight = 0.0;  // normalization constant before dividing

  VertexSet subset(std::size_t index) const;
};

SubsetDistribution subset_distribution(const Graph& g, const GbsConfig& cfg);

// Draws `count` subsets by inverse-CDF sampling; deterministic in seed.
std::vector<VertexSet> sample_subsets(const SubsetDistribution& dist,
                                      int count, std::uint64_t seed);

// Iteratively removes the vertex with the smallest degree inside s (ties to
// the lowest index) until s is a clique.  Cliques, including the empty set,
// are returned unchanged.
VertexSet shrink_to_clique(const Graph& g, VertexSet s);

// Greedily grows a clique: among vertices adjacent to every member, add the
// one with the highest graph degree (ties to the lowest index), until the
// clique is maximal.  Throws std::invalid_argument if the input is not a
// clique.
VertexSet extend_clique(const Graph& g, VertexSet clique);

// Full pipeline: distribution -> samples -> shrink (-> extend) -> best.
// Returns the largest nonempty clique seen over the processed samples; an
// all-vacuum sample set yields the empty set, which the harness treats as
// "no valid output".  Anytime: samples are processed incrementally and the
// deadline is polled between batches.
VertexSet gbs_solve_clique(const Graph& g, const GbsConfig& cfg,
                           const Deadline& deadline);

}  // namespace qsbench

#endif  // QSBENCH_GBS_HPP_
