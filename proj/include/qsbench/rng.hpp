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

#ifndef QSBENCH_RNG_HPP_
#define QSBENCH_RNG_HPP_

#include <cstdint>

// Deterministic randomness utilities.
//
// Everything in the project that needs randomness goes through the SplitMix64
// generator (Steele, Lea & Flood, "Fast splittable pseudorandom number
// generators", OOPSLA 2014) or through the stateless finalizer below.  Both
// are pure integer functions, so any draw is reproducible across platforms
// from its (seed, counter) pair alone.

namespace qsbench {
namespace rng {

// SplitMix64 finalizer: a bijective 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Hashes a (seed, a, b) triple into one 64-bit value.  Used wherever a
// decision must be a pure function of a seed and two indices (graph edges,
// instance seeds), so that no generator state needs to be threaded around.
constexpr std::uint64_t hash3(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ (a + 0x9e3779b97f4a7c15ULL));
  h = mix64(h ^ (b + 0x2545f4914f6cdd1dULL));
  return h;
}

// Maps a 64-bit word to a double in [0, 1) with 53 random bits.
constexpr double to_unit_double(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Counter-based generator: state advances by a fixed odd constant and the
// output is mix64(state), i.e. output k is a pure function of (seed, k).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform double in [0, 1).
  double next_double() { return to_unit_double(next()); }

  // Uniform integer in [0, bound) via 128-bit multiply (Lemire's method,
  // without the rejection step; the bias is < bound / 2^64 and irrelevant at
  // the bounds used here).
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Domain tags keep unrelated consumers of hash3 out of each other's streams.
inline constexpr std::uint64_t kTagEdge = 0x45444745ULL;      // "EDGE"
inline constexpr std::uint64_t kTagInstance = 0x494e5354ULL;  // "INST"
inline constexpr std::uint64_t kTagSolver = 0x534f4c56ULL;    // "SOLV"

}  // namespace rng
}  // namespace qsbench

#endif  // QSBENCH_RNG_HPP_
