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

#ifndef QSBENCH_DEADLINE_HPP_
#define QSBENCH_DEADLINE_HPP_

#include <chrono>
#include <limits>

namespace qsbench {

// Wall-clock budget handed to solvers.  Solvers poll expired() at a coarse
// granularity (once per sweep / batch / node block) and return their best
// incumbent when it fires; they never overshoot by more than one work
// quantum.
class Deadline {
 public:
  // Budget in milliseconds, counted from construction.  Must be > 0.
  explicit Deadline(double budget_ms)
      : start_(std::chrono::steady_clock::now()), budget_ms_(budget_ms) {}

  // A deadline that never fires.
  static Deadline unlimited() {
    return Deadline(std::numeric_limits<double>::infinity());
  }

  bool is_unlimited() const {
    return budget_ms_ == std::numeric_limits<double>::infinity();
  }

  double budget_ms() const { return budget_ms_; }

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

  double remaining_ms() const { return budget_ms_ - elapsed_ms(); }

  bool expired() const {
    if (is_unlimited()) return false;
    return elapsed_ms() >= budget_ms_;
  }

 private:
  std::chrono::steady_clock::time_point start_;
  double budget_ms_;
};

}  // namespace qsbench

#endif  // QSBENCH_DEADLINE_HPP_
