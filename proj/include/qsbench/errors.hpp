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

#ifndef QSBENCH_ERRORS_HPP_
#define QSBENCH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qsbench {

// Thrown when an instance is larger than a simulator can represent (QAOA
// qubit cap, GBS enumeration bounds).  The benchmark harness catches this and
// records the instance as a fallback instead of aborting the scan.
class UnsupportedSizeError : public std::runtime_error {
 public:
  explicit UnsupportedSizeError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qsbench

#endif  // QSBENCH_ERRORS_HPP_
