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

#ifndef QSBENCH_SELFTEST_HPP_
#define QSBENCH_SELFTEST_HPP_

#include <iosfwd>

namespace qsbench {

// Fast invariant suite behind the `selftest` CLI subcommand: reference
// constants, hafnian oracle, small-size QUBO exactness, beta identities and
// round trips.  Prints one line per check to `log` and returns true when
// every check passes.  `perturb_constant` deliberately offsets the series
// constant so the failure path itself stays tested.
bool run_selftest(std::ostream& log, bool perturb_constant = false);

}  // namespace qsbench

#endif  // QSBENCH_SELFTEST_HPP_
