// Copyright 2026 The rrsched Authors.
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

// Exact solvers.
//
// Because the fixed-set value is monotone under adding jobs, an optimal
// schedule pair is obtained from the best fix set of size exactly delta.
// ExactEnum walks those sets depth first in lexicographic order and uses the
// value of a partial set as a lower bound on all its completions.
// ExactBounded exploits repeated (p, q) job types: sets with equal type
// counts have equal values, so only count vectors are enumerated.
// Oracle ignores all structure and scans every pair of permutations.

#ifndef RRSCHED_EXACT_H_
#define RRSCHED_EXACT_H_

#include <cstdint>

#include "rrsched/approx.h"
#include "rrsched/core.h"

namespace rrsched {

struct ExactOptions {
  // Refuse to run when the number of candidate sets exceeds this.
  std::int64_t subset_budget = 10'000'000;
  bool prune = true;
  // Top-level branches are spread over this many threads.
  int threads = 1;
};

using SearchStats = SolveStats;

// C(n, k), saturated at `cap`.
std::int64_t BinomialCapped(int n, int k, std::int64_t cap);

// Among optimal fix sets of size delta, returns the lexicographically
// smallest one regardless of `threads`.
// Throws RangeError for delta outside [0, n] and ResourceError when
// C(n, delta) exceeds the subset budget.
SolveResult ExactEnum(const Instance& inst, int delta,
                      const ExactOptions& options = {});

// Enumerates how many jobs of each (p, q) type enter the fix set; the lowest
// indexed jobs of a type represent it. Throws ResourceError when the number
// of count vectors exceeds the subset budget.
SolveResult ExactBounded(const Instance& inst, int delta,
                         const ExactOptions& options = {});

inline constexpr int kOracleMaxJobs = 7;

// Minimum over all ordered permutation pairs sharing at least delta
// positions; ties go to the lexicographically smallest (first, second).
// Throws ResourceError for n > kOracleMaxJobs.
SolveResult Oracle(const Instance& inst, int delta);

}  // namespace rrsched

#endif  // RRSCHED_EXACT_H_
