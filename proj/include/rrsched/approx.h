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

// Bounds and the greedy fix-set heuristic.
//
// LowerBound drops the intersection requirement and sorts both stages
// independently. UpperBound forces identical schedules, which reduces to one
// sort by p + q and is within a factor 2 of the optimum. Greedy grows a fix
// set one job at a time, always adding the job whose inclusion yields the
// smallest fixed-set value, until the realized pair shares enough positions.

#ifndef RRSCHED_APPROX_H_
#define RRSCHED_APPROX_H_

#include <chrono>
#include <cstdint>
#include <vector>

#include "rrsched/core.h"
#include "rrsched/recfix.h"

namespace rrsched {

struct SolveStats {
  std::int64_t evaluations = 0;  // fixed-set evaluations performed
  std::int64_t nodes = 0;        // search nodes or greedy iterations
  std::int64_t nodes_pruned = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolveResult {
  Value value = 0;
  SchedulePair pair;
  FixSet fixed;
  SolveStats stats;
  // Greedy only: value after each iteration, starting with the empty set.
  std::vector<Value> trace;
};

SolveResult LowerBound(const Instance& inst);
SolveResult UpperBound(const Instance& inst);

// Throws RangeError unless 0 <= delta <= n.
SolveResult Greedy(const Instance& inst, int delta);

// Throws RangeError unless 0 <= delta <= inst.n().
void CheckDelta(const Instance& inst, int delta);

}  // namespace rrsched

#endif  // RRSCHED_APPROX_H_
