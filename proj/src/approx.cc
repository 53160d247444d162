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

#include "rrsched/approx.h"

#include <string>

#include "rrsched/errors.h"

namespace rrsched {

using Clock = std::chrono::steady_clock;

void CheckDelta(const Instance& inst, int delta) {
  if (delta < 0 || delta > inst.n()) {
    throw RangeError("delta " + std::to_string(delta) + " outside [0, " +
                     std::to_string(inst.n()) + "]");
  }
}

SolveResult LowerBound(const Instance& inst) {
  const auto start = Clock::now();
  SolveResult r;
  r.pair = {Spt(inst.p()), Spt(inst.q())};
  r.value = PairValue(r.pair, inst);
  r.stats.elapsed = Clock::now() - start;
  return r;
}

SolveResult UpperBound(const Instance& inst) {
  const auto start = Clock::now();
  SolveResult r;
  Permutation order = Spt(JointDurations(inst));
  r.pair = {order, order};
  r.value = PairValue(r.pair, inst);
  r.fixed = FixSet::All(inst.n());
  r.stats.elapsed = Clock::now() - start;
  return r;
}

SolveResult Greedy(const Instance& inst, int delta) {
  CheckDelta(inst, delta);
  const auto start = Clock::now();
  SolveResult r;

  EvalResult current = EvalFixed(inst, FixSet());
  ++r.stats.evaluations;
  r.trace.push_back(current.value);

  while (Intersection(current.pair) < delta) {
    EvalResult best;
    bool found = false;
    for (JobId j = 0; j < inst.n(); ++j) {
      if (current.fixed.contains(j)) continue;
      EvalResult candidate = EvalFixed(inst, current.fixed.With(j));
      ++r.stats.evaluations;
      if (!found || candidate.value < best.value) {
        best = std::move(candidate);
        found = true;
      }
    }
    // A fix set of size n forces identical schedules, so the loop ends
    // before the candidate pool runs dry.
    current = std::move(best);
    ++r.stats.nodes;
    r.trace.push_back(current.value);
  }

  r.value = current.value;
  r.pair = std::move(current.pair);
  r.fixed = std::move(current.fixed);
  r.stats.elapsed = Clock::now() - start;
  return r;
}

}  // namespace rrsched
