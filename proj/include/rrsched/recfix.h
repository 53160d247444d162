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

// Optimal schedule pairs when a given set of jobs must keep its position.
//
// For a fix set M, the best pair of schedules in which every job of M sits
// in the same slot in both stages is found by sorting: free jobs are ordered
// by p in the first stage and independently by q in the second, their
// rank-wise sums d_r compete for slots with the joint durations p_j + q_j of
// the fixed jobs, and slots are handed out in non-decreasing order of these
// merged values.

#ifndef RRSCHED_RECFIX_H_
#define RRSCHED_RECFIX_H_

#include <initializer_list>
#include <span>
#include <vector>

#include "rrsched/core.h"

namespace rrsched {

// Sorted, duplicate-free set of 0-based job indices.
class FixSet {
 public:
  FixSet() = default;
  // Sorts the input; throws DimensionError on duplicates and RangeError on
  // negative indices.
  explicit FixSet(std::vector<JobId> jobs);
  static FixSet FromOneBased(std::initializer_list<int> jobs);
  static FixSet All(int n);

  int size() const { return static_cast<int>(jobs_.size()); }
  bool empty() const { return jobs_.empty(); }
  bool contains(JobId j) const;
  std::span<const JobId> jobs() const { return jobs_; }
  std::vector<int> OneBased() const;
  // Copy with `j` added; `j` must not be a member.
  FixSet With(JobId j) const;

  bool operator==(const FixSet&) const = default;
  auto operator<=>(const FixSet&) const = default;

 private:
  std::vector<JobId> jobs_;
};

struct EvalResult {
  Value value = 0;
  SchedulePair pair;
  FixSet fixed;
  // Merged slot values in schedule order; value = sum of (n - i) * merged[i].
  std::vector<Value> merged;
};

// Best pair under the fixing constraint, with an explicit schedule.
// Throws RangeError if M names a job outside the instance.
EvalResult EvalFixed(const Instance& inst, const FixSet& fixed);

// Value-only variant of EvalFixed.
Value FValue(const Instance& inst, const FixSet& fixed);

}  // namespace rrsched

#endif  // RRSCHED_RECFIX_H_
