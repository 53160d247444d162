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

// Domain types and basic operations for recoverable robust single-machine
// scheduling with the total-completion-time objective.
//
// Jobs and positions are stored 0-based. Position i (0-based) of an n-job
// schedule carries the weight n - i, i.e. the number of jobs whose
// completion time includes the job placed there. All arithmetic is exact
// 64-bit integer arithmetic.

#ifndef RRSCHED_CORE_H_
#define RRSCHED_CORE_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rrsched {

using Duration = std::int64_t;
using Value = std::int64_t;
using JobId = int;

inline constexpr Duration kMaxDuration = 1'000'000'000;

// Throws RangeError unless 0 <= d <= kMaxDuration.
void CheckDuration(Duration d);

// Jobs with first-stage durations p and worst-case second-stage durations q.
class Instance {
 public:
  Instance(std::vector<Duration> p, std::vector<Duration> q);

  int n() const { return static_cast<int>(p_.size()); }
  std::span<const Duration> p() const { return p_; }
  std::span<const Duration> q() const { return q_; }
  Duration p(JobId j) const { return p_[j]; }
  Duration q(JobId j) const { return q_[j]; }

  bool operator==(const Instance&) const = default;

 private:
  std::vector<Duration> p_;
  std::vector<Duration> q_;
};

// Second-stage durations known only up to the box [q_hat - q_bar, q_hat + q_bar].
struct IntervalInstance {
  std::vector<Duration> p;
  std::vector<Duration> q_hat;
  std::vector<Duration> q_bar;
};

// A schedule: slot i holds the job processed in position i.
class Permutation {
 public:
  Permutation() = default;
  // Throws DimensionError unless `slots` is a bijection on {0, ..., n-1}.
  explicit Permutation(std::vector<JobId> slots);

  static Permutation Identity(int n);
  // Builds from 1-based job labels as they are written in tables and files.
  static Permutation FromOneBased(std::span<const int> jobs);
  static Permutation FromOneBased(std::initializer_list<int> jobs);

  int size() const { return static_cast<int>(slots_.size()); }
  JobId operator[](int position) const { return slots_[position]; }
  std::span<const JobId> slots() const { return slots_; }
  std::vector<int> OneBased() const;
  // positions()[j] is the slot occupied by job j.
  std::vector<int> Positions() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<JobId> slots_;
};

struct SchedulePair {
  Permutation first;
  Permutation second;

  bool operator==(const SchedulePair&) const = default;
};

// Sum over positions of (n - i) * durations[perm[i]].
Value Objective(const Permutation& perm, std::span<const Duration> durations);

// Objective(first, p) + Objective(second, q).
Value PairValue(const SchedulePair& pair, const Instance& inst);

// Number of positions holding the same job in both stages.
int Intersection(const SchedulePair& pair);

// Shortest-processing-time order; ties by ascending job index.
Permutation Spt(std::span<const Duration> durations);

// Worst-case scenario of the box: q = q_hat + q_bar.
Instance WorstCase(const IntervalInstance& inst);

// Elementwise p + q.
std::vector<Duration> JointDurations(const Instance& inst);

// Space separated 1-based labels, e.g. "5 4 2 1 3".
std::string ToString(const Permutation& perm);

}  // namespace rrsched

#endif  // RRSCHED_CORE_H_
