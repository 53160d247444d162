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

#include "rrsched/core.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "rrsched/errors.h"

namespace rrsched {

void CheckDuration(Duration d) {
  if (d < 0 || d > kMaxDuration) {
    throw RangeError("duration " + std::to_string(d) + " outside [0, " +
                     std::to_string(kMaxDuration) + "]");
  }
}

Instance::Instance(std::vector<Duration> p, std::vector<Duration> q)
    : p_(std::move(p)), q_(std::move(q)) {
  if (p_.empty()) throw DimensionError("instance needs at least one job");
  if (p_.size() != q_.size()) {
    throw DimensionError("p has " + std::to_string(p_.size()) +
                         " entries but q has " + std::to_string(q_.size()));
  }
  for (Duration d : p_) CheckDuration(d);
  for (Duration d : q_) CheckDuration(d);
}

Permutation::Permutation(std::vector<JobId> slots) : slots_(std::move(slots)) {
  const int n = size();
  std::vector<bool> seen(n, false);
  for (JobId j : slots_) {
    if (j < 0 || j >= n || seen[j]) {
      throw DimensionError("slots are not a permutation of 0.." +
                           std::to_string(n - 1));
    }
    seen[j] = true;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<JobId> slots(n);
  std::iota(slots.begin(), slots.end(), 0);
  return Permutation(std::move(slots));
}

Permutation Permutation::FromOneBased(std::span<const int> jobs) {
  std::vector<JobId> slots(jobs.begin(), jobs.end());
  for (JobId& j : slots) --j;
  return Permutation(std::move(slots));
}

Permutation Permutation::FromOneBased(std::initializer_list<int> jobs) {
  return FromOneBased(std::span<const int>(jobs.begin(), jobs.size()));
}

std::vector<int> Permutation::OneBased() const {
  std::vector<int> out(slots_.begin(), slots_.end());
  for (int& j : out) ++j;
  return out;
}

std::vector<int> Permutation::Positions() const {
  std::vector<int> pos(slots_.size());
  for (int i = 0; i < size(); ++i) pos[slots_[i]] = i;
  return pos;
}

Value Objective(const Permutation& perm, std::span<const Duration> durations) {
  const int n = perm.size();
  if (static_cast<int>(durations.size()) != n) {
    throw DimensionError("permutation over " + std::to_string(n) +
                         " jobs evaluated with " +
                         std::to_string(durations.size()) + " durations");
  }
  Value total = 0;
  for (int i = 0; i < n; ++i) total += Value{n - i} * durations[perm[i]];
  return total;
}

Value PairValue(const SchedulePair& pair, const Instance& inst) {
  return Objective(pair.first, inst.p()) + Objective(pair.second, inst.q());
}

int Intersection(const SchedulePair& pair) {
  if (pair.first.size() != pair.second.size()) {
    throw DimensionError("schedule pair over different job counts");
  }
  int shared = 0;
  for (int i = 0; i < pair.first.size(); ++i) {
    if (pair.first[i] == pair.second[i]) ++shared;
  }
  return shared;
}

Permutation Spt(std::span<const Duration> durations) {
  std::vector<JobId> order(durations.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](JobId a, JobId b) {
    return durations[a] < durations[b];
  });
  return Permutation(std::move(order));
}

Instance WorstCase(const IntervalInstance& inst) {
  const size_t n = inst.p.size();
  if (inst.q_hat.size() != n || inst.q_bar.size() != n) {
    throw DimensionError("interval instance vectors differ in length");
  }
  std::vector<Duration> q(n);
  for (size_t j = 0; j < n; ++j) {
    CheckDuration(inst.q_hat[j]);
    CheckDuration(inst.q_bar[j]);
    q[j] = inst.q_hat[j] + inst.q_bar[j];
    if (q[j] > kMaxDuration) {
      throw RangeError("worst-case duration of job " + std::to_string(j + 1) +
                       " exceeds " + std::to_string(kMaxDuration));
    }
  }
  return Instance(inst.p, std::move(q));
}

std::vector<Duration> JointDurations(const Instance& inst) {
  std::vector<Duration> joint(inst.n());
  for (JobId j = 0; j < inst.n(); ++j) joint[j] = inst.p(j) + inst.q(j);
  return joint;
}

std::string ToString(const Permutation& perm) {
  std::ostringstream out;
  for (int i = 0; i < perm.size(); ++i) {
    if (i > 0) out << ' ';
    out << perm[i] + 1;
  }
  return out.str();
}

}  // namespace rrsched
