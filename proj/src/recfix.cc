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

#include "rrsched/recfix.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "rrsched/errors.h"

namespace rrsched {

FixSet::FixSet(std::vector<JobId> jobs) : jobs_(std::move(jobs)) {
  std::sort(jobs_.begin(), jobs_.end());
  if (std::adjacent_find(jobs_.begin(), jobs_.end()) != jobs_.end()) {
    throw DimensionError("fix set contains a duplicate job");
  }
  if (!jobs_.empty() && jobs_.front() < 0) {
    throw RangeError("fix set contains a negative job index");
  }
}

FixSet FixSet::FromOneBased(std::initializer_list<int> jobs) {
  std::vector<JobId> zero_based(jobs.begin(), jobs.end());
  for (JobId& j : zero_based) --j;
  return FixSet(std::move(zero_based));
}

FixSet FixSet::All(int n) {
  std::vector<JobId> jobs(n);
  std::iota(jobs.begin(), jobs.end(), 0);
  return FixSet(std::move(jobs));
}

bool FixSet::contains(JobId j) const {
  return std::binary_search(jobs_.begin(), jobs_.end(), j);
}

std::vector<int> FixSet::OneBased() const {
  std::vector<int> out(jobs_.begin(), jobs_.end());
  for (int& j : out) ++j;
  return out;
}

FixSet FixSet::With(JobId j) const {
  FixSet out = *this;
  auto it = std::lower_bound(out.jobs_.begin(), out.jobs_.end(), j);
  if (it != out.jobs_.end() && *it == j) {
    throw DimensionError("job " + std::to_string(j + 1) +
                         " already in fix set");
  }
  out.jobs_.insert(it, j);
  return out;
}

namespace {

// Splits the jobs into the free and fixed groups, validating the fix set.
std::vector<char> Membership(const Instance& inst, const FixSet& fixed) {
  std::vector<char> in_m(inst.n(), 0);
  for (JobId j : fixed.jobs()) {
    if (j < 0 || j >= inst.n()) {
      throw RangeError("fixed job " + std::to_string(j + 1) +
                       " outside 1.." + std::to_string(inst.n()));
    }
    in_m[j] = 1;
  }
  return in_m;
}

// Orders `jobs` by (key[j], j).
void SortByKey(std::vector<JobId>& jobs, std::span<const Duration> key) {
  std::sort(jobs.begin(), jobs.end(), [&](JobId a, JobId b) {
    return std::tie(key[a], a) < std::tie(key[b], b);
  });
}

struct SlotEntry {
  Value value;
  int kind;  // 0: rank-wise sum of free jobs, 1: fixed job
  int key;   // rank for free entries, job index for fixed entries
};

}  // namespace

EvalResult EvalFixed(const Instance& inst, const FixSet& fixed) {
  const int n = inst.n();
  const auto in_m = Membership(inst, fixed);
  const auto joint = JointDurations(inst);

  std::vector<JobId> free_jobs;
  std::vector<JobId> fixed_jobs;
  for (JobId j = 0; j < n; ++j) (in_m[j] ? fixed_jobs : free_jobs).push_back(j);

  std::vector<JobId> by_p = free_jobs;
  std::vector<JobId> by_q = free_jobs;
  SortByKey(by_p, inst.p());
  SortByKey(by_q, inst.q());

  std::vector<SlotEntry> entries;
  entries.reserve(n);
  for (int r = 0; r < static_cast<int>(free_jobs.size()); ++r) {
    entries.push_back({inst.p(by_p[r]) + inst.q(by_q[r]), 0, r});
  }
  for (JobId j : fixed_jobs) entries.push_back({joint[j], 1, j});
  std::sort(entries.begin(), entries.end(),
            [](const SlotEntry& a, const SlotEntry& b) {
              return std::tie(a.value, a.kind, a.key) <
                     std::tie(b.value, b.kind, b.key);
            });

  EvalResult result;
  result.fixed = fixed;
  result.merged.resize(n);
  std::vector<JobId> first(n);
  std::vector<JobId> second(n);
  for (int i = 0; i < n; ++i) {
    const SlotEntry& e = entries[i];
    result.merged[i] = e.value;
    result.value += Value{n - i} * e.value;
    if (e.kind == 0) {
      first[i] = by_p[e.key];
      second[i] = by_q[e.key];
    } else {
      first[i] = second[i] = e.key;
    }
  }
  result.pair = {Permutation(std::move(first)), Permutation(std::move(second))};
  return result;
}

Value FValue(const Instance& inst, const FixSet& fixed) {
  const int n = inst.n();
  const auto in_m = Membership(inst, fixed);

  std::vector<Value> a;
  std::vector<Value> b;
  std::vector<Value> c;
  a.reserve(n);
  b.reserve(n);
  c.reserve(fixed.size());
  for (JobId j = 0; j < n; ++j) {
    if (in_m[j]) {
      c.push_back(inst.p(j) + inst.q(j));
    } else {
      a.push_back(inst.p(j));
      b.push_back(inst.q(j));
    }
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::sort(c.begin(), c.end());
  for (size_t r = 0; r < a.size(); ++r) a[r] += b[r];

  Value total = 0;
  size_t ia = 0;
  size_t ic = 0;
  for (int i = 0; i < n; ++i) {
    Value next;
    if (ic == c.size() || (ia < a.size() && a[ia] <= c[ic])) {
      next = a[ia++];
    } else {
      next = c[ic++];
    }
    total += Value{n - i} * next;
  }
  return total;
}

}  // namespace rrsched
