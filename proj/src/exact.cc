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

#include "rrsched/exact.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rrsched/errors.h"
#include "rrsched/recfix.h"

namespace rrsched {
namespace {

using Clock = std::chrono::steady_clock;
constexpr Value kNoValue = std::numeric_limits<Value>::max();

// One top-level subtree of the fix-set search: all sets whose smallest
// member is `root`.
class Branch {
 public:
  Branch(const Instance& inst, int delta, bool prune, Value bound,
         std::atomic<Value>& shared)
      : inst_(inst), delta_(delta), prune_(prune), best_(bound),
        shared_(shared) {}

  void Run(JobId root) {
    members_.push_back(root);
    Visit();
    members_.pop_back();
  }

  bool found() const { return !best_set_.empty(); }
  Value best() const { return best_; }
  const std::vector<JobId>& best_set() const { return best_set_; }
  const SolveStats& stats() const { return stats_; }

 private:
  void Visit() {
    ++stats_.nodes;
    const bool leaf = static_cast<int>(members_.size()) == delta_;
    if (leaf || prune_) {
      const Value f = FValue(inst_, FixSet(members_));
      ++stats_.evaluations;
      // Ties with the branch's own incumbent are cut, ties with other
      // branches are kept so that every branch reports its first optimum.
      if (prune_ && (f >= best_ || f > shared_.load(std::memory_order_relaxed))) {
        ++stats_.nodes_pruned;
        return;
      }
      if (leaf) {
        if (f < best_) {
          best_ = f;
          best_set_ = members_;
          Value seen = shared_.load(std::memory_order_relaxed);
          while (f < seen && !shared_.compare_exchange_weak(seen, f)) {
          }
        }
        return;
      }
    }
    const int n = inst_.n();
    const int missing = delta_ - static_cast<int>(members_.size());
    for (JobId next = members_.back() + 1; next <= n - missing; ++next) {
      members_.push_back(next);
      Visit();
      members_.pop_back();
    }
  }

  const Instance& inst_;
  const int delta_;
  const bool prune_;
  Value best_;
  std::atomic<Value>& shared_;
  std::vector<JobId> members_;
  std::vector<JobId> best_set_;
  SolveStats stats_;
};

SolveResult FromEval(EvalResult eval) {
  SolveResult r;
  r.value = eval.value;
  r.pair = std::move(eval.pair);
  r.fixed = std::move(eval.fixed);
  return r;
}

}  // namespace

std::int64_t BinomialCapped(int n, int k, std::int64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // c stays exact: c * (n - k + i) / i is C(n - k + i, i).
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (c > static_cast<unsigned __int128>(cap)) return cap;
  }
  return static_cast<std::int64_t>(c);
}

SolveResult ExactEnum(const Instance& inst, int delta,
                      const ExactOptions& options) {
  CheckDelta(inst, delta);
  const int n = inst.n();
  const std::int64_t cap =
      options.subset_budget < std::numeric_limits<std::int64_t>::max()
          ? options.subset_budget + 1
          : options.subset_budget;
  const std::int64_t subsets = BinomialCapped(n, delta, cap);
  if (subsets > options.subset_budget) {
    throw ResourceError("C(" + std::to_string(n) + ", " +
                        std::to_string(delta) + ") exceeds the subset budget " +
                        std::to_string(options.subset_budget));
  }
  const auto start = Clock::now();

  if (delta == 0) {
    SolveResult r = FromEval(EvalFixed(inst, FixSet()));
    r.stats.evaluations = r.stats.nodes = 1;
    r.stats.elapsed = Clock::now() - start;
    return r;
  }

  SolveStats stats;
  Value bound = kNoValue;
  if (options.prune) {
    SolveResult seed = Greedy(inst, delta);
    stats.evaluations += seed.stats.evaluations;
    // Any fix set of size delta is feasible, so the optimum is at most the
    // greedy value; one above it keeps optimal ties in the search.
    bound = seed.value + 1;
  }

  const int roots = n - delta + 1;
  std::atomic<Value> shared{bound};
  std::vector<Branch> branches;
  branches.reserve(roots);
  for (int r = 0; r < roots; ++r) {
    branches.emplace_back(inst, delta, options.prune, bound, shared);
  }

  const int workers = std::clamp(options.threads, 1, roots);
  if (workers == 1) {
    for (int r = 0; r < roots; ++r) branches[r].Run(r);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int r = next++; r < roots; r = next++) branches[r].Run(r);
      });
    }
  }

  const Branch* winner = nullptr;
  for (const Branch& b : branches) {
    stats.evaluations += b.stats().evaluations;
    stats.nodes += b.stats().nodes;
    stats.nodes_pruned += b.stats().nodes_pruned;
    if (b.found() && (winner == nullptr || b.best() < winner->best())) {
      winner = &b;
    }
  }
  // The optimum never exceeds the greedy value, so some branch holds it.
  SolveResult r = FromEval(EvalFixed(inst, FixSet(winner->best_set())));
  r.stats = stats;
  ++r.stats.evaluations;
  r.stats.elapsed = Clock::now() - start;
  return r;
}

SolveResult ExactBounded(const Instance& inst, int delta,
                         const ExactOptions& options) {
  CheckDelta(inst, delta);
  const auto start = Clock::now();

  std::map<std::pair<Duration, Duration>, std::vector<JobId>> by_type;
  for (JobId j = 0; j < inst.n(); ++j) by_type[{inst.p(j), inst.q(j)}].push_back(j);
  std::vector<std::vector<JobId>> types;
  types.reserve(by_type.size());
  for (auto& [key, jobs] : by_type) types.push_back(std::move(jobs));
  const int t = static_cast<int>(types.size());

  // ways[k][s]: count vectors over types k.. summing to s, capped.
  const std::int64_t cap = options.subset_budget + 1;
  std::vector<std::vector<std::int64_t>> ways(
      t + 1, std::vector<std::int64_t>(delta + 1, 0));
  ways[t][0] = 1;
  for (int k = t - 1; k >= 0; --k) {
    const int mult = static_cast<int>(types[k].size());
    for (int s = 0; s <= delta; ++s) {
      std::int64_t total = 0;
      for (int c = 0; c <= std::min(mult, s); ++c) {
        total = std::min(cap, total + ways[k + 1][s - c]);
      }
      ways[k][s] = total;
    }
  }
  if (ways[0][delta] > options.subset_budget) {
    throw ResourceError("type count vectors for delta " +
                        std::to_string(delta) + " exceed the subset budget " +
                        std::to_string(options.subset_budget));
  }

  SolveStats stats;
  Value best = kNoValue;
  std::vector<JobId> best_set;
  std::vector<JobId> members;

  auto recurse = [&](auto&& self, int k, int remaining) -> void {
    if (k == t) {
      const Value f = FValue(inst, FixSet(members));
      ++stats.evaluations;
      if (f < best) {
        best = f;
        best_set = members;
      }
      return;
    }
    ++stats.nodes;
    const int mult = static_cast<int>(types[k].size());
    for (int c = 0; c <= std::min(mult, remaining); ++c) {
      if (ways[k + 1][remaining - c] == 0) continue;
      members.insert(members.end(), types[k].begin(), types[k].begin() + c);
      self(self, k + 1, remaining - c);
      members.resize(members.size() - c);
    }
  };
  recurse(recurse, 0, delta);

  SolveResult r = FromEval(EvalFixed(inst, FixSet(best_set)));
  r.stats = stats;
  ++r.stats.evaluations;
  r.stats.elapsed = Clock::now() - start;
  return r;
}

SolveResult Oracle(const Instance& inst, int delta) {
  CheckDelta(inst, delta);
  const int n = inst.n();
  if (n > kOracleMaxJobs) {
    throw ResourceError("oracle enumerates n!^2 pairs; n = " +
                        std::to_string(n) + " exceeds " +
                        std::to_string(kOracleMaxJobs));
  }
  const auto start = Clock::now();

  std::vector<std::vector<JobId>> perms;
  std::vector<Value> on_p;
  std::vector<Value> on_q;
  std::vector<JobId> slots(n);
  std::iota(slots.begin(), slots.end(), 0);
  do {
    Permutation perm(slots);
    on_p.push_back(Objective(perm, inst.p()));
    on_q.push_back(Objective(perm, inst.q()));
    perms.push_back(slots);
  } while (std::next_permutation(slots.begin(), slots.end()));

  const auto count = perms.size();
  Value best = kNoValue;
  size_t best_a = 0;
  size_t best_b = 0;
  for (size_t a = 0; a < count; ++a) {
    for (size_t b = 0; b < count; ++b) {
      const Value v = on_p[a] + on_q[b];
      if (v >= best) continue;
      int shared = 0;
      for (int i = 0; i < n; ++i) shared += perms[a][i] == perms[b][i];
      if (shared >= delta) {
        best = v;
        best_a = a;
        best_b = b;
      }
    }
  }

  SolveResult r;
  r.value = best;
  r.pair = {Permutation(perms[best_a]), Permutation(perms[best_b])};
  r.stats.evaluations = static_cast<std::int64_t>(count * count);
  r.stats.elapsed = Clock::now() - start;
  return r;
}

}  // namespace rrsched
