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
#include <random>

#include "gtest/gtest.h"
#include "rrsched/errors.h"
#include "test_util.h"

namespace rrsched {
namespace {

using testing::BruteForceFixedValues;
using testing::MaskToJobs;
using testing::RandomInstance;
using testing::Example5;

TEST(EvalFixed, WorkedExample) {
  const EvalResult r = EvalFixed(Example5(), FixSet::FromOneBased({3, 4}));
  EXPECT_EQ(r.value, 96);
  EXPECT_EQ(r.merged, (std::vector<Value>{3, 6, 7, 11, 14}));
  EXPECT_EQ(r.pair.first.OneBased(), (std::vector<int>{5, 4, 2, 1, 3}));
  EXPECT_EQ(r.pair.second.OneBased(), (std::vector<int>{2, 4, 1, 5, 3}));
  EXPECT_EQ(PairValue(r.pair, Example5()), 96);
}

TEST(EvalFixed, EmptyAndFullSets) {
  EXPECT_EQ(EvalFixed(Example5(), FixSet()).value, 94);
  const EvalResult all = EvalFixed(Example5(), FixSet::All(5));
  EXPECT_EQ(all.value, 100);
  EXPECT_EQ(all.merged, (std::vector<Value>{4, 6, 8, 9, 14}));
  EXPECT_EQ(all.pair.first, all.pair.second);
}

TEST(EvalFixed, ZeroDurations) {
  const Instance zeros({0, 0, 0, 0}, {0, 0, 0, 0});
  for (int mask = 0; mask < 16; ++mask) {
    EXPECT_EQ(EvalFixed(zeros, FixSet(MaskToJobs(mask, 4))).value, 0);
  }
}

TEST(FValue, HandComputedExample5) {
  // e = (2, 6, 8, 11, 14), (4, 6, 8, 9, 14) and (2, 7, 8, 10, 14).
  EXPECT_EQ(FValue(Example5(), FixSet::FromOneBased({3})), 94);
  EXPECT_EQ(FValue(Example5(), FixSet::FromOneBased({1, 2})), 100);
  EXPECT_EQ(FValue(Example5(), FixSet::FromOneBased({3, 5})), 96);
}

TEST(FValue, Example5MatchesBruteForce) {
  const auto brute = BruteForceFixedValues(Example5());
  for (int mask = 0; mask < 32; ++mask) {
    const FixSet m(MaskToJobs(mask, 5));
    EXPECT_EQ(FValue(Example5(), m), brute[mask]) << "mask " << mask;
  }
}

TEST(EvalFixed, Errors) {
  EXPECT_THROW(EvalFixed(Example5(), FixSet({5})), RangeError);
  EXPECT_THROW(FValue(Example5(), FixSet({7})), RangeError);
  EXPECT_THROW(FixSet({1, 1}), DimensionError);
  EXPECT_THROW(FixSet({-1}), RangeError);
  EXPECT_THROW(FixSet({1}).With(1), DimensionError);
}

TEST(FixSet, SortedOnConstruction) {
  const FixSet m({4, 0, 2});
  EXPECT_EQ(std::vector<JobId>(m.jobs().begin(), m.jobs().end()),
            (std::vector<JobId>{0, 2, 4}));
  EXPECT_TRUE(m.contains(2));
  EXPECT_FALSE(m.contains(3));
  EXPECT_EQ(m.With(3).OneBased(), (std::vector<int>{1, 3, 4, 5}));
}

// Every fix set of random small instances against exhaustive enumeration;
// also checks the reconstructed pair.
TEST(EvalFixed, MatchesBruteForceOnRandomInstances) {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < (n <= 4 ? 20 : 4); ++trial) {
      const Instance inst = RandomInstance(rng, n, 0, 9);
      const auto brute = BruteForceFixedValues(inst);
      for (int mask = 0; mask < (1 << n); ++mask) {
        const FixSet m(MaskToJobs(mask, n));
        const EvalResult r = EvalFixed(inst, m);
        ASSERT_EQ(r.value, brute[mask]) << "n=" << n << " mask=" << mask;
        ASSERT_EQ(FValue(inst, m), r.value);
        ASSERT_EQ(PairValue(r.pair, inst), r.value);
        ASSERT_GE(Intersection(r.pair), m.size());
        const auto pos1 = r.pair.first.Positions();
        const auto pos2 = r.pair.second.Positions();
        for (JobId j : m.jobs()) ASSERT_EQ(pos1[j], pos2[j]);
      }
    }
  }
}

TEST(EvalFixed, SevenJobsAgainstBruteForce) {
  std::mt19937_64 rng(99);
  const Instance inst = RandomInstance(rng, 7, 1, 30);
  const auto brute = BruteForceFixedValues(inst);
  for (int mask = 0; mask < 128; ++mask) {
    ASSERT_EQ(FValue(inst, FixSet(MaskToJobs(mask, 7))), brute[mask]);
  }
}

TEST(FValue, MonotoneAlongRandomChains) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    const Instance inst = RandomInstance(rng, n, 0, 50);
    std::vector<JobId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    FixSet m;
    Value prev = FValue(inst, m);
    for (JobId j : order) {
      m = m.With(j);
      const Value next = FValue(inst, m);
      ASSERT_LE(prev, next);
      prev = next;
    }
  }
}

TEST(EvalFixed, TieBreakFreeBeforeFixed) {
  // Job 1 is fixed with p + q = 2; free jobs 2, 3 yield d = (2, 4).
  const Instance inst({1, 1, 2}, {1, 1, 2});
  const EvalResult r = EvalFixed(inst, FixSet::FromOneBased({1}));
  EXPECT_EQ(r.merged, (std::vector<Value>{2, 2, 4}));
  EXPECT_EQ(r.pair.first.OneBased(), (std::vector<int>{2, 1, 3}));
  EXPECT_EQ(r.pair.second.OneBased(), (std::vector<int>{2, 1, 3}));
}

}  // namespace
}  // namespace rrsched
