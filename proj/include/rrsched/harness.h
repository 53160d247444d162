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

// Reproducible experiments: seeded instance generation, batch solving over
// a grid of deltas and algorithms, gap statistics and CSV output.

#ifndef RRSCHED_HARNESS_H_
#define RRSCHED_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rrsched/core.h"
#include "rrsched/exact.h"

namespace rrsched {

// Sebastiano Vigna's splitmix64.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t Next();

 private:
  std::uint64_t state_;
};

// Uniform integer in [low, high]: draws are rejected when they are at least
// floor(2^64 / range) * range, the rest are reduced modulo range.
Duration UniformDuration(SplitMix64& rng, Duration low, Duration high);

struct GenConfig {
  int n = 10;
  int count = 100;
  std::uint64_t seed = 0;
  Duration low = 1;
  Duration high = 100;
};

// Instance k consumes p_1..p_n then q_1..q_n from one shared stream, so a
// shorter count yields a prefix of a longer one.
std::vector<Instance> GenRandom(const GenConfig& cfg);

struct NamedInstance {
  std::string id;
  Instance inst;
  std::uint64_t seed = 0;
};

std::vector<NamedInstance> GenNamed(const GenConfig& cfg);

enum class Algo { kLb, kUb, kGreedy, kExact, kOracle };

std::string_view AlgoName(Algo algo);
std::optional<Algo> ParseAlgo(std::string_view name);

struct ExperimentRecord {
  std::string instance_id;
  int n = 0;
  int delta = 0;
  Algo algo = Algo::kLb;
  Value value = 0;
  double elapsed_ms = 0;
  std::int64_t evaluations = 0;
  std::uint64_t seed = 0;
};

struct RecordError {
  std::string instance_id;
  int delta = 0;
  Algo algo = Algo::kLb;
  std::string message;
};

struct RunOptions {
  int workers = 1;
  // When false elapsed_ms is written as 0 so that output is reproducible.
  bool timing = false;
  ExactOptions exact;
};

struct ExperimentResult {
  // Sorted by (instance_id, delta, algo) with algos in enum order.
  std::vector<ExperimentRecord> records;
  std::vector<RecordError> errors;
};

// Failing solves become RecordError entries; the batch continues.
ExperimentResult RunExperiment(std::span<const NamedInstance> instances,
                               std::span<const int> deltas,
                               std::span<const Algo> algos,
                               const RunOptions& options = {});

// Runs every delta in [0, n] of each instance.
ExperimentResult RunExperimentAllDeltas(std::span<const NamedInstance> instances,
                                        std::span<const Algo> algos,
                                        const RunOptions& options = {});

// Header instance_id,n,delta,algo,value,elapsed_ms,evaluations,seed; LF.
void WriteRecordsCsv(std::ostream& out,
                     std::span<const ExperimentRecord> records);

using BigRational = boost::multiprecision::cpp_rational;

struct GapSummary {
  int n = 0;
  int delta = 0;
  Algo algo = Algo::kUb;
  int compared = 0;
  // Heuristic records without an exact or oracle value for their instance.
  int excluded = 0;
  BigRational avg_gap_pct;
  BigRational max_gap_pct;
  BigRational pct_nonzero;
};

// Relative gaps 100 (v - v_exact) / v_exact of the ub and greedy records,
// grouped by (n, delta, algo). The exact record is the baseline, the oracle
// record stands in when no exact record exists.
std::vector<GapSummary> Summarize(std::span<const ExperimentRecord> records);

// Fixed point with two decimals, halves rounded away from zero.
std::string FormatPercent(const BigRational& value);

// Header n,delta,algo,compared,excluded,avg_gap_pct,max_gap_pct,pct_nonzero.
void WriteSummaryCsv(std::ostream& out, std::span<const GapSummary> summaries);

}  // namespace rrsched

#endif  // RRSCHED_HARNESS_H_
