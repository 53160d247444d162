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

#include "rrsched/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <thread>
#include <tuple>

#include "rrsched/approx.h"
#include "rrsched/errors.h"

namespace rrsched {

std::uint64_t SplitMix64::Next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Duration UniformDuration(SplitMix64& rng, Duration low, Duration high) {
  if (low > high) throw RangeError("empty duration range");
  using u128 = unsigned __int128;
  const u128 range = static_cast<u128>(high - low) + 1;
  const u128 limit = ((u128{1} << 64) / range) * range;
  while (true) {
    const std::uint64_t draw = rng.Next();
    if (draw < limit) return low + static_cast<Duration>(draw % range);
  }
}

std::vector<Instance> GenRandom(const GenConfig& cfg) {
  if (cfg.n < 1) throw RangeError("n must be positive");
  if (cfg.count < 1) throw RangeError("count must be positive");
  CheckDuration(cfg.low);
  CheckDuration(cfg.high);
  if (cfg.low > cfg.high) throw RangeError("low exceeds high");
  SplitMix64 rng(cfg.seed);
  std::vector<Instance> out;
  out.reserve(cfg.count);
  for (int k = 0; k < cfg.count; ++k) {
    std::vector<Duration> p(cfg.n);
    std::vector<Duration> q(cfg.n);
    for (Duration& d : p) d = UniformDuration(rng, cfg.low, cfg.high);
    for (Duration& d : q) d = UniformDuration(rng, cfg.low, cfg.high);
    out.emplace_back(std::move(p), std::move(q));
  }
  return out;
}

std::vector<NamedInstance> GenNamed(const GenConfig& cfg) {
  auto instances = GenRandom(cfg);
  std::vector<NamedInstance> out;
  out.reserve(instances.size());
  const int width =
      std::max<int>(4, static_cast<int>(std::to_string(cfg.count - 1).size()));
  for (size_t k = 0; k < instances.size(); ++k) {
    std::string index = std::to_string(k);
    index.insert(0, width - index.size(), '0');
    out.push_back({"n" + std::to_string(cfg.n) + "-s" +
                       std::to_string(cfg.seed) + "-" + index,
                   std::move(instances[k]), cfg.seed});
  }
  return out;
}

std::string_view AlgoName(Algo algo) {
  switch (algo) {
    case Algo::kLb:
      return "lb";
    case Algo::kUb:
      return "ub";
    case Algo::kGreedy:
      return "greedy";
    case Algo::kExact:
      return "exact";
    case Algo::kOracle:
      return "oracle";
  }
  return "?";
}

std::optional<Algo> ParseAlgo(std::string_view name) {
  for (Algo a : {Algo::kLb, Algo::kUb, Algo::kGreedy, Algo::kExact,
                 Algo::kOracle}) {
    if (AlgoName(a) == name) return a;
  }
  return std::nullopt;
}

namespace {

SolveResult Solve(const Instance& inst, int delta, Algo algo,
                  const ExactOptions& exact) {
  switch (algo) {
    case Algo::kLb:
      CheckDelta(inst, delta);
      return LowerBound(inst);
    case Algo::kUb:
      CheckDelta(inst, delta);
      return UpperBound(inst);
    case Algo::kGreedy:
      return Greedy(inst, delta);
    case Algo::kExact: {
      ExactOptions sequential = exact;
      sequential.threads = 1;
      return ExactEnum(inst, delta, sequential);
    }
    case Algo::kOracle:
      return Oracle(inst, delta);
  }
  throw DomainError("unknown algorithm");
}

struct InstanceOutput {
  std::vector<ExperimentRecord> records;
  std::vector<RecordError> errors;
};

InstanceOutput RunOne(const NamedInstance& named, std::span<const int> deltas,
                      std::span<const Algo> algos, const RunOptions& options) {
  InstanceOutput out;
  for (int delta : deltas) {
    for (Algo algo : algos) {
      try {
        SolveResult r = Solve(named.inst, delta, algo, options.exact);
        ExperimentRecord rec;
        rec.instance_id = named.id;
        rec.n = named.inst.n();
        rec.delta = delta;
        rec.algo = algo;
        rec.value = r.value;
        rec.elapsed_ms =
            options.timing
                ? std::chrono::duration<double, std::milli>(r.stats.elapsed)
                      .count()
                : 0.0;
        rec.evaluations = r.stats.evaluations;
        rec.seed = named.seed;
        out.records.push_back(std::move(rec));
      } catch (const std::exception& e) {
        out.errors.push_back({named.id, delta, algo, e.what()});
      }
    }
  }
  return out;
}

ExperimentResult Run(std::span<const NamedInstance> instances,
                     const std::vector<std::vector<int>>& deltas,
                     std::span<const Algo> algos, const RunOptions& options) {
  const int count = static_cast<int>(instances.size());
  std::vector<InstanceOutput> outputs(count);
  const int workers = std::clamp(options.workers, 1, std::max(count, 1));
  {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int k = next++; k < count; k = next++) {
          outputs[k] = RunOne(instances[k], deltas[k], algos, options);
        }
      });
    }
  }

  ExperimentResult result;
  for (InstanceOutput& o : outputs) {
    std::move(o.records.begin(), o.records.end(),
              std::back_inserter(result.records));
    std::move(o.errors.begin(), o.errors.end(),
              std::back_inserter(result.errors));
  }
  std::stable_sort(result.records.begin(), result.records.end(),
                   [](const ExperimentRecord& a, const ExperimentRecord& b) {
                     return std::tie(a.instance_id, a.delta, a.algo) <
                            std::tie(b.instance_id, b.delta, b.algo);
                   });
  std::stable_sort(result.errors.begin(), result.errors.end(),
                   [](const RecordError& a, const RecordError& b) {
                     return std::tie(a.instance_id, a.delta, a.algo) <
                            std::tie(b.instance_id, b.delta, b.algo);
                   });
  return result;
}

}  // namespace

ExperimentResult RunExperiment(std::span<const NamedInstance> instances,
                               std::span<const int> deltas,
                               std::span<const Algo> algos,
                               const RunOptions& options) {
  std::vector<int> sorted(deltas.begin(), deltas.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::vector<int>> per_instance(instances.size(), sorted);
  return Run(instances, per_instance, algos, options);
}

ExperimentResult RunExperimentAllDeltas(std::span<const NamedInstance> instances,
                                        std::span<const Algo> algos,
                                        const RunOptions& options) {
  std::vector<std::vector<int>> per_instance;
  per_instance.reserve(instances.size());
  for (const NamedInstance& named : instances) {
    std::vector<int> all(named.inst.n() + 1);
    for (int d = 0; d <= named.inst.n(); ++d) all[d] = d;
    per_instance.push_back(std::move(all));
  }
  return Run(instances, per_instance, algos, options);
}

void WriteRecordsCsv(std::ostream& out,
                     std::span<const ExperimentRecord> records) {
  out << "instance_id,n,delta,algo,value,elapsed_ms,evaluations,seed\n";
  char ms[32];
  for (const ExperimentRecord& r : records) {
    std::snprintf(ms, sizeof(ms), "%.3f", r.elapsed_ms);
    out << r.instance_id << ',' << r.n << ',' << r.delta << ','
        << AlgoName(r.algo) << ',' << r.value << ',' << ms << ','
        << r.evaluations << ',' << r.seed << '\n';
  }
}

std::vector<GapSummary> Summarize(std::span<const ExperimentRecord> records) {
  using Key = std::tuple<std::string, int>;
  std::map<Key, Value> exact;
  std::map<Key, Value> oracle;
  for (const ExperimentRecord& r : records) {
    if (r.algo == Algo::kExact) exact[{r.instance_id, r.delta}] = r.value;
    if (r.algo == Algo::kOracle) oracle[{r.instance_id, r.delta}] = r.value;
  }

  struct Acc {
    int compared = 0;
    int excluded = 0;
    int nonzero = 0;
    BigRational sum;
    BigRational max;
  };
  std::map<std::tuple<int, int, Algo>, Acc> groups;
  for (const ExperimentRecord& r : records) {
    if (r.algo != Algo::kUb && r.algo != Algo::kGreedy) continue;
    Acc& acc = groups[{r.n, r.delta, r.algo}];
    const Key key{r.instance_id, r.delta};
    std::optional<Value> base;
    if (auto it = exact.find(key); it != exact.end()) {
      base = it->second;
    } else if (auto it2 = oracle.find(key); it2 != oracle.end()) {
      base = it2->second;
    }
    if (!base || (*base == 0 && r.value != 0)) {
      ++acc.excluded;
      continue;
    }
    BigRational gap = 0;
    if (*base != 0) gap = BigRational(100 * (r.value - *base), *base);
    if (acc.compared == 0 || gap > acc.max) acc.max = gap;
    acc.sum += gap;
    if (gap != 0) ++acc.nonzero;
    ++acc.compared;
  }

  std::vector<GapSummary> out;
  for (auto& [key, acc] : groups) {
    GapSummary s;
    std::tie(s.n, s.delta, s.algo) = key;
    s.compared = acc.compared;
    s.excluded = acc.excluded;
    if (acc.compared > 0) {
      s.avg_gap_pct = acc.sum / acc.compared;
      s.max_gap_pct = acc.max;
      s.pct_nonzero = BigRational(100 * acc.nonzero, acc.compared);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string FormatPercent(const BigRational& value) {
  using boost::multiprecision::cpp_int;
  const bool negative = value < 0;
  const BigRational mag = negative ? BigRational(-value) : value;
  const cpp_int num = boost::multiprecision::numerator(mag);
  const cpp_int den = boost::multiprecision::denominator(mag);
  const cpp_int hundredths = (num * 200 + den) / (den * 2);
  const cpp_int whole = hundredths / 100;
  const int frac = static_cast<int>(hundredths % 100);
  std::string out = negative && hundredths != 0 ? "-" : "";
  out += whole.str();
  out += '.';
  out += static_cast<char>('0' + frac / 10);
  out += static_cast<char>('0' + frac % 10);
  return out;
}

void WriteSummaryCsv(std::ostream& out, std::span<const GapSummary> summaries) {
  out << "n,delta,algo,compared,excluded,avg_gap_pct,max_gap_pct,pct_nonzero\n";
  for (const GapSummary& s : summaries) {
    out << s.n << ',' << s.delta << ',' << AlgoName(s.algo) << ','
        << s.compared << ',' << s.excluded << ',' << FormatPercent(s.avg_gap_pct)
        << ',' << FormatPercent(s.max_gap_pct) << ','
        << FormatPercent(s.pct_nonzero) << '\n';
  }
}

}  // namespace rrsched
