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

// Command line front end: instance generation, single solves, batch
// benchmarks, MIP export and the worst-case ratio table.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rrsched/analysis.h"
#include "rrsched/approx.h"
#include "rrsched/errors.h"
#include "rrsched/exact.h"
#include "rrsched/harness.h"
#include "rrsched/instance_io.h"
#include "rrsched/mipio.h"

namespace {

using namespace rrsched;

// Writes `text` to `path`, or to stdout for "-".
void Emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<Algo> ParseAlgos(const std::string& text) {
  std::vector<Algo> algos;
  for (const std::string& name : SplitList(text)) {
    auto algo = ParseAlgo(name);
    if (!algo) throw std::invalid_argument("unknown algorithm '" + name + "'");
    algos.push_back(*algo);
  }
  if (algos.empty()) throw std::invalid_argument("no algorithms given");
  return algos;
}

std::vector<int> ParseDeltas(const std::string& text) {
  std::vector<int> deltas;
  for (const std::string& item : SplitList(text)) {
    size_t used = 0;
    const int d = std::stoi(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("bad delta '" + item + "'");
    }
    deltas.push_back(d);
  }
  return deltas;
}

SolveResult SolveWith(Algo algo, const Instance& inst, int delta,
                      const ExactOptions& exact) {
  CheckDelta(inst, delta);
  switch (algo) {
    case Algo::kLb:
      return LowerBound(inst);
    case Algo::kUb:
      return UpperBound(inst);
    case Algo::kGreedy:
      return Greedy(inst, delta);
    case Algo::kExact:
      return ExactEnum(inst, delta, exact);
    case Algo::kOracle:
      return Oracle(inst, delta);
  }
  throw DomainError("unknown algorithm");
}

std::string JoinOneBased(const std::vector<int>& jobs) {
  std::string out;
  for (size_t k = 0; k < jobs.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(jobs[k]);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recoverable robust single machine scheduling toolkit"};
  app.require_subcommand(1);

  // gen
  GenConfig gen_cfg;
  std::string gen_out = "-";
  auto* gen = app.add_subcommand("gen", "Generate random instances");
  gen->add_option("--n", gen_cfg.n, "Jobs per instance")->required();
  gen->add_option("--count", gen_cfg.count, "Number of instances");
  gen->add_option("--seed", gen_cfg.seed, "splitmix64 seed");
  gen->add_option("--low", gen_cfg.low, "Smallest duration");
  gen->add_option("--high", gen_cfg.high, "Largest duration");
  gen->add_option("--out", gen_out, "Output file, - for stdout");

  // solve
  std::string solve_algo;
  int solve_delta = 0;
  std::string solve_in;
  ExactOptions solve_exact;
  auto* solve = app.add_subcommand("solve", "Solve every instance in a file");
  solve->add_option("--algo", solve_algo, "lb|ub|greedy|exact|oracle")
      ->required();
  solve->add_option("--delta", solve_delta, "Required shared positions")
      ->required();
  solve->add_option("--in", solve_in, "Instance file")->required();
  solve->add_option("--budget", solve_exact.subset_budget,
                    "Subset budget of the exact solver");
  solve->add_option("--threads", solve_exact.threads,
                    "Threads of the exact solver");

  // bench
  GenConfig bench_cfg;
  std::string bench_deltas = "all";
  std::string bench_algos = "lb,ub,greedy,exact";
  std::string bench_out = "-";
  std::string bench_summary;
  RunOptions bench_run;
  auto* bench = app.add_subcommand("bench", "Run a seeded batch experiment");
  bench->add_option("--n", bench_cfg.n, "Jobs per instance")->required();
  bench->add_option("--count", bench_cfg.count, "Number of instances");
  bench->add_option("--seed", bench_cfg.seed, "splitmix64 seed");
  bench->add_option("--low", bench_cfg.low, "Smallest duration");
  bench->add_option("--high", bench_cfg.high, "Largest duration");
  bench->add_option("--deltas", bench_deltas, "all, or a comma list");
  bench->add_option("--algos", bench_algos, "Comma list of algorithms");
  bench->add_option("--out", bench_out, "Records CSV, - for stdout");
  bench->add_option("--summary", bench_summary, "Gap summary CSV");
  bench->add_option("--workers", bench_run.workers, "Worker threads");
  bench->add_flag("--timing", bench_run.timing,
                  "Record wall-clock times (output no longer reproducible)");
  bench->add_option("--budget", bench_run.exact.subset_budget,
                    "Subset budget of the exact solver");

  // export-mip
  int mip_delta = 0;
  bool mip_relaxed = false;
  std::string mip_in;
  std::string mip_out = "-";
  auto* mip = app.add_subcommand("export-mip", "Write the MIP as an LP file");
  mip->add_option("--delta", mip_delta, "Required shared positions")
      ->required();
  mip->add_flag("--relaxed", mip_relaxed, "Continuous [0, 1] variables");
  mip->add_option("--in", mip_in, "Instance file")->required();
  mip->add_option("--out", mip_out, "Output file, - for stdout");

  // ratios
  int ratios_n_max = 0;
  std::string ratios_out = "-";
  auto* ratios = app.add_subcommand(
      "ratios", "UB/LB and UB/OPT on fully crossed 0-1 instances");
  ratios->add_option("--n-max", ratios_n_max, "Largest n")->required();
  ratios->add_option("--out", ratios_out, "Output file, - for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      std::ostringstream out;
      for (const Instance& inst : GenRandom(gen_cfg)) WriteInstance(out, inst);
      Emit(gen_out, out.str());
    } else if (solve->parsed()) {
      auto algo = ParseAlgo(solve_algo);
      if (!algo) {
        throw std::invalid_argument("unknown algorithm '" + solve_algo + "'");
      }
      const auto instances = LoadInstances(solve_in);
      std::ostringstream out;
      for (size_t k = 0; k < instances.size(); ++k) {
        const SolveResult r =
            SolveWith(*algo, instances[k], solve_delta, solve_exact);
        if (k > 0) out << '\n';
        out << "instance " << k + 1 << '\n'
            << "value " << r.value << '\n'
            << "first " << ToString(r.pair.first) << '\n'
            << "second " << ToString(r.pair.second) << '\n'
            << "intersection " << Intersection(r.pair) << '\n'
            << "fixed " << JoinOneBased(r.fixed.OneBased()) << '\n'
            << "evaluations " << r.stats.evaluations << '\n';
      }
      Emit("-", out.str());
    } else if (bench->parsed()) {
      const auto instances = GenNamed(bench_cfg);
      const auto algos = ParseAlgos(bench_algos);
      const ExperimentResult result =
          bench_deltas == "all"
              ? RunExperimentAllDeltas(instances, algos, bench_run)
              : RunExperiment(instances, ParseDeltas(bench_deltas), algos,
                              bench_run);
      std::ostringstream csv;
      WriteRecordsCsv(csv, result.records);
      Emit(bench_out, csv.str());
      if (!bench_summary.empty()) {
        std::ostringstream summary;
        WriteSummaryCsv(summary, Summarize(result.records));
        Emit(bench_summary, summary.str());
      }
      for (const RecordError& e : result.errors) {
        std::cerr << "rrsched: " << e.instance_id << " delta " << e.delta
                  << " " << AlgoName(e.algo) << ": " << e.message << '\n';
      }
      if (!result.errors.empty()) {
        std::cerr << "rrsched: error: " << result.errors.size()
                  << " solves failed\n";
        return 2;
      }
    } else if (mip->parsed()) {
      const auto instances = LoadInstances(mip_in);
      if (instances.size() != 1) {
        throw ParseError("export-mip expects exactly one instance, found " +
                         std::to_string(instances.size()));
      }
      Emit(mip_out, WriteLp(ModelSpec{instances.front(), mip_delta,
                                      mip_relaxed}));
    } else if (ratios->parsed()) {
      std::ostringstream out;
      WriteRatioCsv(out, RatioCurve01(ratios_n_max));
      Emit(ratios_out, out.str());
    }
  } catch (const std::exception& e) {
    std::cerr << "rrsched: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
