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

// Export of the assignment MIP (and its continuous relaxation) in CPLEX LP
// text format, for verification with an external solver.
//
// Variables x_i_j / y_i_j are one when job j occupies position i in the
// first / second stage; z_i_j <= min(x_i_j, y_i_j) marks a shared
// assignment and sum z >= delta enforces the intersection. Indices are
// 1-based in variable and row names.

#ifndef RRSCHED_MIPIO_H_
#define RRSCHED_MIPIO_H_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rrsched/core.h"

namespace rrsched {

struct ModelSpec {
  Instance inst;
  int delta = 0;
  // Continuous [0, 1] variables instead of binary x and y.
  bool relaxed = false;
};

struct LpTerm {
  std::int64_t coef;
  std::string var;
};

enum class RowSense { kEqual, kLessEqual, kGreaterEqual };

struct LpRow {
  std::string name;
  std::vector<LpTerm> terms;
  RowSense sense;
  std::int64_t rhs;
};

struct LpModel {
  std::string comment;
  std::vector<LpTerm> objective;  // minimized
  std::vector<LpRow> rows;
  std::vector<std::string> variables;
  std::vector<std::string> bounded;   // declared 0 <= v <= 1
  std::vector<std::string> binaries;
};

// Throws RangeError unless 0 <= delta <= n.
LpModel BuildModel(const ModelSpec& spec);

// Byte-deterministic LP text.
std::string WriteLp(const LpModel& model);
std::string WriteLp(const ModelSpec& spec);

using LpAssignment = std::unordered_map<std::string, std::int64_t>;

// x, y and z values of a schedule pair; z marks the shared assignments.
LpAssignment AssignmentFromPair(const SchedulePair& pair);

std::int64_t ObjectiveAt(const LpModel& model, const LpAssignment& values);

// Names of rows violated by `values`; variables absent from `values` are 0.
std::vector<std::string> ViolatedRows(const LpModel& model,
                                      const LpAssignment& values);

}  // namespace rrsched

#endif  // RRSCHED_MIPIO_H_
