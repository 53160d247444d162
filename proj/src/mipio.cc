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

#include "rrsched/mipio.h"

#include <sstream>

#include "rrsched/approx.h"

namespace rrsched {
namespace {

constexpr int kTermsPerLine = 8;

std::string Var(char stage, int i, int j) {
  return std::string(1, stage) + "_" + std::to_string(i) + "_" +
         std::to_string(j);
}

void WriteTerms(std::ostringstream& out, const std::vector<LpTerm>& terms) {
  for (size_t k = 0; k < terms.size(); ++k) {
    const LpTerm& t = terms[k];
    if (k > 0 && k % kTermsPerLine == 0) out << "\n  ";
    if (k > 0 || t.coef < 0) out << (t.coef < 0 ? " - " : " + ");
    if (k == 0 && t.coef >= 0) out << ' ';
    const std::int64_t mag = t.coef < 0 ? -t.coef : t.coef;
    if (mag != 1) out << mag << ' ';
    out << t.var;
  }
}

void WriteNames(std::ostringstream& out, const std::vector<std::string>& names) {
  for (size_t k = 0; k < names.size(); ++k) {
    out << (k % kTermsPerLine == 0 ? "\n " : " ") << names[k];
  }
  out << '\n';
}

const char* SenseText(RowSense sense) {
  switch (sense) {
    case RowSense::kEqual:
      return "=";
    case RowSense::kLessEqual:
      return "<=";
    case RowSense::kGreaterEqual:
      return ">=";
  }
  return "=";
}

}  // namespace

LpModel BuildModel(const ModelSpec& spec) {
  const Instance& inst = spec.inst;
  CheckDelta(inst, spec.delta);
  const int n = inst.n();
  LpModel m;
  m.comment = "recoverable robust single machine scheduling, n = " +
              std::to_string(n) + ", delta = " + std::to_string(spec.delta) +
              (spec.relaxed ? ", linear relaxation" : ", binary");

  for (char stage : {'x', 'y'}) {
    const auto durations = stage == 'x' ? inst.p() : inst.q();
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const std::int64_t coef = (n + 1 - i) * durations[j - 1];
        if (coef != 0) m.objective.push_back({coef, Var(stage, i, j)});
      }
    }
  }

  for (char stage : {'x', 'y'}) {
    for (int i = 1; i <= n; ++i) {
      LpRow row{std::string(1, stage) + "pos_" + std::to_string(i), {},
                RowSense::kEqual, 1};
      for (int j = 1; j <= n; ++j) row.terms.push_back({1, Var(stage, i, j)});
      m.rows.push_back(std::move(row));
    }
    for (int j = 1; j <= n; ++j) {
      LpRow row{std::string(1, stage) + "job_" + std::to_string(j), {},
                RowSense::kEqual, 1};
      for (int i = 1; i <= n; ++i) row.terms.push_back({1, Var(stage, i, j)});
      m.rows.push_back(std::move(row));
    }
  }
  for (char stage : {'x', 'y'}) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        m.rows.push_back({std::string(1, stage) + "link_" + std::to_string(i) +
                              "_" + std::to_string(j),
                          {{1, Var('z', i, j)}, {-1, Var(stage, i, j)}},
                          RowSense::kLessEqual,
                          0});
      }
    }
  }
  LpRow shared{"shared", {}, RowSense::kGreaterEqual, spec.delta};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) shared.terms.push_back({1, Var('z', i, j)});
  }
  m.rows.push_back(std::move(shared));

  for (char stage : {'x', 'y', 'z'}) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const std::string v = Var(stage, i, j);
        m.variables.push_back(v);
        if (stage == 'z' || spec.relaxed) {
          m.bounded.push_back(v);
        } else {
          m.binaries.push_back(v);
        }
      }
    }
  }
  return m;
}

std::string WriteLp(const LpModel& model) {
  std::ostringstream out;
  out << "\\ " << model.comment << '\n';
  out << "Minimize\n obj:";
  WriteTerms(out, model.objective);
  out << "\nSubject To\n";
  for (const LpRow& row : model.rows) {
    out << ' ' << row.name << ':';
    WriteTerms(out, row.terms);
    out << ' ' << SenseText(row.sense) << ' ' << row.rhs << '\n';
  }
  if (!model.bounded.empty()) {
    out << "Bounds\n";
    for (const std::string& v : model.bounded) out << " 0 <= " << v << " <= 1\n";
  }
  if (!model.binaries.empty()) {
    out << "Binaries";
    WriteNames(out, model.binaries);
  }
  out << "End\n";
  return out.str();
}

std::string WriteLp(const ModelSpec& spec) { return WriteLp(BuildModel(spec)); }

LpAssignment AssignmentFromPair(const SchedulePair& pair) {
  LpAssignment values;
  for (int i = 0; i < pair.first.size(); ++i) {
    values[Var('x', i + 1, pair.first[i] + 1)] = 1;
    values[Var('y', i + 1, pair.second[i] + 1)] = 1;
    if (pair.first[i] == pair.second[i]) {
      values[Var('z', i + 1, pair.first[i] + 1)] = 1;
    }
  }
  return values;
}

namespace {

std::int64_t Evaluate(const std::vector<LpTerm>& terms,
                      const LpAssignment& values) {
  std::int64_t total = 0;
  for (const LpTerm& t : terms) {
    auto it = values.find(t.var);
    if (it != values.end()) total += t.coef * it->second;
  }
  return total;
}

}  // namespace

std::int64_t ObjectiveAt(const LpModel& model, const LpAssignment& values) {
  return Evaluate(model.objective, values);
}

std::vector<std::string> ViolatedRows(const LpModel& model,
                                      const LpAssignment& values) {
  std::vector<std::string> violated;
  for (const LpRow& row : model.rows) {
    const std::int64_t lhs = Evaluate(row.terms, values);
    bool ok = true;
    switch (row.sense) {
      case RowSense::kEqual:
        ok = lhs == row.rhs;
        break;
      case RowSense::kLessEqual:
        ok = lhs <= row.rhs;
        break;
      case RowSense::kGreaterEqual:
        ok = lhs >= row.rhs;
        break;
    }
    if (!ok) violated.push_back(row.name);
  }
  return violated;
}

}  // namespace rrsched
