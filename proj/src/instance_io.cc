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

#include "rrsched/instance_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rrsched/errors.h"

namespace rrsched {
namespace {

std::vector<long long> ParseNumbers(const std::string& line, int line_no) {
  std::vector<long long> values;
  const char* it = line.data();
  const char* end = line.data() + line.size();
  while (true) {
    while (it != end && (*it == ' ' || *it == '\t' || *it == '\r')) ++it;
    if (it == end) break;
    long long v = 0;
    auto [next, ec] = std::from_chars(it, end, v);
    if (ec != std::errc() ||
        (next != end && *next != ' ' && *next != '\t' && *next != '\r')) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected an integer, got '" + line + "'");
    }
    values.push_back(v);
    it = next;
  }
  return values;
}

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

std::string FormatInstance(const Instance& inst) {
  std::ostringstream out;
  WriteInstance(out, inst);
  return out.str();
}

void WriteInstance(std::ostream& out, const Instance& inst) {
  out << inst.n() << '\n';
  for (auto row : {inst.p(), inst.q()}) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
}

std::vector<Instance> ReadInstances(std::istream& in) {
  std::vector<Instance> out;
  std::string line;
  int line_no = 0;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) {
      throw ParseError("unexpected end of input, expected " +
                       std::string(what));
    }
    ++line_no;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    auto header = ParseNumbers(line, line_no);
    if (header.size() != 1 || header[0] < 1) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected a positive job count");
    }
    const auto n = static_cast<size_t>(header[0]);
    std::vector<Duration> rows[2];
    for (int r = 0; r < 2; ++r) {
      next_line(r == 0 ? "first-stage durations" : "second-stage durations");
      auto values = ParseNumbers(line, line_no);
      if (values.size() != n) {
        throw ParseError("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(n) + " durations, got " +
                         std::to_string(values.size()));
      }
      rows[r].assign(values.begin(), values.end());
    }
    out.emplace_back(std::move(rows[0]), std::move(rows[1]));
  }
  return out;
}

std::vector<Instance> ParseInstances(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ReadInstances(in);
}

Instance ParseInstance(std::string_view text) {
  auto all = ParseInstances(text);
  if (all.size() != 1) {
    throw ParseError("expected exactly one instance, found " +
                     std::to_string(all.size()));
  }
  return std::move(all.front());
}

std::vector<Instance> LoadInstances(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return ReadInstances(in);
}

}  // namespace rrsched
