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

// Plain-text instance format:
//
//   5
//   5 3 5 1 2
//   4 1 9 5 6
//
// Line 1 is the job count n, line 2 the first-stage durations, line 3 the
// second-stage durations, ASCII decimal and newline terminated. A file may
// hold several instances back to back; blank lines between them are
// ignored.

#ifndef RRSCHED_INSTANCE_IO_H_
#define RRSCHED_INSTANCE_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rrsched/core.h"

namespace rrsched {

std::string FormatInstance(const Instance& inst);
void WriteInstance(std::ostream& out, const Instance& inst);

// Throws ParseError on malformed text, RangeError on invalid durations.
std::vector<Instance> ReadInstances(std::istream& in);
std::vector<Instance> ParseInstances(std::string_view text);
Instance ParseInstance(std::string_view text);

std::vector<Instance> LoadInstances(const std::string& path);

}  // namespace rrsched

#endif  // RRSCHED_INSTANCE_IO_H_
