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

#ifndef RRSCHED_ERRORS_H_
#define RRSCHED_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rrsched {

// Vector lengths or permutation sizes do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An index, delta or duration lies outside its admissible range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A closed form or operation is not defined for the given arguments.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A solver refused to run because its work estimate exceeds the budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rrsched

#endif  // RRSCHED_ERRORS_H_
