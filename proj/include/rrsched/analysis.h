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

// Worst-case instances for the identical-schedule bound.
//
// With p and q sorted, an instance is determined by how first-stage values
// are matched to second-stage values. Matching the smallest p with the
// largest q, the second smallest with the second largest and so on
// ("fully crossed") maximizes UB / LB. The 0-1 family below drives that
// ratio to 2 as n grows.

#ifndef RRSCHED_ANALYSIS_H_
#define RRSCHED_ANALYSIS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "rrsched/core.h"

namespace rrsched {

using Rational = boost::rational<std::int64_t>;

std::string ToString(const Rational& r);

struct RatioReport {
  int n = 0;
  int delta = 0;
  Rational gamma;
  Value ub = 0;
  Value lb = 0;
  std::optional<Value> opt;
  Rational ratio_ub_lb;
  std::optional<Rational> ratio_ub_opt;
};

// Half zero, half one durations, fully crossed. For odd n the middle job
// is (0, 1).
Instance GenFullyCrossed01(int n);

// Job j gets p_sorted[j] and q_sorted[n - 1 - j]. Throws DomainError when an
// input is not sorted non-decreasingly, DimensionError on length mismatch.
Instance GenFullyCrossed(std::span<const Duration> p_sorted,
                         std::span<const Duration> q_sorted);

// Swaps the second-stage durations of jobs j1 and j2 (0-based).
Instance CrossPair(const Instance& inst, JobId j1, JobId j2);

// UB / LB on GenFullyCrossed01(n): (2n + 2) / (n + 2) for even n,
// 2n / (n + 1) for odd n.
Rational RatioClosedForm(int n);

// Optimal value of GenFullyCrossed01(n) at delta when n - delta is even:
// (n^2 + delta^2 + 2n) / 4. Throws DomainError otherwise.
Value VStar01(int n, int delta);

// 2 / (1 + gamma^2), the limit of UB / OPT on the 0-1 family at
// delta = gamma * n. Throws DomainError outside [0, 1].
Rational LimitingRatio(const Rational& gamma);

// Positions n, n-1, ..., 1 receive alternately the largest and the smallest
// unassigned job.
Permutation TwoApproxCertificate(int n);

// max{2j - n - 1, n + 1 - 2j} for the 1-based job j: the least 1-based
// position job j may take in a factor-2 dual certificate.
int CertificateMinPosition(int n, int job);

RatioReport MakeRatioReport(const Instance& inst, int delta,
                            std::optional<Value> opt);

// Reports for GenFullyCrossed01(n), n = 1..n_max, every delta in [0, n].
std::vector<RatioReport> RatioCurve01(int n_max);

// Columns: n,delta,gamma_num,gamma_den,ub,lb,opt,ub_over_lb,ub_over_opt.
void WriteRatioCsv(std::ostream& out, std::span<const RatioReport> reports);

}  // namespace rrsched

#endif  // RRSCHED_ANALYSIS_H_
