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

#include "rrsched/analysis.h"

#include <algorithm>
#include <ostream>
#include <string>

#include "rrsched/approx.h"
#include "rrsched/errors.h"
#include "rrsched/exact.h"

namespace rrsched {

std::string ToString(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Instance GenFullyCrossed01(int n) {
  if (n < 1) throw RangeError("n must be positive");
  // Sorted columns: p has ceil(n/2) zeros, q has floor(n/2) zeros.
  std::vector<Duration> p_sorted(n, 1);
  std::vector<Duration> q_sorted(n, 1);
  std::fill_n(p_sorted.begin(), (n + 1) / 2, 0);
  std::fill_n(q_sorted.begin(), n / 2, 0);
  return GenFullyCrossed(p_sorted, q_sorted);
}

Instance GenFullyCrossed(std::span<const Duration> p_sorted,
                         std::span<const Duration> q_sorted) {
  if (p_sorted.size() != q_sorted.size()) {
    throw DimensionError("sorted p and q differ in length");
  }
  if (!std::is_sorted(p_sorted.begin(), p_sorted.end()) ||
      !std::is_sorted(q_sorted.begin(), q_sorted.end())) {
    throw DomainError("fully crossed construction needs sorted inputs");
  }
  const size_t n = p_sorted.size();
  std::vector<Duration> p(p_sorted.begin(), p_sorted.end());
  std::vector<Duration> q(n);
  for (size_t j = 0; j < n; ++j) q[j] = q_sorted[n - 1 - j];
  return Instance(std::move(p), std::move(q));
}

Instance CrossPair(const Instance& inst, JobId j1, JobId j2) {
  const int n = inst.n();
  if (j1 < 0 || j1 >= n || j2 < 0 || j2 >= n) {
    throw RangeError("job index outside 1.." + std::to_string(n));
  }
  if (j1 == j2) throw DomainError("crossing needs two distinct jobs");
  std::vector<Duration> p(inst.p().begin(), inst.p().end());
  std::vector<Duration> q(inst.q().begin(), inst.q().end());
  std::swap(q[j1], q[j2]);
  return Instance(std::move(p), std::move(q));
}

Rational RatioClosedForm(int n) {
  if (n < 1) throw RangeError("n must be positive");
  if (n % 2 == 0) return Rational(2 * n + 2, n + 2);
  return Rational(2 * n, n + 1);
}

Value VStar01(int n, int delta) {
  if (n < 1 || delta < 0 || delta > n) {
    throw RangeError("need 0 <= delta <= n with n >= 1");
  }
  if ((n - delta) % 2 != 0) {
    throw DomainError("closed form only holds for even n - delta");
  }
  const Value nn = n;
  const Value d = delta;
  return (nn * nn + d * d + 2 * nn) / 4;
}

Rational LimitingRatio(const Rational& gamma) {
  if (gamma < 0 || gamma > 1) throw DomainError("gamma outside [0, 1]");
  return Rational(2) / (1 + gamma * gamma);
}

Permutation TwoApproxCertificate(int n) {
  if (n < 1) throw RangeError("n must be positive");
  std::vector<JobId> slots(n);
  JobId low = 0;
  JobId high = n - 1;
  bool take_high = true;
  for (int pos = n - 1; pos >= 0; --pos) {
    slots[pos] = take_high ? high-- : low++;
    take_high = !take_high;
  }
  return Permutation(std::move(slots));
}

int CertificateMinPosition(int n, int job) {
  return std::max(2 * job - n - 1, n + 1 - 2 * job);
}

RatioReport MakeRatioReport(const Instance& inst, int delta,
                            std::optional<Value> opt) {
  CheckDelta(inst, delta);
  RatioReport r;
  r.n = inst.n();
  r.delta = delta;
  r.gamma = Rational(delta, inst.n());
  r.ub = UpperBound(inst).value;
  r.lb = LowerBound(inst).value;
  if (r.lb == 0) throw DomainError("UB / LB undefined for LB = 0");
  r.ratio_ub_lb = Rational(r.ub, r.lb);
  r.opt = opt;
  if (opt) {
    if (*opt == 0) throw DomainError("UB / OPT undefined for OPT = 0");
    r.ratio_ub_opt = Rational(r.ub, *opt);
  }
  return r;
}

std::vector<RatioReport> RatioCurve01(int n_max) {
  std::vector<RatioReport> out;
  for (int n = 1; n <= n_max; ++n) {
    const Instance inst = GenFullyCrossed01(n);
    for (int delta = 0; delta <= n; ++delta) {
      out.push_back(
          MakeRatioReport(inst, delta, ExactBounded(inst, delta).value));
    }
  }
  return out;
}

void WriteRatioCsv(std::ostream& out, std::span<const RatioReport> reports) {
  out << "n,delta,gamma_num,gamma_den,ub,lb,opt,ub_over_lb,ub_over_opt\n";
  for (const RatioReport& r : reports) {
    out << r.n << ',' << r.delta << ',' << r.gamma.numerator() << ','
        << r.gamma.denominator() << ',' << r.ub << ',' << r.lb << ',';
    if (r.opt) out << *r.opt;
    out << ',' << ToString(r.ratio_ub_lb) << ',';
    if (r.ratio_ub_opt) out << ToString(*r.ratio_ub_opt);
    out << '\n';
  }
}

}  // namespace rrsched
