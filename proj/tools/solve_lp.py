#!/usr/bin/env python3
# Copyright 2026 The rrsched Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Solves an LP file written by `rrsched export-mip` with SciPy's HiGHS.

Only the subset of the LP format that the exporter emits is understood.
Prints the optimal objective value; with --expect, exits nonzero when the
value differs by more than 1e-6.
"""

import argparse
import re
import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

TERM = re.compile(r"([+-])?\s*(\d+)?\s*([A-Za-z_][A-Za-z0-9_]*)")


def parse_terms(text):
    terms = []
    for sign, coef, name in TERM.findall(text):
        value = int(coef) if coef else 1
        terms.append((-value if sign == "-" else value, name))
    return terms


def parse(path):
    section = None
    objective, rows, bounded, binaries = [], [], [], []
    pending = ""
    for raw in open(path, encoding="ascii"):
        line = raw.rstrip("\n")
        if line.startswith("\\"):
            continue
        head = line.strip()
        if head in ("Minimize", "Subject To", "Bounds", "Binaries", "End"):
            section = head
            continue
        if section == "Minimize":
            objective += parse_terms(head.split(":", 1)[-1])
        elif section == "Subject To":
            pending += " " + head
            match = re.search(r"(<=|>=|=)\s*(-?\d+)\s*$", pending)
            if match:
                body = pending.split(":", 1)[1][: -len(match.group(0))]
                rows.append((parse_terms(body), match.group(1), int(match.group(2))))
                pending = ""
        elif section == "Bounds":
            bounded.append(head.split()[2])
        elif section == "Binaries":
            binaries += head.split()
    return objective, rows, bounded, binaries


def solve(path):
    objective, rows, bounded, binaries = parse(path)
    names = sorted({n for _, n in objective} | {n for t, _, _ in rows for _, n in t}
                   | set(bounded) | set(binaries))
    index = {n: k for k, n in enumerate(names)}
    c = np.zeros(len(names))
    for coef, name in objective:
        c[index[name]] += coef
    a = np.zeros((len(rows), len(names)))
    lo = np.full(len(rows), -np.inf)
    hi = np.full(len(rows), np.inf)
    for r, (terms, sense, rhs) in enumerate(rows):
        for coef, name in terms:
            a[r, index[name]] += coef
        if sense in ("=", ">="):
            lo[r] = rhs
        if sense in ("=", "<="):
            hi[r] = rhs
    integrality = np.zeros(len(names))
    for name in binaries:
        integrality[index[name]] = 1
    result = milp(c, constraints=LinearConstraint(a, lo, hi),
                  bounds=Bounds(0, 1), integrality=integrality)
    if not result.success:
        raise RuntimeError(result.message)
    return result.fun


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("lp")
    parser.add_argument("--expect", type=float)
    args = parser.parse_args()
    value = solve(args.lp)
    print(f"{value:.6f}")
    if args.expect is not None and abs(value - args.expect) > 1e-6:
        print(f"expected {args.expect}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
