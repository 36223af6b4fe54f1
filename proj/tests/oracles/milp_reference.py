# Copyright 2026 The relsvet Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent reference for the minimal J penalty, written as one MILP.

Shares no code with the C++ library. Binary variables pick the subinterval
of every entry (or of every linkage group below the gap); HiGHS solves the
rest. Usage:

    milp_reference.py --emit frozen_milp.json   # regenerate the frozen table
    milp_reference.py --check frozen_milp.json  # recompute and compare
"""

import argparse
import itertools
import json
import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

CONTEXT = {1: (0, 0, 1), 2: (0, 1, 0), 3: (1, 0, 0), 4: (1, 1, 0),
           5: (1, 0, 1), 6: (0, 1, 1), 7: (0, 0, 0), 8: (1, 1, 1)}
SIGN = {label: (1 if label <= 6 else -1) for label in CONTEXT}

# Columns: 0 m1 = p(++) of parties (2,3), 1 m2 = (1,2), 2 m3 = (1,3),
# 3..5 single-party p(+) for parties 1..3 (0-based indices below).


def linkage_groups():
    """(direction, members) with direction ('single', k) or ('pair', (a, b))."""
    groups = []
    for k, col in [(0, 3), (1, 4), (2, 5)]:
        for v in (0, 1):
            groups.append((("single", k), [(l, col) for l in CONTEXT if CONTEXT[l][k] == v]))
    for (a, b), col in [((1, 2), 0), ((0, 1), 1), ((0, 2), 2)]:
        for va in (0, 1):
            for vb in (0, 1):
                members = [(l, col) for l in CONTEXT if CONTEXT[l][a] == va and CONTEXT[l][b] == vb]
                groups.append((("pair", (a, b)), members))
    return groups


# Directions each restricted scenario leaves open. A single-party group of
# party k is moved by the other two parties; a pair group by the third party.
OPEN = {
    "simultaneous": None,
    "send": [("pair", (0, 1)), ("single", 0), ("single", 1)],
    "receive": [("single", 2), ("pair", (1, 2)), ("pair", (0, 2))],
}


def permitted(direction, scenario):
    return OPEN[scenario] is None or direction in OPEN[scenario]


def solve(I, S, scenario):
    groups = linkage_groups()
    n_m, n_c = 48, 8
    below = S < 1 - 2 * I
    n_b = len(groups) if below else n_m
    n = n_m + n_c + n_b

    def mi(label, col):
        return (label - 1) * 6 + col

    def ci(label):
        return n_m + label - 1

    group_of = {}
    for g, (_, members) in enumerate(groups):
        for e in members:
            group_of[e] = g

    rows, lo, hi = [], [], []

    def row(coefs, lower, upper):
        r = np.zeros(n)
        for k, v in coefs.items():
            r[k] += v
        rows.append(r)
        lo.append(lower)
        hi.append(upper)

    for label in CONTEXT:
        for col in range(6):
            b = n_m + n_c + (group_of[(label, col)] if below else mi(label, col))
            row({mi(label, col): 1, b: -1}, -np.inf, I)          # b = 0 -> m <= I
            row({mi(label, col): 1, b: -(1 - I)}, 0, np.inf)     # b = 1 -> m >= 1 - I
    for direction, members in groups:
        s = S if permitted(direction, scenario) else 0.0
        for a, b in itertools.combinations(members, 2):
            row({mi(*a): 1, mi(*b): -1}, -s, s)

    objective = np.zeros(n)
    for label in CONTEXT:
        m = [mi(label, col) for col in range(6)]
        c = ci(label)
        # Joint probabilities from (c = p(+++), pairs, singles), all >= 0.
        for coefs in ({c: 1}, {m[1]: 1, c: -1}, {m[2]: 1, c: -1}, {m[0]: 1, c: -1},
                      {m[3]: 1, m[1]: -1, m[2]: -1, c: 1},
                      {m[4]: 1, m[0]: -1, m[1]: -1, c: 1},
                      {m[5]: 1, m[0]: -1, m[2]: -1, c: 1}):
            row(coefs, 0, np.inf)
        row({m[3]: -1, m[4]: -1, m[5]: -1, m[0]: 1, m[1]: 1, m[2]: 1, c: -1}, -1, np.inf)
        # correlator = 8c - 1 + 2(singles) - 4(pairs)
        objective[c] += 8 * SIGN[label]
        for col in (3, 4, 5):
            objective[m[col]] += 2 * SIGN[label]
        for col in (0, 1, 2):
            objective[m[col]] -= 4 * SIGN[label]

    integrality = np.zeros(n)
    integrality[n_m + n_c:] = 1
    res = milp(-objective, constraints=LinearConstraint(np.array(rows), lo, hi), integrality=integrality,
               bounds=Bounds(np.zeros(n), np.ones(n)), options={"mip_rel_gap": 0, "presolve": True})
    if res.status != 0:
        return None
    E = objective @ res.x - 4  # constant of the correlators: -6 + 2
    return (8 - E) / 2


def reference_points():
    pts = []
    for scenario in ("simultaneous", "send", "receive"):
        for I in (0.05, 0.15, 2 / 9, 0.23, 0.3, 0.45):
            for dS in (-0.01, 0.01):
                pts.append((I, 1 - 2 * I + dS, scenario))
    pts += [(0.1, 0.02, "simultaneous"), (0.1, 0.05, "simultaneous"), (0.1, 0.35, "simultaneous"),
            (0.3, 0.05, "simultaneous"), (0.3, 0.1, "simultaneous"), (0.45, 0.02, "simultaneous"),
            (0.45, 0.09, "simultaneous"), (0.05, 0.0, "simultaneous"), (0.3, 0.35, "simultaneous"),
            (0.2, 0.8, "simultaneous"), (2 / 9, 0.5456, "simultaneous"),
            (0.15, 0.6, "send"), (0.3, 0.2, "send"), (0.45, 0.09, "send"),
            (0.15, 0.6, "receive"), (0.4, 0.1, "receive"), (0.1, 0.0, "receive")]
    return pts


def main():
    ap = argparse.ArgumentParser()
    g = ap.add_mutually_exclusive_group(required=True)
    g.add_argument("--emit")
    g.add_argument("--check")
    args = ap.parse_args()
    if args.emit:
        table = [{"I": I, "S": S, "scenario": sc, "J": round(solve(I, S, sc), 9) + 0.0} for I, S, sc in reference_points()]
        with open(args.emit, "w") as f:
            json.dump(table, f, indent=1)
            f.write("\n")
        return 0
    with open(args.check) as f:
        table = json.load(f)
    bad = 0
    for row in table:
        J = solve(row["I"], row["S"], row["scenario"])
        ok = J is not None and abs(J - row["J"]) <= 1e-7
        bad += not ok
        print(f"{'ok ' if ok else 'BAD'} {row['scenario']:12s} I={row['I']:.6f} S={row['S']:.6f} "
              f"J={J} frozen={row['J']}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
