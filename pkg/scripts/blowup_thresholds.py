#!/usr/bin/env python3
"""Sweep the odd-cycle blowup families and print their sigma thresholds.

For each blob size t this reports, exactly: the identity value
2(dbar+1) - n on the five-cycle blowup (equal to (4t+1)/(2t+3)), and the
critical sigma where the degree-sum bound crosses the independence number
(2 for the five-cycle family, 3 for the seven-cycle family).  The crossings
drift toward 3/4 and 1, which is what makes these families the obstruction
frontier for any extension past sigma = 1/2.

Usage: python scripts/blowup_thresholds.py [t_max] [--json]
"""

import json
import sys
from fractions import Fraction

from tlab import c5_blowup, c7_blowup, critical_sigma, degree_stats


def main(argv):
    t_max = 20
    as_json = "--json" in argv
    positional = [a for a in argv if not a.startswith("-")]
    if positional:
        t_max = int(positional[0])
    precision = Fraction(1, 4096)
    for t in range(1, t_max + 1):
        g5 = c5_blowup(t)
        g7 = c7_blowup(t)
        s = degree_stats(g5)
        identity = 2 * (s.avg_degree + 1) - g5.n
        row = {
            "t": t,
            "identity": str(identity),
            "identity_expected": str(Fraction(4 * t + 1, 2 * t + 3)),
            "sigma5": str(critical_sigma(g5, 2, precision)),
            "sigma7": str(critical_sigma(g7, 3, precision)),
        }
        if as_json:
            print(json.dumps(row, sort_keys=True))
        else:
            print(f"t={t:3d}  2(d+1)-n = {row['identity']:>10s}  "
                  f"sigma*(C5 blowup) = {float(Fraction(row['sigma5'])):.5f}  "
                  f"sigma*(C7 blowup) = {float(Fraction(row['sigma7'])):.5f}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
