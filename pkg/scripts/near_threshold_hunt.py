#!/usr/bin/env python3
"""Hunt for K_{r+1}-free graphs hugging the stability edge threshold.

Walks the exhaustive labeled corpus (n <= 7) and records, for each (n, r),
the gate-passing graphs whose edge count sits closest to
(1 - 1/r) n^2/2 - sigma n/2, together with their best stability witness.
These near-threshold graphs are the empirical material for guessing the
extremal examples (the five-cycle blowups show up in the complements).

Usage: python scripts/near_threshold_hunt.py [n_max] [--r R] [--sigma p/q]
"""

import json
import sys
from fractions import Fraction

from tlab import (
    clique_number,
    edge_threshold,
    encode_graph6,
    find_stability_witness,
)
from tlab.corpus import enumerate_labeled_graphs
from tlab.records import fmt_rational


def main(argv):
    n_max = 6
    r = 2
    sigma = Fraction(1, 2)
    args = list(argv)
    while args:
        a = args.pop(0)
        if a == "--r":
            r = int(args.pop(0))
        elif a == "--sigma":
            sigma = Fraction(args.pop(0))
        else:
            n_max = int(a)
    for n in range(3, n_max + 1):
        threshold = edge_threshold(n, r, sigma)
        best_gap = None
        rows = []
        for g in enumerate_labeled_graphs(n):
            m = g.edge_count()
            if m <= threshold or clique_number(g) > r:
                continue
            gap = Fraction(m) - threshold
            if best_gap is None or gap < best_gap:
                best_gap, rows = gap, []
            if gap == best_gap:
                witness = find_stability_witness(g, sigma)
                rows.append({
                    "graph": encode_graph6(g),
                    "edges": m,
                    "witness": list(witness.I) if witness else None,
                    "complete_count": witness.complete_count if witness else 0,
                })
        print(json.dumps({
            "n": n, "r": r, "sigma": fmt_rational(sigma),
            "threshold": fmt_rational(threshold),
            "gap": fmt_rational(best_gap) if best_gap is not None else None,
            "tightest": rows[:16],
            "tightest_count": len(rows),
        }, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
