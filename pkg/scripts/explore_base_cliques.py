#!/usr/bin/env python3
"""Dump base-clique contexts and the two averaging inequalities as JSON lines.

Reads graph6 lines from files or stdin and, for every base clique of every
graph, emits one record with the context (K, A, U, ell, D, delta) and the
exact two sides of the per-vertex and clique-averaged slack inequalities
under the default cap weights.  Handy for eyeballing how much slack real
graphs leave versus the knife-edge cases in the proofs.

Usage: python scripts/explore_base_cliques.py [FILE.g6 ...]
"""

import fileinput
import json
import sys

from tlab import (
    base_clique_context,
    base_cliques,
    eval_averaging_inequality,
    eval_single_lost_color,
    parse_graph6,
)
from tlab.records import fmt_rational


def main():
    for line in fileinput.input():
        line = line.strip()
        if not line:
            continue
        g = parse_graph6(line)
        for clique in base_cliques(g):
            ctx = base_clique_context(g, clique)
            per_vertex = {}
            for v in clique:
                lhs, rhs = eval_single_lost_color(g, clique, v)
                per_vertex[str(v)] = {"lhs": fmt_rational(lhs), "rhs": fmt_rational(rhs)}
            alhs, arhs = eval_averaging_inequality(g, clique)
            print(json.dumps({
                "graph": line,
                "context": ctx.to_json(),
                "single_lost_color": per_vertex,
                "averaging": {"lhs": fmt_rational(alhs), "rhs": fmt_rational(arhs)},
            }, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
