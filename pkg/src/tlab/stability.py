"""Local Turan stability: thresholds, exhaustive witness search, peeling."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import records
from .cliques import clique_number
from .graphs import Graph, bits, encode_graph6, induced_subgraph, mask_of, set_of
from .independence import DEFAULT_ENUM_CAP, chromatic_number_exact, enumerate_independent_sets
from .records import VerificationRecord, fmt_rational

HALF = Fraction(1, 2)


def edge_threshold(n: int, r: int, sigma) -> Fraction:
    """(1 - 1/r) n^2/2 - sigma n/2: the edge count the stability theorem asks
    to be strictly exceeded."""
    sigma = Fraction(sigma)
    if r < 1 or n < 1:
        raise ValueError("need n >= 1 and r >= 1")
    if not 0 <= sigma <= HALF:
        raise ValueError("sigma must lie in [0, 1/2]")
    return (1 - Fraction(1, r)) * Fraction(n * n, 2) - sigma * Fraction(n, 2)


def corollary_edge_bound(n: int, r: int) -> Fraction:
    """(1 - 1/r) n^2/2 - n/(2r) + 1: the iterated-peeling colorability gate."""
    if r < 1 or n < 1:
        raise ValueError("need n >= 1 and r >= 1")
    return (1 - Fraction(1, r)) * Fraction(n * n, 2) - Fraction(n, 2 * r) + 1


@dataclass(frozen=True)
class StabilityWitness:
    I: tuple[int, ...]
    complete_count: int
    threshold: Fraction


def complete_count(g: Graph, iset_mask: int) -> int:
    """How many vertices of the set are adjacent to everything outside it."""
    outside = g.full_mask & ~iset_mask
    cnt = 0
    for v in bits(iset_mask):
        if not outside & ~g.adj[v]:
            cnt += 1
    return cnt


def find_stability_witness(g: Graph, sigma, max_n: int = DEFAULT_ENUM_CAP):
    """Search every nonempty independent set I for complete-count strictly
    above (1 - sigma)(|I| - sigma); None when nothing qualifies.

    The empty set is excluded: its threshold is negative for sigma > 0, which
    would make it a vacuous witness in every graph.  Among witnesses the one
    maximizing count - threshold wins, ties to the lexicographically first.
    """
    sigma = Fraction(sigma)
    if not 0 <= sigma <= HALF:
        raise ValueError("sigma must lie in [0, 1/2]")
    thresholds = [(1 - sigma) * (size - sigma) for size in range(g.n + 1)]
    best = None
    best_score = None
    for iset in enumerate_independent_sets(g, max_n):
        if not iset:
            continue
        cnt = complete_count(g, mask_of(iset))
        score = cnt - thresholds[len(iset)]
        if score > 0 and (best_score is None or score > best_score):
            best = StabilityWitness(iset, cnt, thresholds[len(iset)])
            best_score = score
    return best


def verify_stability_theorem(g: Graph, r: int, sigma, max_n: int = DEFAULT_ENUM_CAP) -> VerificationRecord:
    """K_{r+1}-free with more than (1-1/r)n^2/2 - sigma n/2 edges implies a
    stability witness; hypothesis failures short-circuit."""
    sigma = Fraction(sigma)
    g6 = encode_graph6(g) if g.n <= 62 else f"<n={g.n}>"
    params = {"r": r, "sigma": fmt_rational(sigma)}
    m = g.edge_count()
    if clique_number(g) > r or m <= edge_threshold(g.n, r, sigma):
        return VerificationRecord(g6, "stability", params, records.HYPOTHESIS_FAIL,
                                  {"edges": m})
    witness = find_stability_witness(g, sigma, max_n)
    if witness is None:
        return VerificationRecord(g6, "stability", params, records.COUNTEREXAMPLE,
                                  {"edges": m})
    return VerificationRecord(
        g6, "stability", params, records.OK,
        {"I": list(witness.I), "complete_count": witness.complete_count,
         "threshold": fmt_rational(witness.threshold)},
    )


def peel_coloring(g: Graph, r: int):
    """The constructive peeling behind the colorability corollary.

    Repeatedly find a vertex v whose non-neighborhood is independent, emit
    that non-neighborhood as a color class (v is complete to what remains),
    and recurse on N(v); an edgeless remainder is the final class.  Returns
    the classes, or None when no vertex qualifies or more than r classes
    would be needed.  v is the lexicographically smallest qualifying vertex.
    """
    classes: list[tuple[int, ...]] = []
    current = g
    labels = tuple(range(g.n))
    while True:
        if current.edge_count() == 0:
            if current.n:
                classes.append(tuple(labels[v] for v in range(current.n)))
            if len(classes) > r:
                return None
            return tuple(classes)
        pick = -1
        for v in range(current.n):
            nonnbrs = current.full_mask & ~current.adj[v]
            if all(not current.adj[u] & nonnbrs for u in bits(nonnbrs)):
                pick = v
                break
        if pick < 0 or len(classes) + 1 > r:
            return None
        nonnbrs = current.full_mask & ~current.adj[pick]
        classes.append(tuple(labels[v] for v in bits(nonnbrs)))
        keep = set_of(current.adj[pick])
        sub, mapping = induced_subgraph(current, keep)
        labels = tuple(labels[v] for v in mapping)
        current = sub


def verify_corollary(g: Graph, r: int, max_n: int = DEFAULT_ENUM_CAP) -> VerificationRecord:
    """K_{r+1}-free with at least (1-1/r)n^2/2 - n/(2r) + 1 edges implies the
    peeling succeeds within r classes and chi(G) <= r."""
    g6 = encode_graph6(g) if g.n <= 62 else f"<n={g.n}>"
    params = {"r": r}
    m = g.edge_count()
    if clique_number(g) > r or m < corollary_edge_bound(g.n, r):
        return VerificationRecord(g6, "corollary", params, records.HYPOTHESIS_FAIL,
                                  {"edges": m})
    classes = peel_coloring(g, r)
    chi = chromatic_number_exact(g, max_n)
    if classes is None or chi > r:
        return VerificationRecord(g6, "corollary", params, records.COUNTEREXAMPLE,
                                  {"edges": m, "chi": chi,
                                   "peeled": None if classes is None else [list(c) for c in classes]})
    return VerificationRecord(g6, "corollary", params, records.OK,
                              {"classes": [list(c) for c in classes], "chi": chi})
