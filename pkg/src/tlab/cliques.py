"""Maximal-clique enumeration, clique numbers, and simplicial-vertex checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .graphs import Graph, bits, set_of


@dataclass(frozen=True)
class CliqueSet:
    """All inclusion-maximal cliques of one graph, lexicographically sorted."""

    cliques: tuple[tuple[int, ...], ...]
    source_n: int


def _maximal_clique_masks(n: int, adj: tuple[int, ...]) -> list[int]:
    """Bron-Kerbosch with pivoting on bitmask rows."""
    out: list[int] = []

    def bk(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        # pivot: vertex of p|x with the most neighbors in p
        pivot, best = -1, -1
        for u in bits(p | x):
            cnt = (p & adj[u]).bit_count()
            if cnt > best:
                pivot, best = u, cnt
        for v in bits(p & ~adj[pivot]):
            vb = 1 << v
            bk(r | vb, p & adj[v], x & adj[v])
            p &= ~vb
            x |= vb

    bk(0, (1 << n) - 1, 0)
    return out


def maximal_cliques(g: Graph) -> CliqueSet:
    if g.n < 1:
        raise ValueError("need at least one vertex")
    found = [set_of(m) for m in _maximal_clique_masks(g.n, g.adj)]
    found.sort()
    return CliqueSet(tuple(found), g.n)


def _greedy_color_bound(cand: int, adj: tuple[int, ...]) -> int:
    """Number of greedy color classes covering ``cand``: an upper bound on
    the largest clique inside it."""
    colors = 0
    while cand:
        colors += 1
        avail = cand
        while avail:
            low = avail & -avail
            cand ^= low
            avail &= ~adj[low.bit_length() - 1] & ~low
    return colors


def clique_number(g: Graph) -> int:
    """Exact clique number by branch and bound with a greedy coloring bound."""
    if g.n < 1:
        raise ValueError("need at least one vertex")
    adj = g.adj
    best = 0

    def dfs(cand: int, size: int):
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        if size + _greedy_color_bound(cand, adj) <= best:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        dfs(cand & adj[v], size + 1)
        dfs(cand ^ low, size)

    dfs(g.full_mask, 0)
    return best


def max_weight_clique(g: Graph, weights) -> tuple[tuple[int, ...], Fraction]:
    """A maximum-weight clique and its exact weight.

    Negative-weight vertices are discarded up front: removing one from any
    clique never lowers the weight, so the maximum over the rest is the
    maximum over all cliques.  Ties go to the lexicographically smallest
    vertex set (the empty clique has weight 0).
    """
    weights = [Fraction(w) for w in weights]
    if len(weights) != g.n:
        raise ValueError("weight count does not match vertex count")
    scale = lcm(*(w.denominator for w in weights)) if weights else 1
    nums = [int(w * scale) for w in weights]
    adj = g.adj
    live = 0
    for v, num in enumerate(nums):
        if num >= 0:
            live |= 1 << v
    best_num = 0
    best_mask = 0

    def cand_sum(cand: int) -> int:
        s = 0
        while cand:
            low = cand & -cand
            s += nums[low.bit_length() - 1]
            cand ^= low
        return s

    def dfs(cand: int, cur: int, mask: int):
        nonlocal best_num, best_mask
        if cur > best_num:
            best_num, best_mask = cur, mask
        if not cand or cur + cand_sum(cand) <= best_num:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        dfs(cand & adj[v], cur + nums[v], mask | low)
        dfs(cand ^ low, cur, mask)

    dfs(live, 0, 0)
    return set_of(best_mask), Fraction(best_num, scale)


def _simplicial_mask(n: int, adj: tuple[int, ...]) -> int:
    mask = 0
    for v in range(n):
        nb = adj[v]
        ok = True
        rest = nb
        while rest:
            low = rest & -rest
            if nb & ~adj[low.bit_length() - 1] & ~low:
                ok = False
                break
            rest ^= low
        if ok:
            mask |= 1 << v
    return mask


def simplicial_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices whose open neighborhood is pairwise adjacent (degree 0 and 1
    vertices qualify)."""
    return set_of(_simplicial_mask(g.n, g.adj))


@dataclass(frozen=True)
class SimplicialCliqueReport:
    ok: bool
    witness: tuple[int, ...] | None
    witness_simplicial_count: int | None
    witness_allowance: Fraction | None


def simplicial_clique_condition(g: Graph, sigma) -> SimplicialCliqueReport:
    """Does every clique K hold at most (1-sigma)(|K|-sigma) simplicial vertices?

    For sigma = 0 the condition is vacuous.  For sigma > 0 the binding cliques
    are sets of pairwise-adjacent simplicial vertices (padding a clique with
    non-simplicial vertices only raises the allowance), so the condition holds
    iff the graph has no simplicial vertex; the reported witness is a minimal
    literally-violating clique.
    """
    sigma = Fraction(sigma)
    if not 0 <= sigma <= Fraction(1, 2):
        raise ValueError("sigma must lie in [0, 1/2]")
    if sigma == 0:
        return SimplicialCliqueReport(True, None, None, None)
    simp = _simplicial_mask(g.n, g.adj)
    if not simp:
        return SimplicialCliqueReport(True, None, None, None)
    v = (simp & -simp).bit_length() - 1
    return SimplicialCliqueReport(False, (v,), 1, (1 - sigma) * (1 - sigma))
