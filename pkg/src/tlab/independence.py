"""Exact independence number, independent-set streaming, and chromatic number."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits, set_of

DEFAULT_ENUM_CAP = 20


@dataclass(frozen=True)
class AlphaResult:
    alpha: int
    witness: tuple[int, ...]


def _alpha_core(n: int, adj: tuple[int, ...]) -> tuple[int, int]:
    """(alpha, witness mask) by branch and bound on bitmask rows.

    The bound is a greedy clique cover of the candidate set; branching takes
    the lowest candidate vertex first, so with strict improvement the witness
    is the lexicographically smallest maximum independent set.
    """
    best = 0
    best_mask = 0

    def cover_bound(cand: int) -> int:
        cnt = 0
        while cand:
            cnt += 1
            low = cand & -cand
            allowed = cand & adj[low.bit_length() - 1]
            cand ^= low
            while allowed:
                wl = allowed & -allowed
                cand ^= wl
                allowed &= adj[wl.bit_length() - 1]
        return cnt

    def dfs(cand: int, size: int, mask: int):
        nonlocal best, best_mask
        if size > best:
            best, best_mask = size, mask
        if not cand:
            return
        if size + cover_bound(cand) <= best:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        dfs(cand & ~adj[v] & ~low, size + 1, mask | low)
        dfs(cand ^ low, size, mask)

    dfs((1 << n) - 1, 0, 0)
    return best, best_mask


def alpha_exact(g: Graph) -> AlphaResult:
    """Exact independence number with a witness set."""
    a, mask = _alpha_core(g.n, g.adj)
    return AlphaResult(a, set_of(mask))


def enumerate_independent_sets(g: Graph, max_n: int = DEFAULT_ENUM_CAP):
    """Yield every independent set exactly once, the empty set first.

    Sets come out in depth-first order over ascending vertex extensions, i.e.
    lexicographic order of the sorted vertex tuples.
    """
    if g.n > max_n:
        raise ValueError(
            f"n={g.n} exceeds the enumeration cap {max_n}; pass max_n explicitly to raise it"
        )
    adj = g.adj

    def rec(cur: tuple[int, ...], cand: int):
        yield cur
        for v in bits(cand):
            keep = cand & ~((1 << (v + 1)) - 1) & ~adj[v]
            yield from rec(cur + (v,), keep)

    yield from rec((), g.full_mask)


def chromatic_number_exact(g: Graph, max_n: int = DEFAULT_ENUM_CAP) -> int:
    """Exact chromatic number: iterative deepening on k-colorability with
    saturation-ordered backtracking."""
    if g.n > max_n:
        raise ValueError(
            f"n={g.n} exceeds the coloring cap {max_n}; pass max_n explicitly to raise it"
        )
    n, adj = g.n, g.adj
    if n == 0:
        return 0
    if not any(adj):
        return 1
    degrees = [row.bit_count() for row in adj]

    def colorable(k: int) -> bool:
        color = [-1] * n
        neighbor_colors = [0] * n  # bitmask of colors seen on neighbors

        def place(done: int, used: int) -> bool:
            if done == n:
                return True
            v = max(
                (u for u in range(n) if color[u] < 0),
                key=lambda u: (neighbor_colors[u].bit_count(), degrees[u], -u),
            )
            limit = min(k, used + 1)  # at most one brand-new color
            for c in range(limit):
                if neighbor_colors[v] >> c & 1:
                    continue
                color[v] = c
                touched = []
                for u in bits(adj[v]):
                    if not neighbor_colors[u] >> c & 1:
                        neighbor_colors[u] |= 1 << c
                        touched.append(u)
                if place(done + 1, max(used, c + 1)):
                    return True
                color[v] = -1
                for u in touched:
                    neighbor_colors[u] &= ~(1 << c)
            return False

        return place(0, 0)

    for k in range(2, n + 1):
        if colorable(k):
            return k
    return n
