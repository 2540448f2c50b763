"""Base cliques and the reweighting machinery built around them.

A base clique is a maximum-cardinality clique among the minimum-degree
vertices.  For a base clique K the context records: A, the outside vertices
complete to K; U, the remaining outside vertices with at least one neighbor
in K; ell, the number of neighbors each vertex of K has in U (uniform, since
every vertex of K has degree exactly delta = |K| - 1 + |A| + ell); and D, the
largest attachment |K meet N(u)| over u in U.

The two inequality evaluators return exact (lhs, rhs) pairs so the averaging
machinery can be explored on real graphs; neither side is a graph invariant
on its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import cap_weights, check_weights
from .cliques import _maximal_clique_masks, _simplicial_mask
from .graphs import Graph, bits, induced_subgraph, mask_of, set_of


@dataclass(frozen=True)
class BaseCliqueContext:
    K: tuple[int, ...]
    A: tuple[int, ...]
    U: tuple[int, ...]
    ell: int
    D: int
    delta: int

    def to_json(self) -> dict:
        return {
            "K": list(self.K),
            "A": list(self.A),
            "U": list(self.U),
            "ell": self.ell,
            "D": self.D,
            "delta": self.delta,
        }


def base_cliques(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All maximum-cardinality cliques of minimum-degree vertices.

    On an arbitrary graph these may overlap; callers pick explicitly.
    """
    if g.n < 1:
        raise ValueError("need at least one vertex")
    delta = min(row.bit_count() for row in g.adj)
    keep = [v for v in range(g.n) if g.adj[v].bit_count() == delta]
    sub, mapping = induced_subgraph(g, keep)
    masks = _maximal_clique_masks(sub.n, sub.adj)
    top = max(m.bit_count() for m in masks)
    found = sorted(tuple(mapping[v] for v in bits(m)) for m in masks if m.bit_count() == top)
    return tuple(found)


def base_clique_context(g: Graph, K) -> BaseCliqueContext:
    K = tuple(sorted(K))
    if K not in base_cliques(g):
        raise ValueError(f"{K} is not a base clique of this graph")
    kmask = mask_of(K)
    delta = min(row.bit_count() for row in g.adj)
    a_mask = 0
    u_mask = 0
    for v in range(g.n):
        vb = 1 << v
        if vb & kmask:
            continue
        hits = g.adj[v] & kmask
        if hits == kmask:
            a_mask |= vb
        elif hits:
            u_mask |= vb
    ell = delta + 1 - (kmask | a_mask).bit_count()
    for v in K:
        if (g.adj[v] & u_mask).bit_count() != ell:
            raise AssertionError("attachment count into U is not uniform over K")
    D = max(((g.adj[u] & kmask).bit_count() for u in bits(u_mask)), default=0)
    return BaseCliqueContext(K, set_of(a_mask), set_of(u_mask), ell, D, delta)


def f_K_weights(g: Graph, K) -> tuple[Fraction, ...]:
    """The reweighting of G - K: vertices simplicial there get 1/(d+1), the
    rest 1/(d+1/2).

    Weights are indexed by the induced-subgraph labeling of G - K (ascending
    original order).  The output always satisfies the main-theorem
    hypotheses on G - K.
    """
    kmask = mask_of(tuple(sorted(K)))
    rest = [v for v in range(g.n) if not (kmask >> v) & 1]
    sub, _ = induced_subgraph(g, rest)
    simp = _simplicial_mask(sub.n, sub.adj)
    out = []
    for v in range(sub.n):
        d = sub.adj[v].bit_count()
        if (simp >> v) & 1:
            out.append(Fraction(1, d + 1))
        else:
            out.append(Fraction(2, 2 * d + 1))
    return tuple(out)


def eval_single_lost_color(g: Graph, K, v: int, weights=None) -> tuple[Fraction, Fraction]:
    """Exact (lhs, rhs) of the per-vertex slack inequality at v in K.

    lhs = (ell + 1/2)/(delta + 3/2) - |K| / ((delta + 3/2)(delta + 1/2));
    rhs = sum of f over U minus the reweighted sum over U outside N(v).
    Defaults to the cap weights f = 1/(d + 1/2).
    """
    ctx = base_clique_context(g, K)
    if v not in ctx.K:
        raise ValueError(f"vertex {v} is not in the base clique")
    weights = cap_weights(g) if weights is None else check_weights(g, weights)
    # only the per-vertex caps matter for evaluation; the default caps
    # themselves can break the clique-sum condition (complete graphs)
    for u, w in enumerate(weights):
        if w > Fraction(2, 2 * g.degree(u) + 1):
            raise ValueError(f"weight at vertex {u} exceeds 1/(d+1/2)")
    half = Fraction(1, 2)
    lhs = (ctx.ell + half) / (ctx.delta + 3 * half) - Fraction(
        len(ctx.K)) / ((ctx.delta + 3 * half) * (ctx.delta + half))
    kmask = mask_of(ctx.K)
    rest = [u for u in range(g.n) if not (kmask >> u) & 1]
    sub_index = {u: i for i, u in enumerate(rest)}
    fk = f_K_weights(g, ctx.K)
    rhs = Fraction(0)
    for u in ctx.U:
        rhs += weights[u]
        if not g.has_edge(u, v):
            rhs -= fk[sub_index[u]]
    return lhs, rhs


def eval_averaging_inequality(g: Graph, K) -> tuple[Fraction, Fraction]:
    """Exact (lhs, rhs) of the clique-averaged slack inequality.

    lhs = ell + 1/2 - |K|/(delta + 1/2); rhs sums, over u in U with
    attachment a = |K meet N(u)|, the term
    (a(delta + 3/2 - |K|) + |K|/2) / (|K|(delta + 2 - a)).
    """
    ctx = base_clique_context(g, K)
    half = Fraction(1, 2)
    size = len(ctx.K)
    lhs = ctx.ell + half - Fraction(size) / (ctx.delta + half)
    kmask = mask_of(ctx.K)
    rhs = Fraction(0)
    for u in ctx.U:
        a = (g.adj[u] & kmask).bit_count()
        rhs += Fraction(2 * a * (2 * ctx.delta + 3 - 2 * size) + 2 * size,
                        4 * size * (ctx.delta + 2 - a))
    return lhs, rhs
