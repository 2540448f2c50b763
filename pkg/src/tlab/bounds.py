"""Degree-sequence independence bounds, weight-function validation, and the
exact LP maximizing the guaranteed bound.

A weight function is a tuple of nonnegative Fractions, one per vertex.  The
restriction to nonnegative weights is deliberate: dropping a negative-weight
vertex from any certificate keeps every hypothesis and never shrinks the
guaranteed sum, and nonnegativity is what lets clique-sum checks look only at
maximal cliques.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import records
from .cliques import max_weight_clique, _maximal_clique_masks, simplicial_clique_condition
from .graphs import Graph, encode_graph6
from .independence import alpha_exact
from .records import VerificationRecord, fmt_rational
from .simplex import solve_int_lp

DEFAULT_CLIQUE_CAP = 4096
HALF = Fraction(1, 2)


def uniform_weights(g: Graph, value) -> tuple[Fraction, ...]:
    return (Fraction(value),) * g.n

def cap_weights(g: Graph) -> tuple[Fraction, ...]:
    """The per-vertex caps 1/(d(v) + 1/2)."""
    return tuple(Fraction(2, 2 * g.degree(v) + 1) for v in range(g.n))

def caro_wei_weights(g: Graph) -> tuple[Fraction, ...]:
    return tuple(Fraction(1, g.degree(v) + 1) for v in range(g.n))

def inverse_degree_weights(g: Graph) -> tuple[Fraction, ...]:
    if any(not row for row in g.adj):
        raise ValueError("1/d weights need minimum degree >= 1")
    return tuple(Fraction(1, g.degree(v)) for v in range(g.n))


def parse_weights(text: str) -> tuple[Fraction, ...]:
    """One rational per line, "p/q" or a bare integer."""
    return tuple(Fraction(line.strip()) for line in text.splitlines() if line.strip())


def format_weights(weights) -> str:
    return "\n".join(str(Fraction(w)) for w in weights) + "\n"


def check_weights(g: Graph, weights) -> tuple[Fraction, ...]:
    weights = tuple(Fraction(w) for w in weights)
    if len(weights) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(weights)}")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be nonnegative")
    return weights


def caro_wei(g: Graph) -> Fraction:
    """Sum of 1/(d(v)+1); the classical degree-sequence bound on alpha."""
    return sum((Fraction(1, g.degree(v) + 1) for v in range(g.n)), Fraction(0))


def degree_sum_bound(g: Graph, sigma) -> Fraction:
    """Sum of 1/(d(v)+1-sigma) for any sigma keeping denominators positive."""
    sigma = Fraction(sigma)
    total = Fraction(0)
    for v in range(g.n):
        den = g.degree(v) + 1 - sigma
        if den <= 0:
            raise ValueError(f"nonpositive denominator at vertex {v}")
        total += 1 / den
    return total


def sigma_bound(g: Graph, sigma) -> Fraction:
    sigma = Fraction(sigma)
    if not 0 <= sigma <= HALF:
        raise ValueError("sigma must lie in [0, 1/2]")
    return degree_sum_bound(g, sigma)


def critical_sigma(g: Graph, target, precision=Fraction(1, 1024)) -> Fraction:
    """The sigma where the degree-sum bound crosses ``target``, by bisection.

    The sum is strictly increasing in sigma; the answer is exact to within
    ``precision``.  Needs minimum degree >= 1 so that sigma may range over
    [0, 1].
    """
    target = Fraction(target)
    lo, hi = Fraction(0), Fraction(1)
    if degree_sum_bound(g, lo) > target or degree_sum_bound(g, hi) < target:
        raise ValueError("target not bracketed by sigma in [0, 1]")
    while hi - lo > precision:
        mid = (lo + hi) / 2
        if degree_sum_bound(g, mid) < target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass(frozen=True)
class HypothesisReport:
    per_vertex_ok: bool
    clique_ok: bool
    violating_vertex: int | None = None
    violating_clique: tuple[int, ...] | None = None
    violating_clique_weight: Fraction | None = None

    @property
    def ok(self) -> bool:
        return self.per_vertex_ok and self.clique_ok


def validate_weight_fn(g: Graph, weights) -> HypothesisReport:
    """Check f(v) <= 1/(d(v)+1/2) per vertex and clique sums <= 1."""
    weights = check_weights(g, weights)
    bad_vertex = None
    for v, w in enumerate(weights):
        if w > Fraction(2, 2 * g.degree(v) + 1):
            bad_vertex = v
            break
    clique, cw = max_weight_clique(g, weights)
    if cw > 1:
        return HypothesisReport(bad_vertex is None, False, bad_vertex, clique, cw)
    return HypothesisReport(bad_vertex is None, True, bad_vertex)


def verify_main_theorem(g: Graph, weights) -> VerificationRecord:
    """alpha(G) >= sum f under the per-vertex caps and unit clique sums."""
    weights = check_weights(g, weights)
    g6 = encode_graph6(g) if g.n <= 62 else f"<n={g.n}>"
    report = validate_weight_fn(g, weights)
    if not report.ok:
        payload = {}
        if not report.per_vertex_ok:
            payload["violating_vertex"] = report.violating_vertex
        if not report.clique_ok:
            payload["violating_clique"] = list(report.violating_clique)
            payload["clique_weight"] = fmt_rational(report.violating_clique_weight)
        return VerificationRecord(g6, "main-theorem", {}, records.HYPOTHESIS_FAIL, payload)
    total = sum(weights, Fraction(0))
    res = alpha_exact(g)
    verdict = records.OK if res.alpha >= total else records.COUNTEREXAMPLE
    return VerificationRecord(
        g6, "main-theorem", {},
        verdict,
        {"alpha": res.alpha, "weight_sum": fmt_rational(total), "witness": list(res.witness)},
    )


def verify_sigma_theorem(g: Graph, sigma) -> VerificationRecord:
    """alpha(G) >= sum 1/(d(v)+1-sigma) under the simplicial-count condition."""
    sigma = Fraction(sigma)
    g6 = encode_graph6(g) if g.n <= 62 else f"<n={g.n}>"
    params = {"sigma": fmt_rational(sigma)}
    cond = simplicial_clique_condition(g, sigma)
    if not cond.ok:
        return VerificationRecord(
            g6, "sigma-theorem", params, records.HYPOTHESIS_FAIL,
            {"violating_clique": list(cond.witness),
             "simplicial_count": cond.witness_simplicial_count,
             "allowance": fmt_rational(cond.witness_allowance)},
        )
    bound = sigma_bound(g, sigma)
    res = alpha_exact(g)
    verdict = records.OK if res.alpha >= bound else records.COUNTEREXAMPLE
    return VerificationRecord(
        g6, "sigma-theorem", params, verdict,
        {"alpha": res.alpha, "bound": fmt_rational(bound)},
    )


@dataclass(frozen=True)
class LpBound:
    value: Fraction
    weights: tuple[Fraction, ...]


def _lp_rows(n: int, adj: tuple[int, ...], clique_cap: int):
    """Integer rows for max sum(x): (2d+1)x_v <= 2 boxes, clique sums <= 1."""
    clique_masks = _maximal_clique_masks(n, adj)
    if len(clique_masks) > clique_cap:
        raise ValueError(f"{len(clique_masks)} maximal cliques exceed the cap {clique_cap}")
    clique_masks.sort()
    rows = []
    b = []
    for v in range(n):
        row = [0] * n
        row[v] = 2 * adj[v].bit_count() + 1
        rows.append(row)
        b.append(2)
    for mask in clique_masks:
        rows.append([(mask >> v) & 1 for v in range(n)])
        b.append(1)
    return rows, b


def lp_max_weight(g: Graph, clique_cap: int = DEFAULT_CLIQUE_CAP) -> LpBound:
    """Exact optimum of max sum f(v) over the main-theorem polytope.

    Constraints: 0 <= f(v) <= 1/(d(v)+1/2) and sum over each maximal clique
    <= 1 (subclique sums are dominated because weights are nonnegative).
    Solved by the certified exact simplex; the result is both the value and
    an optimal vertex of the polytope.
    """
    if g.n < 1:
        raise ValueError("need at least one vertex")
    rows, b = _lp_rows(g.n, g.adj, clique_cap)
    val_num, den, x_num, _ = solve_int_lp(rows, b, [1] * g.n)
    return LpBound(Fraction(val_num, den), tuple(Fraction(x, den) for x in x_num))
