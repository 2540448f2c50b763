"""Falsification harness for the inverse-degree bound conjecture.

For weights with f(v) <= 1/d(v), the conjecture says alpha(G) >= sum f unless
a clique has weight above 1 or some odd-cycle blowup subgraph has weight
above its independence number k.  The harness decides each graph exactly: it
either confirms the bound, exhibits one of the two escapes as a re-validated
certificate, or emits a full counterexample certificate (which would be a
publishable event and must never happen if the conjecture is true).
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .cliques import max_weight_clique
from .graphs import Graph, bits, encode_graph6, mask_of, set_of
from .independence import alpha_exact

DEFAULT_BLOWUP_CAP = 14

ALPHA_OK = "ALPHA_OK"
CLIQUE_ESCAPE = "CLIQUE_ESCAPE"
BLOWUP_ESCAPE = "BLOWUP_ESCAPE"
COUNTEREXAMPLE = "COUNTEREXAMPLE"


@dataclass(frozen=True)
class BlowupWitness:
    """A heavy blowup of C_{2k+1}: disjoint clique parts, cyclically complete."""

    k: int
    parts: tuple[tuple[int, ...], ...]
    weight: Fraction


@dataclass(frozen=True)
class ConjectureVerdict:
    kind: str
    alpha: int
    weight_sum: Fraction
    clique: tuple[int, ...] | None = None
    clique_weight: Fraction | None = None
    blowup: BlowupWitness | None = None
    exhaustion: dict | None = None


def validate_blowup_witness(g: Graph, weights, witness: BlowupWitness) -> None:
    """Independent re-check of a blowup certificate; raises on any defect."""
    parts = witness.parts
    if len(parts) != 2 * witness.k + 1 or witness.k < 1:
        raise ValueError("part count does not match 2k+1")
    seen = 0
    for part in parts:
        if not part:
            raise ValueError("empty part")
        pm = mask_of(part)
        if pm & seen:
            raise ValueError("parts are not disjoint")
        seen |= pm
        for u in part:
            for v in part:
                if u < v and not g.has_edge(u, v):
                    raise ValueError(f"part {part} is not a clique")
    for i, part in enumerate(parts):
        nxt = parts[(i + 1) % len(parts)]
        for u in part:
            for v in nxt:
                if not g.has_edge(u, v):
                    raise ValueError(f"parts {i} and {(i + 1) % len(parts)} not completely joined")
    total = sum((Fraction(weights[v]) for v in bits(seen)), Fraction(0))
    if total != witness.weight:
        raise ValueError("stated weight does not match the parts")
    if total <= witness.k:
        raise ValueError("witness weight does not exceed k")


def find_heavy_blowup(g: Graph, weights, k_max: int, max_n: int = DEFAULT_BLOWUP_CAP):
    """First blowup of an odd cycle C_{2k+1} (k = 2 upward) whose weight
    exceeds k, under subgraph semantics; None if no k <= k_max admits one.

    k = 1 is deliberately absent: a triangle blowup is a clique on the union
    of its parts, which the clique escape already covers.  The search
    backtracks over parts in cyclic order, each part a nonempty clique drawn
    from the common neighborhood of its predecessor (the last also complete
    to the first), anchored so the lowest witness vertex sits in part 0.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if g.n > max_n:
        raise ValueError(
            f"n={g.n} exceeds the blowup search cap {max_n}; pass max_n explicitly to raise it"
        )
    weights = [Fraction(w) for w in weights]
    if len(weights) != g.n or any(w < 0 for w in weights):
        raise ValueError("need one nonnegative weight per vertex")
    scale = lcm(*(w.denominator for w in weights)) if weights else 1
    wnum = [int(w * scale) for w in weights]
    adj = g.adj
    full = g.full_mask

    def wsum(mask: int) -> int:
        s = 0
        while mask:
            low = mask & -mask
            s += wnum[low.bit_length() - 1]
            mask ^= low
        return s

    def nbr_union(mask: int) -> int:
        m = 0
        while mask:
            low = mask & -mask
            m |= adj[low.bit_length() - 1]
            mask ^= low
        return m

    def search(k: int):
        nparts = 2 * k + 1
        need = k * scale
        parts: list[int] = []

        def step(idx: int, pmask: int, pm: int, pool: int, rest: int, w: int,
                 first_meet: int) -> bool:
            """Extend part ``idx`` (currently ``pmask``, common neighborhood
            ``pm``) or close it and open the next.  ``pool`` holds
            clique-compatible ascending extensions, ``rest`` the unplaced
            vertices, ``w`` the weight placed so far.

            The entry prune is sound for the whole extension subtree:
            extending a part only shrinks its common neighborhood, hence the
            next part's candidates, hence every later reachability pool; and
            any completion weight is at most w plus the weight of the
            extension pool plus the weight of those pools.
            """
            if idx + 1 == nparts:
                if w > need:
                    parts.append(pmask)
                    return True
                if w + wsum(pool) <= need:
                    return False
                for v in bits(pool):
                    vb = 1 << v
                    if step(idx, pmask | vb, pm & adj[v],
                            pool & adj[v] & ~((vb << 1) - 1),
                            rest & ~vb, w + wnum[v], first_meet):
                        return True
                return False
            fm = pm if idx == 0 else first_meet
            cand = rest & pm
            if idx + 2 == nparts:
                cand &= fm
            if not cand:
                return False
            pools = cur = cand
            for j in range(idx + 2, nparts):
                cur = rest & nbr_union(cur)
                if j == nparts - 1:
                    cur &= fm
                if not cur:
                    return False
                pools |= cur
            if pools.bit_count() < nparts - idx - 1:
                return False
            if w + wsum(pool | pools) <= need:
                return False
            for v in bits(pool):
                vb = 1 << v
                if step(idx, pmask | vb, pm & adj[v],
                        pool & adj[v] & ~((vb << 1) - 1),
                        rest & ~vb, w + wnum[v], first_meet):
                    return True
            parts.append(pmask)
            for v in bits(cand):
                vb = 1 << v
                if step(idx + 1, vb, adj[v], cand & adj[v] & ~((vb << 1) - 1),
                        rest & ~vb, w + wnum[v], fm):
                    return True
            parts.pop()
            return False

        for anchor in range(g.n):
            # cyclic symmetry: the lowest witness vertex may be rotated into
            # part 0, so anchor it there and use only vertices above it
            avail = full & ~((1 << anchor) - 1)
            if wsum(avail) <= need or avail.bit_count() < nparts:
                continue
            ab = 1 << anchor
            if step(0, ab, adj[anchor], avail & adj[anchor] & ~((ab << 1) - 1),
                    avail & ~ab, wnum[anchor], 0):
                total = Fraction(sum(wsum(m) for m in parts), scale)
                return BlowupWitness(k, tuple(set_of(m) for m in parts), total)
        return None

    for k in range(2, k_max + 1):
        if 2 * k + 1 > g.n:
            break
        witness = search(k)
        if witness is not None:
            return witness
    return None


def conjecture_verdict(g: Graph, weights, k_max: int | None = None,
                       max_n: int = DEFAULT_BLOWUP_CAP) -> ConjectureVerdict:
    """Decide one graph against the conjecture under the given weights.

    Requires 0 <= f(v) <= 1/d(v) exactly (so isolated vertices are rejected).
    """
    weights = tuple(Fraction(w) for w in weights)
    if len(weights) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(weights)}")
    for v in range(g.n):
        d = g.degree(v)
        if d == 0:
            raise ValueError(f"vertex {v} is isolated; 1/d(v) is undefined")
        if not 0 <= weights[v] <= Fraction(1, d):
            raise ValueError(f"weight at vertex {v} violates the 1/d cap")
    total = sum(weights, Fraction(0))
    res = alpha_exact(g)
    if res.alpha >= total:
        return ConjectureVerdict(ALPHA_OK, res.alpha, total)
    clique, cw = max_weight_clique(g, weights)
    if cw > 1:
        return ConjectureVerdict(CLIQUE_ESCAPE, res.alpha, total, clique=clique, clique_weight=cw)
    if k_max is None:
        k_max = max(1, (g.n - 1) // 2)
    witness = find_heavy_blowup(g, weights, k_max, max_n)
    if witness is not None:
        validate_blowup_witness(g, weights, witness)
        return ConjectureVerdict(BLOWUP_ESCAPE, res.alpha, total, blowup=witness)
    return ConjectureVerdict(
        COUNTEREXAMPLE, res.alpha, total,
        exhaustion={"k_max": k_max, "graph": encode_graph6(g) if g.n <= 62 else f"<n={g.n}>",
                    "alpha_witness": list(res.witness), "search_cap": max_n},
    )


def write_counterexample_certificate(verdict: ConjectureVerdict, weights,
                                     directory: str = ".") -> str:
    """Persist a COUNTEREXAMPLE verdict as a standalone JSON file.

    The file carries everything needed to reproduce the claim: the graph6
    string, the weight function, the independence witness, and the
    exhaustion parameters of the escape searches.  Returns the path.
    """
    if verdict.kind != COUNTEREXAMPLE:
        raise ValueError("only COUNTEREXAMPLE verdicts are certified to file")
    payload = {
        "kind": verdict.kind,
        "graph": verdict.exhaustion["graph"],
        "weights": [str(Fraction(w)) for w in weights],
        "weight_sum": str(verdict.weight_sum),
        "alpha": verdict.alpha,
        "alpha_witness": verdict.exhaustion["alpha_witness"],
        "exhaustion": {k: v for k, v in verdict.exhaustion.items()
                       if k not in ("graph", "alpha_witness")},
    }
    digest = hashlib.sha256(verdict.exhaustion["graph"].encode()).hexdigest()[:12]
    path = os.path.join(directory, f"counterexample-{digest}.json")
    with open(path, "w", encoding="ascii") as fh:
        json.dump(payload, fh, sort_keys=True, indent=2)
        fh.write("\n")
    return path
