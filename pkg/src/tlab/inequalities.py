"""Exact-rational certification of the closed-form inequality claims.

Each verify_* sweep walks a finite rational grid and reports violations; a
clean report is a machine certificate of the inequality over the swept box
and nothing more (a finite grid does not prove a real-parameter claim).  The
hot sweeps run on scaled integers (every grid value times a fixed even
denominator, every inequality cross-multiplied by its positive denominators),
which is exact; the Fraction-returning point evaluators are the reference
the fast paths are tested against and the form violations are re-reported in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .records import fmt_rational

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class GridReport:
    checked: int
    violations: tuple[dict, ...]
    ranges: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"checked": self.checked, "violations": list(self.violations),
                "ranges": self.ranges}


def q_sink(delta, d_u, d_w, k) -> Fraction:
    """1.5/(delta+.5) - 1/(d_u+.5) - 1/(d_w+.5) + .5/(d_u+d_w-2k+.5)."""
    delta, d_u, d_w, k = map(Fraction, (delta, d_u, d_w, k))
    for den in (delta + HALF, d_u + HALF, d_w + HALF, d_u + d_w - 2 * k + HALF):
        if den == 0:
            raise ValueError("zero denominator")
    return (3 * HALF / (delta + HALF) - 1 / (d_u + HALF) - 1 / (d_w + HALF)
            + HALF / (d_u + d_w - 2 * k + HALF))


def q_avg(delta, ell, k) -> Fraction:
    """ell + .5 - k/(delta+.5) - (ell(delta+1.5-k)+.5k)/(delta+2-ell)."""
    delta, ell, k = map(Fraction, (delta, ell, k))
    if delta + 2 - ell == 0 or delta + HALF == 0:
        raise ValueError("zero denominator")
    return (ell + HALF - k / (delta + HALF)
            - (ell * (delta + 3 * HALF - k) + HALF * k) / (delta + 2 - ell))


def claim_a3_odd_margin(delta: int) -> Fraction:
    """Slack of the odd-minimum-degree bucket inequality at
    ell = k = (delta+1)/2 with bucket width (delta-1)/2; positive iff the
    claim holds there."""
    if delta < 5 or delta % 2 == 0:
        raise ValueError("needs odd delta >= 5")
    ell = k = Fraction(delta + 1, 2)
    dp = Fraction(delta - 1, 2)
    buckets = math.ceil(ell * k / dp)
    term = (dp * (delta + 3 * HALF - k) + HALF * k) / (k * (delta + 2 - dp))
    return ell + HALF - k / (delta + HALF) - buckets * term


def _scaled_step(step) -> tuple[int, int]:
    """(Q, SP): an even common denominator and the step in Q-units."""
    step = Fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")
    q = math.lcm(2, step.denominator)
    return q, int(step * q)


def sink_nonneg_scaled(delta: int, du: int, dw: int, kk: int, qden: int) -> bool:
    """q_sink(delta, du/qden, dw/qden, kk/qden) >= 0, on integers only.

    Needs qden even and all three shifted denominators positive, which holds
    throughout the claim's sweep box (in particular du + dw - 2k + 1/2 > 0
    whenever d_u, d_w >= delta + 1 >= k).
    """
    half_q = qden // 2
    a = du + half_q
    b = dw + half_q
    c = du + dw - 2 * kk + half_q
    ab = a * b
    c1 = qden * (2 * delta + 1)
    return c * (3 * ab - c1 * (a + b)) + half_q * (2 * delta + 1) * ab >= 0


def avg_nonneg_scaled(delta: int, ll: int, kk: int, qden: int) -> bool:
    """q_avg(delta, ll/qden, kk/qden) >= 0, on integers only.

    Needs delta + 2 - ll/qden > 0, which holds for ll up to qden*delta/2.
    """
    gap = qden * (delta + 2) - ll
    t1 = (2 * ll + qden) * (2 * delta + 1) * gap
    t2 = 4 * kk * gap
    t3 = (2 * delta + 1) * (ll * (qden * (2 * delta + 3) - 2 * kk) + qden * kk)
    return t1 - t2 - t3 >= 0


def verify_claims_grid(delta_max: int, step) -> GridReport:
    """Certify the two appendix claims over rational grids.

    Sink-clique claim: q_sink(delta, d_u, d_w, k) >= 0 for integer delta in
    [2, delta_max], k in [(delta+1)/2, delta+1], d_u, d_w in
    [delta+1, delta+21], all stepped by ``step`` (d_u <= d_w by symmetry).
    Averaging claim: q_avg(delta, ell, k) >= 0 for integer delta in
    [4, delta_max], ell in [2, delta/2], k in [(delta+1)/2, delta+1].  Odd
    clause: the bucket inequality margin is strictly positive for odd delta
    in [5, delta_max].
    """
    qden, sp = _scaled_step(step)
    checked = 0
    violations = []

    for delta in range(2, delta_max + 1):
        k_lo = qden * (delta + 1) // 2
        k_hi = qden * (delta + 1)
        d_lo = qden * (delta + 1)
        d_hi = qden * (delta + 21)
        for kk in range(k_lo, k_hi + 1, sp):
            for du in range(d_lo, d_hi + 1, sp):
                for dw in range(du, d_hi + 1, sp):
                    checked += 1
                    if not sink_nonneg_scaled(delta, du, dw, kk, qden):
                        lhs = q_sink(delta, Fraction(du, qden), Fraction(dw, qden),
                                     Fraction(kk, qden))
                        violations.append({
                            "claim": "sink-clique",
                            "delta": delta, "d_u": fmt_rational(Fraction(du, qden)),
                            "d_w": fmt_rational(Fraction(dw, qden)),
                            "k": fmt_rational(Fraction(kk, qden)),
                            "lhs": fmt_rational(lhs), "rhs": "0",
                        })

    for delta in range(4, delta_max + 1):
        l_lo = 2 * qden
        l_hi = qden * delta // 2
        k_lo = qden * (delta + 1) // 2
        k_hi = qden * (delta + 1)
        for ll in range(l_lo, l_hi + 1, sp):
            for kk in range(k_lo, k_hi + 1, sp):
                checked += 1
                if not avg_nonneg_scaled(delta, ll, kk, qden):
                    lhs = q_avg(delta, Fraction(ll, qden), Fraction(kk, qden))
                    violations.append({
                        "claim": "averaging",
                        "delta": delta, "ell": fmt_rational(Fraction(ll, qden)),
                        "k": fmt_rational(Fraction(kk, qden)),
                        "lhs": fmt_rational(lhs), "rhs": "0",
                    })

    for delta in range(5, delta_max + 1, 2):
        checked += 1
        margin = claim_a3_odd_margin(delta)
        if margin <= 0:
            violations.append({"claim": "odd-bucket", "delta": delta,
                               "lhs": fmt_rational(margin), "rhs": "0"})

    ranges = {
        "sink-clique": {"delta": [2, delta_max], "k": "[(delta+1)/2, delta+1]",
                        "d": "[delta+1, delta+21]", "step": fmt_rational(Fraction(step)),
                        "note": "d_u <= d_w by symmetry of q_sink"},
        "averaging": {"delta": [4, delta_max], "ell": "[2, delta/2]",
                      "k": "[(delta+1)/2, delta+1]", "step": fmt_rational(Fraction(step))},
        "odd-bucket": {"delta": f"odd in [5, {delta_max}]"},
    }
    return GridReport(checked, tuple(violations), ranges)


# ---------------------------------------------------------------------------
# bucket bounds for the averaged attachment sum

def bucket_term(delta: int, sizeK: int, x) -> Fraction:
    """(x(delta+3/2-|K|) + |K|/2) / (|K|(delta+2-x)): one attachment bucket."""
    x = Fraction(x)
    den = sizeK * (delta + 2 - x)
    if den == 0:
        raise ValueError("zero denominator")
    return (x * (delta + 3 * HALF - sizeK) + Fraction(sizeK, 2)) / den


LEMMA52_CONVENTIONS = ("padded", "displayed", "literal")


def lemma52_bound(delta: int, sizeK: int, ell: int, Dprime: int,
                  convention: str = "padded") -> Fraction:
    """Closed-form bucket upper bound on the averaged attachment sum:
    floor(ell|K|/D') full buckets of width D', one remainder bucket, and
    (by default) the zero-attachment slots of the extremal configuration.

    The unit-switching argument pushes any attachment multiset (padded with
    zeros to ell|K| slots) to the extremal shape {D', ..., D', r, 0, ..., 0},
    and each zero slot still contributes (|K|/2)/(|K|(delta+2)).  Three
    conventions:

    - "padded": count those zero slots.  This is what the switching proof
      actually yields and the only variant that upper-bounds the exact
      partition maximum (r = ell|K| mod D', omitted when zero).
    - "displayed": drop the zero slots, r = ell|K| mod D' omitted when zero.
      The closed form as usually displayed, but NOT a valid upper bound:
      at (delta, |K|, ell, D') = (5, 4, 2, 2) it gives 7/5 while the
      all-ones attachment pattern reaches 3/2.
    - "literal": drop the zero slots but take the smallest positive r, so a
      divisible ell|K| earns one extra full bucket.  Also not a valid upper
      bound, e.g. (6, 5, 2, 3) gives 47/35 against an exact maximum of 10/7.

    "padded" and "displayed" coincide whenever D' = 1 (the extremal shape
    then has no zero slots and no remainder).
    """
    if Dprime <= 0:
        raise ValueError("bucket width must be positive")
    if delta + 2 - Dprime <= 0:
        raise ValueError("bucket width exceeds delta + 1")
    if convention not in LEMMA52_CONVENTIONS:
        raise ValueError(f"convention must be one of {LEMMA52_CONVENTIONS}")
    total = ell * sizeK
    full, rem = divmod(total, Dprime)
    bound = full * bucket_term(delta, sizeK, Dprime)
    if rem == 0 and convention == "literal" and total > 0:
        rem = Dprime
    if rem:
        bound += bucket_term(delta, sizeK, rem)
    if convention == "padded":
        zero_slots = total - full - (1 if rem else 0)
        bound += zero_slots * bucket_term(delta, sizeK, 0)
    return bound


def bruteforce_bucket_max(delta: int, sizeK: int, ell: int, D: int,
                          budget: int = 18) -> Fraction:
    """Exact maximum of the bucket sum over every multiset of attachment
    counts in [1, D] totalling ell|K|, by enumerating bounded partitions.

    Deliberately dumb: this is the oracle the closed-form bound is checked
    against, so it stays a plain enumeration.
    """
    total = ell * sizeK
    if total > budget:
        raise ValueError(f"ell*|K| = {total} exceeds the enumeration budget {budget}")
    if D < 1:
        raise ValueError("attachment cap must be >= 1")
    if delta + 2 - D <= 0:
        raise ValueError("attachment cap exceeds delta + 1")
    terms = {x: bucket_term(delta, sizeK, x) for x in range(1, D + 1)}
    best: list[Fraction | None] = [None]

    def rec(remaining: int, maxpart: int, acc: Fraction):
        if remaining == 0:
            if best[0] is None or acc > best[0]:
                best[0] = acc
            return
        for x in range(min(maxpart, remaining), 0, -1):
            rec(remaining - x, x, acc + terms[x])

    rec(total, D, Fraction(0))
    assert best[0] is not None
    return best[0]


def switching_margin(delta: int, sizeK: int, x1: int, x2: int) -> Fraction:
    """Bucket-sum change when one unit moves from x1 up to x2 (x1 <= x2):
    term(x1-1) + term(x2+1) - term(x1) - term(x2)."""
    return (bucket_term(delta, sizeK, x1 - 1) + bucket_term(delta, sizeK, x2 + 1)
            - bucket_term(delta, sizeK, x1) - bucket_term(delta, sizeK, x2))


def switching_margin_closed_form(delta: int, sizeK: int, x1: int, x2: int) -> Fraction:
    """The same change, factored as a lead factor times a difference of
    reciprocals.

    Telescoping term(x+1) - term(x) gives the constant numerator
    (delta+2)(delta+3/2-|K|) + |K|/2; a commonly quoted form drops the
    |K|/2, which changes the value but not the sign on the relevant range.
    """
    lead = (Fraction(delta + 2) * (delta + 3 * HALF - sizeK) + Fraction(sizeK, 2)) / sizeK
    return lead * (Fraction(1, (delta + 2 - x2) * (delta + 1 - x2))
                   - Fraction(1, (delta + 3 - x1) * (delta + 2 - x1)))


def finishing_blow_lhs(delta: int, ell: int, sizeK: int) -> Fraction:
    """ell + 1/2 - |K|/(delta + 1/2): the averaged slack the bucket bound
    must stay under."""
    return ell + HALF - Fraction(sizeK) / (delta + HALF)


def _finishing_blow_tuples(delta_max: int, budget: int):
    """(delta, ell, sizeK, D) with 2 <= ell <= (delta+1)/2,
    ceil((delta+1)/2) <= |K| <= delta+1-ell, 1 <= D <= min(ell, |K|-1),
    and ell|K| inside the enumeration budget."""
    for delta in range(3, delta_max + 1):
        for ell in range(2, (delta + 1) // 2 + 1):
            for sizeK in range((delta + 2) // 2, delta + 2 - ell):
                if ell * sizeK > budget:
                    continue
                for d_cap in range(1, min(ell, sizeK - 1) + 1):
                    yield delta, ell, sizeK, d_cap


def verify_finishing_blow_grid(delta_max: int, budget: int = 18) -> GridReport:
    """Certify that the averaged slack dominates the exact bucket maximum on
    every in-budget integer tuple of the contradiction range."""
    if delta_max < 3:
        raise ValueError("delta_max must be >= 3")
    checked = 0
    skipped = 0
    violations = []
    for delta in range(3, delta_max + 1):
        for ell in range(2, (delta + 1) // 2 + 1):
            for sizeK in range((delta + 2) // 2, delta + 2 - ell):
                if ell * sizeK > budget:
                    skipped += 1
                    continue
                lhs = finishing_blow_lhs(delta, ell, sizeK)
                for d_cap in range(1, min(ell, sizeK - 1) + 1):
                    checked += 1
                    rhs = bruteforce_bucket_max(delta, sizeK, ell, d_cap, budget)
                    if lhs < rhs:
                        violations.append({
                            "delta": delta, "ell": ell, "sizeK": sizeK, "D": d_cap,
                            "lhs": fmt_rational(lhs), "rhs": fmt_rational(rhs),
                        })
    ranges = {"delta": [3, delta_max], "ell": "[2, (delta+1)/2]",
              "sizeK": "[ceil((delta+1)/2), delta+1-ell]",
              "D": "[1, min(ell, sizeK-1)]",
              "budget": budget, "skipped_over_budget": skipped}
    return GridReport(checked, tuple(violations), ranges)


def verify_bucket_oracle_grid(delta_max: int = 12, budget: int = 14) -> GridReport:
    """Certify the closed-form bucket bound against the brute-force oracle
    (every D <= D' <= |K|-1) and the unit-switching inequality at every
    in-budget point."""
    checked = 0
    violations = []
    for delta, ell, sizeK, d_cap in _finishing_blow_tuples(delta_max, budget):
        for dprime in range(d_cap, sizeK):
            checked += 1
            bound = lemma52_bound(delta, sizeK, ell, dprime)
            oracle = bruteforce_bucket_max(delta, sizeK, ell, d_cap, budget)
            if bound < oracle:
                violations.append({
                    "kind": "bound-below-oracle",
                    "delta": delta, "ell": ell, "sizeK": sizeK,
                    "D": d_cap, "Dprime": dprime,
                    "lhs": fmt_rational(bound), "rhs": fmt_rational(oracle),
                })
            for x1 in range(1, dprime):
                for x2 in range(x1, dprime):
                    checked += 1
                    margin = switching_margin(delta, sizeK, x1, x2)
                    if margin <= 0:
                        violations.append({
                            "kind": "switching",
                            "delta": delta, "sizeK": sizeK, "x1": x1, "x2": x2,
                            "lhs": fmt_rational(margin), "rhs": "0",
                        })
    ranges = {"delta": [3, delta_max], "budget": budget,
              "Dprime": "[D, sizeK-1]", "switching": "1 <= x1 <= x2 <= Dprime-1"}
    return GridReport(checked, tuple(violations), ranges)


# ---------------------------------------------------------------------------
# the peeling-count optimization behind the colorability corollary

def e_turan(n, r: int, n_prime, k: int) -> Fraction:
    """Edge bound after peeling k parts: (1-1/k)(n-n')^2/2 +
    (1-1/(r-k))n'^2/2 - n'/4 + (n-n')n'."""
    if not 1 <= k <= r - 2:
        raise ValueError("needs 1 <= k <= r-2")
    n, n_prime = Fraction(n), Fraction(n_prime)
    return ((1 - Fraction(1, k)) * (n - n_prime) ** 2 / 2
            + (1 - Fraction(1, r - k)) * n_prime ** 2 / 2
            - n_prime / 4 + (n - n_prime) * n_prime)


def corollary_rhs(n, r: int) -> Fraction:
    """(1 - 1/r) n^2/2 - n/(2r) + 1."""
    n = Fraction(n)
    return (1 - Fraction(1, r)) * n * n / 2 - n / (2 * r) + 1


def discriminant(n, r: int, k) -> Fraction:
    """k^2 - 8kn - kr + 8nr - 16n + 32r; positive exactly where the peeling
    optimization closes."""
    n, k = Fraction(n), Fraction(k)
    return k * k - 8 * k * n - k * r + 8 * n * r - 16 * n + 32 * r


def eturan_within_bound_scaled(n: int, r: int, k: int, np: int) -> bool:
    """e_turan(n, r, np, k) <= (1-1/r)n^2/2 - n/(2r) + 1 for integer inputs,
    both sides multiplied by 4k(r-k)r."""
    gap = n - np
    lhs = (2 * (k - 1) * (r - k) * r * gap * gap
           + 2 * k * (r - k - 1) * r * np * np
           - k * (r - k) * r * np
           + 4 * k * (r - k) * r * gap * np)
    rhs = 2 * k * (r - k) * ((r - 1) * n * n - n) + 4 * k * (r - k) * r
    return lhs <= rhs


def verify_appendixA_grid(n_max: int, r_max: int) -> GridReport:
    """Certify e_turan <= (1-1/r)n^2/2 - n/(2r) + 1 for integer r in
    [3, r_max], k in [1, r-2], n in [r, n_max], at every integer n' in [0, n]
    and at the continuous maximizer n' = (r-k)(n-k/4)/r; also pin the
    discriminant identity 30r+4 at k = r-2."""
    if r_max < 3:
        raise ValueError("r_max must be >= 3")
    checked = 0
    violations = []
    for r in range(3, r_max + 1):
        for k in range(1, r - 1):
            for n in range(r, n_max + 1):
                for np in range(n + 1):
                    checked += 1
                    if not eturan_within_bound_scaled(n, r, k, np):
                        violations.append({
                            "kind": "integer-point", "n": n, "r": r, "k": k, "n_prime": np,
                            "lhs": fmt_rational(e_turan(n, r, np, k)),
                            "rhs": fmt_rational(corollary_rhs(n, r)),
                        })
                checked += 1
                peak = Fraction(r - k, r) * (n - Fraction(k, 4))
                if e_turan(n, r, peak, k) > corollary_rhs(n, r):
                    violations.append({
                        "kind": "maximizer", "n": n, "r": r, "k": k,
                        "n_prime": fmt_rational(peak),
                        "lhs": fmt_rational(e_turan(n, r, peak, k)),
                        "rhs": fmt_rational(corollary_rhs(n, r)),
                    })
        # the discriminant at k = r-2 is constant in n; two points pin the
        # linear-in-n polynomial, and its value must be 30r+4 > 0
        checked += 1
        expected = Fraction(30 * r + 4)
        if (discriminant(0, r, r - 2) != expected or discriminant(1, r, r - 2) != expected
                or expected <= 0):
            violations.append({"kind": "discriminant-identity", "r": r,
                               "lhs": fmt_rational(discriminant(0, r, r - 2)),
                               "rhs": fmt_rational(expected)})
    ranges = {"r": [3, r_max], "k": "[1, r-2]", "n": f"[r, {n_max}]",
              "n_prime": "[0, n] integers plus the continuous maximizer"}
    return GridReport(checked, tuple(violations), ranges)
