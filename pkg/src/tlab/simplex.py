"""Dense exact-rational simplex, Bland's rule, fraction-free integer tableau.

Solves max c.x subject to A.x <= b, x >= 0 for integer A, b, c with b >= 0
(so the all-slack basis is feasible and no phase one is needed).  The tableau
is kept as integers over a single positive denominator: a pivot on entry
(p, q) leaves row p untouched, maps every other entry e to
(T[p][q]*e - T[i][q]*T[p][j]) / den, and the old denominator divides that
product exactly (Bareiss / integer pivoting), so no rationals are built
during the solve.  Bland's rule (lowest eligible entering index, ratio ties
broken by lowest basic variable) rules out cycling.

Every solve is certified before returning: the primal point is checked
feasible, the dual vector nonnegative and dual-feasible, and both objectives
equal.  By weak duality that is a proof of optimality, so a bug in the pivot
arithmetic cannot silently produce a wrong optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class SimplexError(ArithmeticError):
    """Internal inconsistency: certificate failed or iteration diverged."""


@dataclass(frozen=True)
class LpSolution:
    value: Fraction
    x: tuple[Fraction, ...]
    dual: tuple[Fraction, ...]


def _solve_int(a_rows: list[list[int]], b: list[int], c: list[int], max_pivots: int):
    m = len(a_rows)
    nvars = len(c)
    ncols = nvars + m  # structurals then slacks; rhs rides at index ncols
    tab = []
    for i, row in enumerate(a_rows):
        t = list(row) + [0] * m + [b[i]]
        t[nvars + i] = 1
        tab.append(t)
    z = [-cj for cj in c] + [0] * m + [0]
    basis = list(range(nvars, nvars + m))
    den = 1

    for _ in range(max_pivots):
        q = -1
        for j in range(ncols):
            if z[j] < 0:
                q = j
                break
        if q < 0:
            break
        p = -1
        pn = pd = 0
        for i in range(m):
            aiq = tab[i][q]
            if aiq > 0:
                bi = tab[i][ncols]
                if p < 0 or bi * pd < pn * aiq or (bi * pd == pn * aiq and basis[i] < basis[p]):
                    p, pn, pd = i, bi, aiq
        if p < 0:
            raise SimplexError("unbounded column; the feasible region should be a polytope")
        piv = tab[p][q]
        prow = tab[p]
        for i in range(m):
            if i == p:
                continue
            row = tab[i]
            f = row[q]
            if f:
                tab[i] = [(piv * x - f * y) // den for x, y in zip(row, prow)]
            elif piv != den:
                tab[i] = [piv * x // den for x in row]
        f = z[q]
        z = [(piv * x - f * y) // den for x, y in zip(z, prow)]
        den = piv
        basis[p] = q
    else:
        raise SimplexError("pivot limit exceeded")

    x_num = [0] * nvars
    for i in range(m):
        if basis[i] < nvars:
            x_num[basis[i]] = tab[i][ncols]
    y_num = [z[nvars + i] for i in range(m)]
    return z[ncols], den, x_num, y_num


def _certify(a_rows, b, c, val_num, den, x_num, y_num):
    # primal feasibility
    if any(x < 0 for x in x_num):
        raise SimplexError("negative primal value")
    for i, row in enumerate(a_rows):
        if sum(row[j] * x_num[j] for j in range(len(c))) > b[i] * den:
            raise SimplexError(f"primal constraint {i} violated")
    if sum(c[j] * x_num[j] for j in range(len(c))) != val_num:
        raise SimplexError("primal objective mismatch")
    # dual feasibility and weak-duality equality
    if any(y < 0 for y in y_num):
        raise SimplexError("negative dual value")
    for j in range(len(c)):
        if sum(a_rows[i][j] * y_num[i] for i in range(len(b))) < c[j] * den:
            raise SimplexError(f"dual constraint {j} violated")
    if sum(b[i] * y_num[i] for i in range(len(b))) != val_num:
        raise SimplexError("dual objective mismatch")


def solve_int_lp(a_rows, b, c, max_pivots: int = 100_000):
    """Certified optimum of an all-integer LP; returns integer numerators.

    Result is (value_num, den, x_nums, y_nums) with den > 0: the optimum is
    value_num/den, the optimal vertex x_nums[j]/den, the optimal dual
    y_nums[i]/den.
    """
    if any(bi < 0 for bi in b):
        raise ValueError("needs b >= 0 (slack basis must be feasible)")
    val_num, den, x_num, y_num = _solve_int([list(r) for r in a_rows], list(b), list(c), max_pivots)
    _certify(a_rows, b, c, val_num, den, x_num, y_num)
    return val_num, den, x_num, y_num


def solve_lp(a_rows, b, c) -> LpSolution:
    """Rational-facing wrapper: clears denominators row by row, solves, and
    maps the certified solution back to the original scaling."""
    from math import lcm

    a_rows = [[Fraction(x) for x in row] for row in a_rows]
    b = [Fraction(x) for x in b]
    c = [Fraction(x) for x in c]
    row_mults = [lcm(*(x.denominator for x in row + [bi])) for row, bi in zip(a_rows, b)]
    int_rows = [[int(x * m) for x in row] for row, m in zip(a_rows, row_mults)]
    int_b = [int(bi * m) for bi, m in zip(b, row_mults)]
    cmult = lcm(*(x.denominator for x in c)) if c else 1
    int_c = [int(x * cmult) for x in c]
    val_num, den, x_num, y_num = solve_int_lp(int_rows, int_b, int_c)
    value = Fraction(val_num, den * cmult)
    xs = tuple(Fraction(v, den) for v in x_num)
    # scaled row i is row_mults[i] times the original, so the original dual
    # picks up that multiplier (and drops the objective multiplier)
    ys = tuple(Fraction(y * m, den * cmult) for y, m in zip(y_num, row_mults))
    return LpSolution(value, xs, ys)
