"""Degree-sequence bounds, hypothesis validation, and the exact LP."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tlab import (
    alpha_exact,
    build_graph,
    cap_weights,
    caro_wei,
    caro_wei_weights,
    complete,
    critical_sigma,
    cycle,
    degree_sum_bound,
    format_weights,
    lp_max_weight,
    parse_weights,
    sigma_bound,
    turan,
    uniform_weights,
    validate_weight_fn,
    verify_main_theorem,
    verify_sigma_theorem,
)
from tlab.corpus import enumerate_labeled_graphs, graph_from_mask
from tlab import records
from tlab.simplex import SimplexError, solve_int_lp, solve_lp

PETERSEN = build_graph(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6),
                            (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)])
HALF = Fraction(1, 2)


class TestDegreeSequenceBounds:
    def test_caro_wei_values(self):
        assert caro_wei(complete(4)) == 1
        assert caro_wei(cycle(5)) == Fraction(5, 3)
        assert caro_wei(PETERSEN) == Fraction(5, 2)

    def test_sigma_bound_c5_tight(self):
        assert sigma_bound(cycle(5), HALF) == 2

    def test_sigma_zero_is_caro_wei(self):
        for g in (cycle(7), turan(8, 3), PETERSEN):
            assert sigma_bound(g, 0) == caro_wei(g)

    def test_c7(self):
        assert sigma_bound(cycle(7), HALF) == Fraction(14, 5)

    def test_range_enforced(self):
        with pytest.raises(ValueError):
            sigma_bound(cycle(5), Fraction(3, 4))

    def test_monotone_in_sigma(self):
        rng = random.Random(41)
        for _ in range(20):
            mask = rng.getrandbits(21)
            g = graph_from_mask(7, mask)
            a = sigma_bound(g, 0)
            b = sigma_bound(g, Fraction(1, 4))
            c = sigma_bound(g, HALF)
            assert a < b < c

    def test_empty_graph_bounds_are_zero(self):
        g = build_graph(0, [])
        assert caro_wei(g) == 0 and sigma_bound(g, HALF) == 0


class TestCriticalSigma:
    def test_monotone_bracketing(self):
        from tlab import c5_blowup
        g = c5_blowup(2)
        s = critical_sigma(g, 2, Fraction(1, 2048))
        assert degree_sum_bound(g, s - Fraction(1, 512)) < 2
        assert degree_sum_bound(g, s + Fraction(1, 512)) > 2

    def test_unbracketed_rejected(self):
        with pytest.raises(ValueError):
            critical_sigma(cycle(5), 100)


class TestValidateWeightFn:
    def test_c5_caps_ok(self):
        rep = validate_weight_fn(cycle(5), uniform_weights(cycle(5), Fraction(2, 5)))
        assert rep.ok and rep.per_vertex_ok and rep.clique_ok

    def test_c5_over_cap(self):
        rep = validate_weight_fn(cycle(5), uniform_weights(cycle(5), HALF))
        assert not rep.per_vertex_ok and rep.violating_vertex == 0

    def test_k4_clique_violation(self):
        rep = validate_weight_fn(complete(4), uniform_weights(complete(4), Fraction(2, 7)))
        assert rep.per_vertex_ok and not rep.clique_ok
        assert rep.violating_clique == (0, 1, 2, 3)
        assert rep.violating_clique_weight == Fraction(8, 7)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            validate_weight_fn(cycle(5), [Fraction(1, 3)] * 4)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            validate_weight_fn(cycle(5), [Fraction(-1, 3)] * 5)


class TestVerifyMainTheorem:
    def test_c5_tight(self):
        rec = verify_main_theorem(cycle(5), uniform_weights(cycle(5), Fraction(2, 5)))
        assert rec.verdict == records.OK
        assert rec.payload["alpha"] == 2 and rec.payload["weight_sum"] == "2"

    def test_k4(self):
        rec = verify_main_theorem(complete(4), uniform_weights(complete(4), Fraction(2, 9)))
        assert rec.verdict == records.OK

    def test_petersen(self):
        rec = verify_main_theorem(PETERSEN, uniform_weights(PETERSEN, Fraction(2, 7)))
        assert rec.verdict == records.OK

    def test_hypothesis_fail_reported(self):
        rec = verify_main_theorem(complete(4), uniform_weights(complete(4), Fraction(2, 7)))
        assert rec.verdict == records.HYPOTHESIS_FAIL
        assert rec.payload["violating_clique"] == [0, 1, 2, 3]


class TestVerifySigmaTheorem:
    def test_c5(self):
        rec = verify_sigma_theorem(cycle(5), HALF)
        assert rec.verdict == records.OK
        assert rec.payload["bound"] == "2"

    def test_k4_hypothesis_fail(self):
        rec = verify_sigma_theorem(complete(4), HALF)
        assert rec.verdict == records.HYPOTHESIS_FAIL

    def test_petersen(self):
        rec = verify_sigma_theorem(PETERSEN, HALF)
        assert rec.verdict == records.OK
        assert rec.payload["bound"] == "20/7"


class TestSimplexCore:
    def test_tiny_box(self):
        # max x + y subject to x <= 2, y <= 3
        val, den, x, y = solve_int_lp([[1, 0], [0, 1]], [2, 3], [1, 1])
        assert Fraction(val, den) == 5

    def test_shared_constraint(self):
        # max x + y subject to x + y <= 1, x <= 1, y <= 1
        sol = solve_lp([[1, 1], [1, 0], [0, 1]], [1, 1, 1], [1, 1])
        assert sol.value == 1
        assert sum(sol.x) == 1

    def test_rational_inputs(self):
        sol = solve_lp([[Fraction(1, 2), 0], [0, Fraction(1, 3)]], [1, 1], [1, 1])
        assert sol.value == 5
        assert sol.x == (2, 3)

    def test_duals_certify(self):
        a = [[2, 1], [1, 3]]
        b = [4, 6]
        c = [1, 1]
        sol = solve_lp(a, b, c)
        assert all(y >= 0 for y in sol.dual)
        assert sum(bi * yi for bi, yi in zip(b, sol.dual)) == sol.value

    def test_unbounded_detected(self):
        with pytest.raises(SimplexError):
            solve_int_lp([[0, 1]], [1], [1, 0])

    def test_negative_rhs_rejected(self):
        with pytest.raises(ValueError):
            solve_int_lp([[1]], [-1], [1])


class TestLpMaxWeight:
    def test_c5(self):
        res = lp_max_weight(cycle(5))
        assert res.value == 2
        assert res.weights == (Fraction(2, 5),) * 5

    def test_k4(self):
        assert lp_max_weight(complete(4)).value == 1

    def test_k33(self):
        res = lp_max_weight(turan(6, 2))
        assert res.value == Fraction(12, 7)
        assert res.weights == (Fraction(2, 7),) * 6

    def test_returned_point_is_feasible_and_attains(self):
        rng = random.Random(43)
        for _ in range(25):
            g = graph_from_mask(7, rng.getrandbits(21))
            res = lp_max_weight(g)
            assert validate_weight_fn(g, res.weights).ok
            assert sum(res.weights) == res.value

    def test_sandwich_on_exhaustive_n4(self):
        for g in enumerate_labeled_graphs(4):
            res = lp_max_weight(g)
            assert caro_wei(g) <= res.value <= alpha_exact(g).alpha

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2 ** 21 - 1))
    def test_sandwich_random_n7(self, mask):
        g = graph_from_mask(7, mask)
        res = lp_max_weight(g)
        assert caro_wei(g) <= res.value <= alpha_exact(g).alpha

    def test_caro_wei_point_always_feasible(self):
        rng = random.Random(47)
        for _ in range(25):
            g = graph_from_mask(6, rng.getrandbits(15))
            assert validate_weight_fn(g, caro_wei_weights(g)).ok

    def test_cap_weights_shape(self):
        g = cycle(5)
        assert cap_weights(g) == (Fraction(2, 5),) * 5

    def test_clique_cap_refusal(self):
        with pytest.raises(ValueError):
            lp_max_weight(turan(12, 6), clique_cap=2)


class TestWeightText:
    def test_round_trip(self):
        weights = (Fraction(1, 3), Fraction(2), Fraction(5, 7))
        assert parse_weights(format_weights(weights)) == weights

    def test_integers_accepted(self):
        assert parse_weights("1\n2/3\n") == (Fraction(1), Fraction(2, 3))
