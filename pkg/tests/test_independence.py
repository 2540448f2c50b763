"""Independence number, independent-set streaming, chromatic number."""

import math
import random
from itertools import combinations

import pytest

from tlab import (
    alpha_exact,
    build_graph,
    caro_wei,
    chromatic_number_exact,
    clique_number,
    complement,
    complete,
    cycle,
    enumerate_independent_sets,
    turan,
)

PETERSEN = build_graph(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6),
                            (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)])


def random_graph(rng, n):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
    return build_graph(n, edges)


def brute_alpha(g):
    best = 0
    for size in range(g.n, 0, -1):
        for sub in combinations(range(g.n), size):
            if not any(g.has_edge(u, v) for u, v in combinations(sub, 2)):
                return size
    return best


class TestAlphaExact:
    def test_c5(self):
        res = alpha_exact(cycle(5))
        assert res.alpha == 2 and res.witness == (0, 2)

    def test_petersen_against_subset_oracle(self):
        assert brute_alpha(PETERSEN) == 4
        assert alpha_exact(PETERSEN).alpha == 4

    def test_turan_largest_part(self):
        assert alpha_exact(turan(10, 3)).alpha == 4
        assert alpha_exact(turan(9, 3)).alpha == 3

    def test_empty_graph(self):
        res = alpha_exact(build_graph(0, []))
        assert res.alpha == 0 and res.witness == ()

    def test_witness_is_independent_and_sized(self):
        rng = random.Random(23)
        for _ in range(50):
            g = random_graph(rng, rng.randrange(0, 10))
            res = alpha_exact(g)
            assert len(res.witness) == res.alpha
            assert not any(g.has_edge(u, v) for u, v in combinations(res.witness, 2))

    def test_matches_enumeration_and_complement_clique(self):
        rng = random.Random(29)
        for _ in range(40):
            g = random_graph(rng, rng.randrange(1, 10))
            a = alpha_exact(g).alpha
            assert a == max(len(s) for s in enumerate_independent_sets(g))
            assert a == clique_number(complement(g))

    def test_caro_wei_sanity_net(self):
        rng = random.Random(31)
        for _ in range(40):
            g = random_graph(rng, rng.randrange(1, 10))
            assert alpha_exact(g).alpha >= math.ceil(caro_wei(g))


class TestEnumerateIndependentSets:
    def test_triangle(self):
        assert list(enumerate_independent_sets(complete(3))) == [(), (0,), (1,), (2,)]

    def test_edgeless_power_set(self):
        assert len(list(enumerate_independent_sets(build_graph(3, [])))) == 8

    def test_c5_count(self):
        sets = list(enumerate_independent_sets(cycle(5)))
        assert len(sets) == 11
        assert len(set(sets)) == 11

    def test_cap_refusal_mentions_override(self):
        with pytest.raises(ValueError, match="max_n"):
            list(enumerate_independent_sets(turan(24, 2)))


class TestChromaticNumber:
    def test_odd_cycle(self):
        assert chromatic_number_exact(cycle(5)) == 3

    def test_bipartite(self):
        assert chromatic_number_exact(turan(6, 2)) == 2

    def test_petersen(self):
        assert chromatic_number_exact(PETERSEN) == 3

    def test_empty_and_edgeless(self):
        assert chromatic_number_exact(build_graph(0, [])) == 0
        assert chromatic_number_exact(build_graph(4, [])) == 1

    def test_complete(self):
        assert chromatic_number_exact(complete(6)) == 6

    def test_lower_bounds(self):
        rng = random.Random(37)
        for _ in range(25):
            g = random_graph(rng, rng.randrange(1, 9))
            chi = chromatic_number_exact(g)
            assert chi >= clique_number(g)
            assert chi * alpha_exact(g).alpha >= g.n

    def test_cap_refusal(self):
        with pytest.raises(ValueError, match="max_n"):
            chromatic_number_exact(turan(24, 2))
