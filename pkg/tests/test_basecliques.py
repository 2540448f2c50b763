"""Base cliques, their contexts, and the two averaging inequalities."""

from fractions import Fraction

import pytest

from tlab import (
    base_clique_context,
    base_cliques,
    c5_blowup,
    clique_chain,
    complete,
    cycle,
    eval_averaging_inequality,
    eval_single_lost_color,
    f_K_weights,
    induced_subgraph,
    uniform_weights,
    validate_weight_fn,
)
from tlab.corpus import enumerate_labeled_graphs


class TestBaseCliques:
    def test_c5_all_edges(self):
        assert base_cliques(cycle(5)) == ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))

    def test_k4_whole_graph(self):
        assert base_cliques(complete(4)) == ((0, 1, 2, 3),)

    def test_clique_chain_non_bridge_pairs(self):
        assert base_cliques(clique_chain([3, 3])) == ((1, 2), (4, 5))

    def test_c5_blowup_includes_joined_neighbor(self):
        # min degree t+1 covers both blobs and the two joined cycle vertices;
        # a blob plus its joined neighbor is the largest clique among them
        assert base_cliques(c5_blowup(2)) == ((1, 2, 3), (4, 5, 6))


class TestBaseCliqueContext:
    def test_c5_edge(self):
        ctx = base_clique_context(cycle(5), (0, 1))
        assert ctx.A == () and ctx.U == (2, 4)
        assert ctx.ell == 1 and ctx.D == 1 and ctx.delta == 2

    def test_complete_graph_degenerate(self):
        ctx = base_clique_context(complete(5), tuple(range(5)))
        assert ctx.A == () and ctx.U == () and ctx.ell == 0 and ctx.D == 0

    def test_c5_blowup_context(self):
        ctx = base_clique_context(c5_blowup(2), (1, 2, 3))
        assert ctx.delta == 3
        assert ctx.A == () and ctx.U == (0, 4)
        assert ctx.ell == 1 and ctx.D == 2

    def test_rejects_non_base_clique(self):
        with pytest.raises(ValueError):
            base_clique_context(cycle(5), (0, 2))

    def test_uniform_attachment_on_small_corpus(self):
        # every vertex of a base clique has exactly ell neighbors in U
        for n in range(1, 6):
            for g in enumerate_labeled_graphs(n):
                for k in base_cliques(g):
                    ctx = base_clique_context(g, k)
                    assert ctx.ell >= 0
                    if ctx.U:
                        assert 1 <= ctx.D <= len(ctx.K) - 1
                    else:
                        assert ctx.D == 0

    def test_json_round_trippable(self):
        ctx = base_clique_context(cycle(5), (0, 1))
        js = ctx.to_json()
        assert js["K"] == [0, 1] and js["ell"] == 1


class TestFKWeights:
    def test_c5_path_weights(self):
        assert f_K_weights(cycle(5), (0, 1)) == (Fraction(1, 2), Fraction(2, 5), Fraction(1, 2))

    def test_whole_graph_leaves_nothing(self):
        assert f_K_weights(complete(4), (0, 1, 2, 3)) == ()

    def test_satisfies_main_theorem_hypotheses(self):
        for n in range(2, 6):
            for g in enumerate_labeled_graphs(n):
                for k in base_cliques(g):
                    rest = [v for v in range(g.n) if v not in k]
                    sub, _ = induced_subgraph(g, rest)
                    weights = f_K_weights(g, k)
                    if sub.n:
                        assert validate_weight_fn(sub, weights).ok


class TestInequalityEvaluators:
    def test_single_lost_color_c5(self):
        lhs, rhs = eval_single_lost_color(cycle(5), (0, 1), 0,
                                          uniform_weights(cycle(5), Fraction(2, 5)))
        assert lhs == Fraction(1, 5) and rhs == Fraction(3, 10)

    def test_symmetric_under_automorphism(self):
        f = uniform_weights(cycle(5), Fraction(2, 5))
        assert eval_single_lost_color(cycle(5), (0, 1), 0, f) == \
            eval_single_lost_color(cycle(5), (0, 1), 1, f)

    def test_defaults_to_cap_weights(self):
        lhs, rhs = eval_single_lost_color(cycle(5), (0, 1), 0)
        assert lhs == Fraction(1, 5) and rhs == Fraction(3, 10)

    def test_vertex_outside_clique_rejected(self):
        with pytest.raises(ValueError):
            eval_single_lost_color(cycle(5), (0, 1), 3)

    def test_invalid_weights_rejected(self):
        with pytest.raises(ValueError):
            eval_single_lost_color(cycle(5), (0, 1), 0, uniform_weights(cycle(5), 1))

    def test_empty_u_gives_zero_rhs(self):
        lhs, rhs = eval_single_lost_color(complete(4), (0, 1, 2, 3), 0)
        assert rhs == 0

    def test_averaging_c5(self):
        lhs, rhs = eval_averaging_inequality(cycle(5), (0, 1))
        assert lhs == Fraction(7, 10) and rhs == Fraction(5, 6)

    def test_averaging_empty_u(self):
        lhs, rhs = eval_averaging_inequality(complete(4), (0, 1, 2, 3))
        assert rhs == 0

    def test_averaging_clique_chain(self):
        # K = a non-bridge pair: A is the bridge vertex, U is empty
        lhs, rhs = eval_averaging_inequality(clique_chain([3, 3]), (1, 2))
        assert lhs == Fraction(-3, 10) and rhs == 0
