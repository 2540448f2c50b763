"""Graph construction, graph6 I/O, and generator families."""

import random

import pytest
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from tlab import (
    Graph,
    Graph6Error,
    alpha_exact,
    bipartite_minus_matching,
    build_graph,
    c5_blowup,
    c7_blowup,
    clique_chain,
    complement,
    complete,
    cycle,
    degree_stats,
    encode_graph6,
    format_edge_list,
    generate,
    induced_subgraph,
    parse_edge_list,
    parse_graph6,
    turan,
)


def random_graph(rng, n):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
    return build_graph(n, edges)


def reference_decode(line):
    """Independent, string-based graph6 reader used as the layout oracle."""
    n = ord(line[0]) - 63
    bitstream = "".join(format(ord(ch) - 63, "06b") for ch in line[1:])
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    edges = {p for p, b in zip(pairs, bitstream) if b == "1"}
    return n, edges


class TestBuildGraph:
    def test_single_edge(self):
        g = build_graph(2, [(0, 1)])
        assert g.edge_count() == 1 and g.has_edge(0, 1)

    def test_cycle_construction(self):
        g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
        assert [g.degree(v) for v in range(5)] == [2] * 5

    def test_duplicate_edges_collapse(self):
        g = build_graph(3, [(0, 1), (0, 1), (1, 0)])
        assert g.edge_count() == 1

    def test_rejects_loop(self):
        with pytest.raises(ValueError):
            build_graph(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            build_graph(3, [(0, 3)])

    def test_symmetry_validated_on_construction(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0b00))


class TestGraph6:
    def test_single_vertex_is_at_sign(self):
        assert encode_graph6(build_graph(1, [])) == "@"
        g = parse_graph6("@")
        assert g.n == 1 and g.edge_count() == 0

    def test_empty_graph(self):
        assert encode_graph6(build_graph(0, [])) == "?"
        assert parse_graph6("?").n == 0

    def test_c5_round_trip(self):
        g = cycle(5)
        assert parse_graph6(encode_graph6(g)) == g

    def test_known_line_against_reference(self):
        line = encode_graph6(cycle(5))
        n, edges = reference_decode(line)
        assert n == 5
        assert edges == {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}

    def test_trailing_newline_tolerated(self):
        assert parse_graph6("Dhc\n") == cycle(5)

    def test_byte_out_of_range(self):
        with pytest.raises(Graph6Error) as err:
            parse_graph6("D" + chr(20))
        assert err.value.offset == 1

    def test_truncated(self):
        with pytest.raises(Graph6Error):
            parse_graph6("D")

    def test_trailing_garbage(self):
        with pytest.raises(Graph6Error) as err:
            parse_graph6("DhcQ")
        assert err.value.offset == 3

    def test_oversized_rejected(self):
        with pytest.raises(ValueError):
            encode_graph6(turan(63, 3))

    def test_determinism(self):
        g = turan(9, 3)
        assert encode_graph6(g) == encode_graph6(g)

    def test_round_trip_random_corpus(self):
        rng = random.Random(7)
        for _ in range(200):
            g = random_graph(rng, rng.randrange(0, 33))
            line = encode_graph6(g)
            assert parse_graph6(line) == g
            n, edges = reference_decode(line)
            assert n == g.n and sorted(edges) == g.edges()

    @given(st.integers(0, 2 ** 28 - 1), st.integers(2, 8))
    def test_round_trip_property(self, mask, n):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = [p for i, p in enumerate(pairs) if (mask >> i) & 1]
        g = build_graph(n, edges)
        assert parse_graph6(encode_graph6(g)) == g


class TestDegreeStats:
    def test_c5(self):
        s = degree_stats(cycle(5))
        assert s.degrees == (2,) * 5 and s.delta == 2 and s.edge_count == 5
        assert s.avg_degree == 2

    def test_c5_blowup3(self):
        s = degree_stats(c5_blowup(3))
        assert sorted(s.degrees) == [4] * 8 + [6]
        assert s.edge_count == 19

    def test_k33(self):
        s = degree_stats(turan(6, 2))
        assert s.degrees == (3,) * 6 and s.edge_count == 9

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            degree_stats(build_graph(0, []))

    def test_handshake_on_generators(self):
        for g in (cycle(7), complete(5), turan(10, 3), bipartite_minus_matching(8, 2),
                  c5_blowup(4), c7_blowup(2), clique_chain([3, 4, 2])):
            s = degree_stats(g)
            assert sum(s.degrees) == 2 * s.edge_count


class TestComplement:
    def test_complete_to_edgeless(self):
        assert complement(complete(4)).edge_count() == 0

    def test_c5_self_complementary(self):
        c = complement(cycle(5))
        assert c.edges() == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
        assert sorted(c.degree(v) for v in range(5)) == [2] * 5

    def test_turan_complement_is_clique_union(self):
        c = complement(turan(6, 2))
        assert sorted(c.edges()) == [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]

    def test_involution(self):
        rng = random.Random(3)
        for _ in range(30):
            g = random_graph(rng, rng.randrange(0, 12))
            assert complement(complement(g)) == g


class TestInducedSubgraph:
    def test_c5_minus_closed_neighborhood(self):
        g = cycle(5)
        keep = [2, 3]
        sub, mapping = induced_subgraph(g, keep)
        assert sub == build_graph(2, [(0, 1)]) and mapping == (2, 3)

    def test_full_set_identity(self):
        g = turan(7, 3)
        sub, mapping = induced_subgraph(g, range(7))
        assert sub == g and mapping == tuple(range(7))

    def test_empty_set(self):
        sub, mapping = induced_subgraph(cycle(5), [])
        assert sub.n == 0 and mapping == ()


class TestGenerators:
    def test_turan_62(self):
        g = turan(6, 2)
        assert g.edge_count() == 9
        assert alpha_exact(g).alpha == 3

    def test_turan_parts_balanced(self):
        g = turan(10, 3)
        # parts 4,3,3: edges = C(10,2) - C(4,2) - 2*C(3,2)
        assert g.edge_count() == 45 - 6 - 3 - 3

    def test_c5_blowup_alpha(self):
        g = c5_blowup(3)
        assert g.n == 9 and g.edge_count() == 19
        assert alpha_exact(g).alpha == 2

    def test_c5_blowup_degree_multiset(self):
        for t in (1, 2, 5):
            degs = sorted(degree_stats(c5_blowup(t)).degrees)
            assert degs == [t + 1] * (2 * t + 2) + [2 * t]

    def test_c5_blowup_threshold_identity(self):
        for t in range(1, 11):
            s = degree_stats(c5_blowup(t))
            n = 2 * t + 3
            assert 2 * (s.avg_degree + 1) - n == Fraction(4 * t + 1, 2 * t + 3)

    def test_bipartite_minus_matching(self):
        g = bipartite_minus_matching(8, 2)
        assert g.edge_count() == 14
        assert not g.has_edge(0, 4) and not g.has_edge(1, 5) and g.has_edge(2, 6)

    def test_c7_blowup_structure(self):
        g = c7_blowup(2)
        assert g.n == 10
        degs = sorted(degree_stats(g).degrees)
        assert degs == [3] * 8 + [4] * 2

    def test_clique_chain(self):
        g = clique_chain([3, 3])
        assert g.edge_count() == 7
        assert degree_stats(g).delta == 2

    def test_generate_dispatch(self):
        assert generate("turan", 6, 2) == turan(6, 2)
        assert generate("clique_chain", 3, 3) == clique_chain([3, 3])
        with pytest.raises(ValueError):
            generate("frobnicate", 3)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            bipartite_minus_matching(7, 1)
        with pytest.raises(ValueError):
            bipartite_minus_matching(8, 5)
        with pytest.raises(ValueError):
            turan(3, 5)
        with pytest.raises(ValueError):
            cycle(2)
        with pytest.raises(ValueError):
            c5_blowup(0)


class TestEdgeListText:
    def test_round_trip(self):
        g = c5_blowup(2)
        assert parse_edge_list(format_edge_list(g)) == g

    def test_header_checked(self):
        with pytest.raises(ValueError):
            parse_edge_list("3 2\n0 1\n")
