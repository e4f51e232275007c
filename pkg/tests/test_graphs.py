
import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from copchase.graphs import (
    EdgeListError,
    Graph,
    Graph6Error,
    GraphError,
    bits,
    closed_nbhd,
    complement,
    components,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    diameter,
    enumerate_labeled_graphs,
    has_independent_set,
    independence_number,
    induced,
    is_connected,
    clique_number,
    labeled_graph_count,
    mask_of,
    non_nbhd,
    parse_edge_list,
    parse_graph6,
    path_graph,
    petersen_graph,
    star_graph,
    vertex_list,
    with_universal_vertex,
    write_edge_list,
    write_graph6,
)

from .conftest import brute_independence_number, graphs


def nx_of(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


class TestGraphType:
    def test_immutable_and_hashable(self):
        g = cycle_graph(5)
        with pytest.raises(AttributeError):
            g.n = 3
        assert hash(g) == hash(cycle_graph(5))
        assert g == cycle_graph(5)

    def test_validation(self):
        with pytest.raises(GraphError):
            Graph(2, (1, 0))  # asymmetric
        with pytest.raises(GraphError):
            Graph(1, (1,))  # self loop
        with pytest.raises(GraphError):
            Graph(1, (2,))  # bit out of range
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 2)])
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(1, 1)])

    def test_null_graph_is_a_value(self):
        g = Graph(0)
        assert g.n == 0 and g.edges() == []
        assert not is_connected(g)


class TestGraph6:
    def test_k2(self):
        assert write_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"
        assert parse_graph6("A_") == Graph.from_edges(2, [(0, 1)])

    def test_empty_two(self):
        assert write_graph6(Graph(2)) == "A?"
        assert parse_graph6("A?") == Graph(2)

    def test_header_prefix(self):
        assert parse_graph6(">>graph6<<A_") == Graph.from_edges(2, [(0, 1)])

    def test_roundtrip_exhaustive_small(self):
        for n in range(0, 6):
            for g in enumerate_labeled_graphs(n):
                s = write_graph6(g)
                assert parse_graph6(s) == g

    def test_reference_codec_agreement(self):
        # byte-level agreement with networkx in both directions
        for n in range(1, 6):
            for g in enumerate_labeled_graphs(n):
                s = write_graph6(g)
                assert nx.to_graph6_bytes(nx_of(g), header=False).decode().strip() == s
                H = nx.from_graph6_bytes(s.encode())
                assert set(H.edges()) == set(g.edges())

    @pytest.mark.parametrize(
        "line,offset",
        [
            ("", 0),  # empty
            ("~??", 0),  # n >= 63 size prefix
            (chr(40), 0),  # size byte below 63
            ("B" + chr(200), 1),  # data byte out of range
            ("B", 1),  # truncated
            ("A_?", 2),  # trailing garbage
        ],
    )
    def test_parse_errors_name_offsets(self, line, offset):
        with pytest.raises(Graph6Error) as ei:
            parse_graph6(line)
        assert ei.value.offset == offset

    def test_nonzero_padding_rejected(self):
        # K2's data byte is '_' = 0b100000; flip a padding bit
        bad = "A" + chr(63 + 0b110000)
        with pytest.raises(Graph6Error):
            parse_graph6(bad)

    def test_write_refuses_large(self):
        with pytest.raises(Graph6Error):
            write_graph6(Graph(63))

    @given(graphs(max_n=7))
    def test_roundtrip_property(self, g):
        assert parse_graph6(write_graph6(g)) == g


class TestEdgeList:
    def test_k2(self):
        assert parse_edge_list("2 1\n0 1") == Graph.from_edges(2, [(0, 1)])

    def test_empty_three(self):
        assert parse_edge_list("3 0") == Graph(3)

    def test_roundtrip_canonical(self):
        g = petersen_graph()
        text = write_edge_list(g)
        assert parse_edge_list(text) == g
        assert write_edge_list(parse_edge_list(text)) == text

    def test_duplicates_collapse(self):
        assert parse_edge_list("2 2\n0 1\n1 0") == Graph.from_edges(2, [(0, 1)])

    @pytest.mark.parametrize(
        "text",
        ["", "x y", "2 1\n0 0", "2 1\n0 5", "2 2\n0 1", "2 1\n0 one"],
    )
    def test_errors(self, text):
        with pytest.raises(EdgeListError):
            parse_edge_list(text)


class TestNeighbourhoods:
    def test_c5(self):
        g = cycle_graph(5)
        assert closed_nbhd(g, 0) == mask_of([4, 0, 1])
        assert non_nbhd(g, 0) == mask_of([2, 3])

    def test_k4_empty_m(self):
        g = complete_graph(4)
        assert all(non_nbhd(g, v) == 0 for v in range(4))

    def test_isolated(self):
        g = Graph(3)
        assert non_nbhd(g, 1) == mask_of([0, 2])

    @given(graphs(min_n=1))
    def test_partition(self, g):
        for v in range(g.n):
            assert closed_nbhd(g, v) | non_nbhd(g, v) == g.full_mask
            assert closed_nbhd(g, v) & non_nbhd(g, v) == 0


class TestComplement:
    def test_c5_self_complementary_shape(self):
        h = complement(cycle_graph(5))
        assert h.edge_count() == 5
        assert all(h.degree(v) == 2 for v in range(5))
        assert is_connected(h)

    def test_k4(self):
        assert complement(complete_graph(4)) == Graph(4)

    @given(graphs())
    def test_involution(self, g):
        assert complement(complement(g)) == g


class TestInducedAndComponents:
    def test_induced_c5_is_p3(self):
        sub, vlist = induced(cycle_graph(5), mask_of([0, 1, 2]))
        assert vlist == (0, 1, 2)
        assert sub == path_graph(3)

    def test_induced_rejects_stray_bits(self):
        with pytest.raises(GraphError):
            induced(cycle_graph(5), 1 << 6)

    def test_components_2k2(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert components(g) == [mask_of([0, 1]), mask_of([2, 3])]

    def test_connected(self):
        assert is_connected(petersen_graph())
        assert is_connected(Graph(1))
        assert not is_connected(Graph(2))

    @given(graphs(min_n=1), st.randoms())
    def test_spanning_subgraph_refines_components(self, g, rnd):
        edges = g.edges()
        kept = [e for e in edges if rnd.random() < 0.5]
        sub = Graph.from_edges(g.n, kept)
        comps = components(g)
        for sc in components(sub):
            assert any(sc & c == sc for c in comps)

    def test_diameter(self):
        assert diameter(cycle_graph(5)) == 2
        assert diameter(path_graph(4)) == 3
        assert diameter(Graph(2)) is None


class TestIndependenceClique:
    def test_examples(self):
        assert independence_number(cycle_graph(5)) == 2
        assert clique_number(cycle_graph(5)) == 2
        assert independence_number(petersen_graph()) == 4
        assert independence_number(star_graph(3)) == 3

    def test_brute_oracle_exhaustive_n4(self):
        for g in enumerate_labeled_graphs(4):
            assert independence_number(g) == brute_independence_number(g)

    @given(graphs(min_n=1, max_n=6))
    def test_brute_oracle_property(self, g):
        assert independence_number(g) == brute_independence_number(g)

    def test_alpha_equals_omega_of_complement_exhaustive(self):
        for n in range(1, 6):
            for g in enumerate_labeled_graphs(n):
                assert independence_number(g) == clique_number(complement(g))

    @given(graphs(min_n=1, max_n=6), st.integers(min_value=0, max_value=7))
    def test_has_independent_set_consistent(self, g, k):
        assert has_independent_set(g, k) == (k == 0 or independence_number(g) >= k)


class TestEnumeration:
    def test_counts(self):
        assert sum(1 for _ in enumerate_labeled_graphs(3)) == 8
        assert sum(1 for _ in enumerate_labeled_graphs(3, connected_only=True)) == 4
        assert sum(1 for _ in enumerate_labeled_graphs(1)) == 1
        assert sum(1 for _ in enumerate_labeled_graphs(4, connected_only=True)) == 38

    def test_unique(self):
        seen = {g.adj for g in enumerate_labeled_graphs(4)}
        assert len(seen) == labeled_graph_count(4) == 64

    def test_refuses_large_n(self):
        with pytest.raises(GraphError, match="graph6 corpus"):
            next(enumerate_labeled_graphs(8))

    def test_sharding_matches_full_stream(self):
        full = [g.adj for g in enumerate_labeled_graphs(4)]
        lo = [g.adj for g in enumerate_labeled_graphs(4, start=0, stop=40)]
        hi = [g.adj for g in enumerate_labeled_graphs(4, start=40)]
        assert lo + hi == full


class TestFactories:
    def test_wheel_is_c5_plus_universal(self):
        w5 = with_universal_vertex(cycle_graph(5))
        assert w5.n == 6 and w5.degree(5) == 5

    def test_bipartite(self):
        assert complete_bipartite_graph(2, 2).edge_count() == 4

    def test_petersen_shape(self):
        p = petersen_graph()
        assert p.n == 10 and p.edge_count() == 15
        assert all(p.degree(v) == 3 for v in range(10))
        assert vertex_list(mask_of([1, 5])) == [1, 5]
        assert list(bits(0b1010)) == [1, 3]
