
import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from copchase.graphs import (
    Graph,
    GraphError,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    enumerate_labeled_graphs,
    induced,
    path_graph,
    petersen_graph,
    star_graph,
    with_universal_vertex,
)
from copchase.recognition import (
    MooreInfo,
    SrgParams,
    bijoined_violation,
    find_clique4,
    find_induced_2k2,
    find_induced_c4,
    find_induced_path,
    girth,
    has_universal_vertex,
    is_2k2_free,
    is_bijoined,
    is_c4_free,
    is_k4_free,
    is_moore,
    is_p5_free,
    is_regular,
    moore_degree_lemma_premises,
    moore_info,
    srg_feasible,
    srg_parameters,
)

from .conftest import brute_has_induced_path5, graphs


def nx_of(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


class TestInducedPath:
    def test_c5_is_p5_free(self):
        assert find_induced_path(cycle_graph(5), 5) is None
        assert is_p5_free(cycle_graph(5))

    def test_p5_witness(self):
        assert find_induced_path(path_graph(5), 5) == (0, 1, 2, 3, 4)

    def test_petersen_has_p5(self):
        w = find_induced_path(petersen_graph(), 5)
        assert w is not None
        self._assert_induced_path(petersen_graph(), w)

    def test_range_checks(self):
        with pytest.raises(GraphError):
            find_induced_path(cycle_graph(5), 0)
        with pytest.raises(GraphError):
            find_induced_path(cycle_graph(5), 7)
        assert find_induced_path(Graph(0), 1) is None
        assert find_induced_path(Graph(3), 1) == (0,)

    @staticmethod
    def _assert_induced_path(g, w):
        for i, u in enumerate(w):
            for j in range(i + 1, len(w)):
                assert g.has_edge(u, w[j]) == (j == i + 1)

    def test_naive_oracle_exhaustive_n5(self):
        for g in enumerate_labeled_graphs(5):
            assert is_p5_free(g) == (not brute_has_induced_path5(g))

    @given(graphs(min_n=5, max_n=7))
    def test_naive_oracle_property(self, g):
        assert is_p5_free(g) == (not brute_has_induced_path5(g))

    @given(graphs(min_n=2, max_n=7), st.randoms())
    def test_p5_freeness_is_hereditary(self, g, rnd):
        if not is_p5_free(g):
            return
        v = rnd.randrange(g.n)
        sub, _ = induced(g, g.full_mask & ~(1 << v))
        assert is_p5_free(sub)

    def test_witness_is_least(self):
        # two disjoint P5s: witness must start in the lower-labeled one
        g = Graph.from_edges(10, [(i, i + 1) for i in range(4)] + [(i, i + 1) for i in range(5, 9)])
        assert find_induced_path(g, 5) == (0, 1, 2, 3, 4)


class TestOtherFreeness:
    def test_2k2(self):
        assert is_2k2_free(cycle_graph(5))
        assert find_induced_2k2(path_graph(5)) == ((0, 1), (3, 4))
        assert not is_2k2_free(path_graph(5))

    def test_c4(self):
        assert find_induced_c4(complete_bipartite_graph(2, 2)) == (0, 2, 1, 3)
        assert not is_c4_free(complete_bipartite_graph(2, 2))
        assert is_c4_free(complete_graph(4))  # chords kill induced C4s

    def test_k4(self):
        assert find_clique4(complete_graph(4)) == (0, 1, 2, 3)
        assert not is_k4_free(complete_graph(5))
        assert is_k4_free(petersen_graph())

    @given(graphs(max_n=7))
    def test_c4_witness_valid(self, g):
        w = find_induced_c4(g)
        if w is None:
            return
        a, b, c, d = w
        assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d) and g.has_edge(d, a)
        assert not g.has_edge(a, c) and not g.has_edge(b, d)


class TestGirth:
    def test_examples(self):
        assert girth(petersen_graph()) == 5
        assert girth(cycle_graph(4)) == 4
        assert girth(path_graph(5)) is None

    def test_networkx_oracle_exhaustive(self):
        for n in range(1, 6):
            for g in enumerate_labeled_graphs(n):
                expect = nx.girth(nx_of(g))
                assert girth(g) == (None if expect == float("inf") else expect)

    @given(graphs(min_n=6, max_n=8))
    def test_networkx_oracle_property(self, g):
        expect = nx.girth(nx_of(g))
        assert girth(g) == (None if expect == float("inf") else expect)


class TestSrg:
    def test_c5(self):
        assert srg_parameters(cycle_graph(5)) == SrgParams(5, 2, 0, 1)

    def test_petersen(self):
        assert srg_parameters(petersen_graph()) == SrgParams(10, 3, 0, 1)

    def test_p4_not_srg(self):
        assert srg_parameters(path_graph(4)) is None

    def test_rejects_degenerate(self):
        with pytest.raises(GraphError):
            srg_parameters(complete_graph(3))
        with pytest.raises(GraphError):
            srg_parameters(Graph(3))
        with pytest.raises(GraphError):
            srg_parameters(Graph(0))

    def test_moore(self):
        info = moore_info(petersen_graph())
        assert info == MooreInfo(SrgParams(10, 3, 0, 1), True, True)
        assert is_moore(cycle_graph(5))
        assert not is_moore(cycle_graph(4))
        assert not is_moore(complete_graph(4))

    @pytest.mark.parametrize(
        "params,expected",
        [
            (SrgParams(5, 2, 0, 1), True),
            (SrgParams(10, 3, 0, 1), True),
            (SrgParams(41, 10, 3, 2), False),
            (SrgParams(3250, 57, 0, 1), True),
        ],
    )
    def test_feasibility(self, params, expected):
        assert srg_feasible(params) is expected

    def test_existing_srgs_are_feasible(self):
        # existence implies feasibility on everything small we can reach
        for n in range(3, 7):
            for g in enumerate_labeled_graphs(n):
                m = g.edge_count()
                if m == 0 or m == n * (n - 1) // 2:
                    continue
                p = srg_parameters(g)
                if p is not None:
                    assert srg_feasible(p), p


class TestBijoined:
    def test_w5(self):
        w5 = with_universal_vertex(cycle_graph(5))
        assert is_bijoined(w5)
        assert has_universal_vertex(w5) == 5

    def test_k4(self):
        v = bijoined_violation(complete_graph(4))
        assert v is not None and v[0] == "clique"

    def test_k1_trivially_bijoined(self):
        assert is_bijoined(Graph(1))

    def test_pair_violation(self):
        v = bijoined_violation(cycle_graph(5))
        assert v is not None and v[0] == "pair"

    def test_moore_plus_universal_is_bijoined(self):
        assert is_bijoined(with_universal_vertex(petersen_graph()))

    def test_universal_vertex(self):
        assert has_universal_vertex(cycle_graph(5)) is None
        assert has_universal_vertex(Graph(1)) == 0
        assert has_universal_vertex(star_graph(3)) == 0

    def test_universal_implies_bijoined_needs_structure(self):
        # K1,3 has a universal vertex yet is not bijoined (leaves share only it)
        assert not is_bijoined(star_graph(3))


class TestDegreePremises:
    def test_examples(self):
        assert moore_degree_lemma_premises(petersen_graph())
        assert moore_degree_lemma_premises(cycle_graph(5))
        assert not moore_degree_lemma_premises(cycle_graph(6))
        assert not moore_degree_lemma_premises(Graph(0))

    def test_premises_force_regularity_exhaustive_n6(self):
        for n in range(1, 7):
            for g in enumerate_labeled_graphs(n):
                if moore_degree_lemma_premises(g):
                    assert is_regular(g)

    def test_bijoined_has_universal_exhaustive_n6(self):
        for n in range(1, 7):
            for g in enumerate_labeled_graphs(n):
                if is_bijoined(g):
                    assert has_universal_vertex(g) is not None
