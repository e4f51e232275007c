import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from copchase.graphs import Graph

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=8, connected=False):
    from copchase.graphs import is_connected

    n = draw(st.integers(min_value=min_n, max_value=max_n))
    m = n * (n - 1) // 2
    bits = draw(st.integers(min_value=0, max_value=(1 << m) - 1 if m else 0))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [pairs[k] for k in range(m) if bits >> k & 1]
    g = Graph.from_edges(n, edges)
    if connected and not is_connected(g):
        # densify until connected: join consecutive components
        from copchase.graphs import components, bits as bitsof

        comps = components(g)
        extra = []
        for c1, c2 in zip(comps, comps[1:]):
            extra.append((next(bitsof(c1)), next(bitsof(c2))))
        g = Graph.from_edges(n, edges + extra)
    return g


def brute_independence_number(g: Graph) -> int:
    best = 0
    for r in range(g.n, 0, -1):
        for comb in itertools.combinations(range(g.n), r):
            if all(not g.has_edge(u, v) for u, v in itertools.combinations(comb, 2)):
                return r
    return best


def brute_has_induced_path5(g: Graph) -> bool:
    """Independent oracle: some 5-subset induces a path (degree profile
    1,1,2,2,2 and connected)."""
    from copchase.graphs import induced, is_connected

    for comb in itertools.combinations(range(g.n), 5):
        mask = 0
        for v in comb:
            mask |= 1 << v
        sub, _ = induced(g, mask)
        degs = sorted(sub.degree(v) for v in range(5))
        if degs == [1, 1, 2, 2, 2] and is_connected(sub):
            return True
    return False


@pytest.fixture(scope="session")
def corpus_dir():
    from pathlib import Path

    d = Path(__file__).resolve().parent.parent / "corpora"
    if not d.exists():
        pytest.skip("corpora/ not generated")
    return d
