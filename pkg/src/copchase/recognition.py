"""Induced-subgraph freeness tests and strongly-regular / bijoined theory.

All searches return the lexicographically least witness under vertex order
0..n-1 so reports and golden tests are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph, GraphError, bits, complement, is_connected


def find_induced_path(g: Graph, t: int) -> tuple[int, ...] | None:
    """Least ordered t-tuple inducing a path, or None.

    A path and its reverse are distinct tuples; the least over all ordered
    witnesses is returned.
    """
    if not 1 <= t <= 6:
        raise GraphError("induced path length must be between 1 and 6")
    n = g.n
    if t == 1:
        return (0,) if n else None
    adj = g.adj
    full = g.full_mask

    def extend(path: list[int], chosen: int, blocked: int):
        last = path[-1]
        if len(path) == t - 1:
            cand = adj[last] & ~chosen & ~blocked
            if cand:
                b = cand & -cand
                path.append(b.bit_length() - 1)
                return True
            return False
        for v in bits(adj[last] & ~chosen & ~blocked):
            path.append(v)
            if extend(path, chosen | (1 << v), blocked | adj[last]):
                return True
            path.pop()
        return False

    for v0 in range(n):
        path = [v0]
        if extend(path, 1 << v0, 0):
            return tuple(path)
    _ = full
    return None


def is_p5_free(g: Graph) -> bool:
    return find_induced_path(g, 5) is None


def find_induced_2k2(g: Graph) -> tuple[tuple[int, int], tuple[int, int]] | None:
    """Least pair of disjoint edges with no edges between them."""
    edges = g.edges()
    adj = g.adj
    for i, (a, b) in enumerate(edges):
        reach = adj[a] | adj[b] | (1 << a) | (1 << b)
        for c, d in edges[i + 1 :]:
            if not (reach >> c & 1) and not (reach >> d & 1):
                return (a, b), (c, d)
    return None


def is_2k2_free(g: Graph) -> bool:
    return find_induced_2k2(g) is None


def find_induced_c4(g: Graph) -> tuple[int, int, int, int] | None:
    """Least (a, b, c, d) inducing the 4-cycle a-b-c-d-a."""
    n = g.n
    adj = g.adj
    for a in range(n):
        for b in bits(adj[a] & ~((1 << (a + 1)) - 1)):
            for c in bits(adj[b] & ~adj[a] & ~(1 << a) & ~((1 << (a + 1)) - 1)):
                if c == b:
                    continue
                cand = adj[c] & adj[a] & ~adj[b] & ~((1 << (b + 1)) - 1)
                if cand:
                    d = (cand & -cand).bit_length() - 1
                    return (a, b, c, d)
    return None


def is_c4_free(g: Graph) -> bool:
    return find_induced_c4(g) is None


def find_clique4(g: Graph) -> tuple[int, int, int, int] | None:
    n = g.n
    adj = g.adj
    for a in range(n):
        for b in bits(adj[a] & ~((1 << (a + 1)) - 1)):
            common_ab = adj[a] & adj[b]
            for c in bits(common_ab & ~((1 << (b + 1)) - 1)):
                cand = common_ab & adj[c] & ~((1 << (c + 1)) - 1)
                if cand:
                    d = (cand & -cand).bit_length() - 1
                    return (a, b, c, d)
    return None


def is_k4_free(g: Graph) -> bool:
    return find_clique4(g) is None


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle; None for forests."""
    best: int | None = None
    n = g.n
    adj = g.adj
    for root in range(n):
        dist = {root: 0}
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for u in bits(adj[v]):
                    if u not in dist:
                        dist[u] = dist[v] + 1
                        nxt.append(u)
            frontier = nxt
        for v in dist:
            for u in bits(adj[v]):
                if u <= v or u not in dist:
                    continue
                # tree edges have |dist difference| 1 toward a unique parent;
                # any edge closing a walk gives a cycle bound through root
                if dist[u] + dist[v] + 1 >= 3 and not _is_tree_edge(g, root, u, v, dist):
                    cyc = dist[u] + dist[v] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def _is_tree_edge(g: Graph, root: int, u: int, v: int, dist: dict[int, int]) -> bool:
    # any edge between consecutive BFS levels could be a tree edge; edges
    # within a level never are.  Treating all cross-level edges as tree
    # edges would miss cycles, so only skip the unique-parent case.
    if abs(dist[u] - dist[v]) != 1:
        return False
    child = u if dist[u] > dist[v] else v
    parents = [w for w in bits(g.adj[child]) if dist.get(w, -2) == dist[child] - 1]
    return len(parents) == 1


@dataclass(frozen=True)
class SrgParams:
    """Strongly regular parameters (n, k, a, c)."""

    n: int
    k: int
    a: int
    c: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.a, self.c)


def srg_parameters(g: Graph) -> SrgParams | None:
    """Parameters of g if strongly regular, else None.

    Complete and edgeless graphs are rejected outright because one of the
    common-neighbour counts is undefined for them.
    """
    n = g.n
    if n == 0:
        raise GraphError("srg_parameters: null graph")
    m = g.edge_count()
    if m == n * (n - 1) // 2:
        raise GraphError("srg_parameters: complete graph has undefined c")
    if m == 0:
        raise GraphError("srg_parameters: edgeless graph has undefined a")
    adj = g.adj
    k = adj[0].bit_count()
    if any(row.bit_count() != k for row in adj):
        return None
    a = c = None
    for u in range(n):
        for v in range(u + 1, n):
            common = (adj[u] & adj[v]).bit_count()
            if adj[u] >> v & 1:
                if a is None:
                    a = common
                elif a != common:
                    return None
            else:
                if c is None:
                    c = common
                elif c != common:
                    return None
    assert a is not None and c is not None
    return SrgParams(n, k, a, c)


_MOORE_DEGREES = (2, 3, 7, 57)


@dataclass(frozen=True)
class MooreInfo:
    params: SrgParams
    degree_in_lookup: bool  # k is one of the feasible Moore degrees
    order_matches: bool  # n == k^2 + 1


def moore_info(g: Graph) -> MooreInfo | None:
    """SRG (n,k,0,1) check plus the known-degree lookup (cited result)."""
    if g.n == 0:
        return None
    m = g.edge_count()
    if m == 0 or m == g.n * (g.n - 1) // 2:
        return None
    p = srg_parameters(g)
    if p is None or p.a != 0 or p.c != 1:
        return None
    return MooreInfo(p, p.k in _MOORE_DEGREES, g.n == p.k * p.k + 1)


def is_moore(g: Graph) -> bool:
    return moore_info(g) is not None


def srg_feasible(p: SrgParams) -> bool:
    """Integer feasibility test: either 2k = (n-1)(c-a) or
    (a-c)^2 + 4(k-c) is a perfect square."""
    if 2 * p.k == (p.n - 1) * (p.c - p.a):
        return True
    d = (p.a - p.c) ** 2 + 4 * (p.k - p.c)
    if d < 0:
        return False
    r = math.isqrt(d)
    return r * r == d


BijoinedViolation = tuple  # ("pair", u, v, common_mask) | ("clique", (a,b,c,d))


def bijoined_violation(g: Graph) -> BijoinedViolation | None:
    """First violated bijoined condition, or None if g is bijoined.

    Graphs without nonadjacent pairs satisfy the common-neighbour condition
    vacuously, so K1 (and small complete graphs without a 4-clique) pass.
    """
    n = g.n
    adj = g.adj
    for u in range(n):
        for v in range(u + 1, n):
            if adj[u] >> v & 1:
                continue
            common = adj[u] & adj[v]
            if common.bit_count() != 2:
                return ("pair", u, v, common)
            x = (common & -common).bit_length() - 1
            y = (common & (common - 1)).bit_length() - 1
            if not (adj[x] >> y & 1):
                return ("pair", u, v, common)
    k4 = find_clique4(g)
    if k4 is not None:
        return ("clique", k4)
    return None


def is_bijoined(g: Graph) -> bool:
    return bijoined_violation(g) is None


def has_universal_vertex(g: Graph) -> int | None:
    for v in range(g.n):
        if g.adj[v].bit_count() == g.n - 1:
            return v
    return None


def moore_degree_lemma_premises(g: Graph) -> bool:
    """True iff girth >= 5 (forests count), every nonadjacent pair has
    exactly one common neighbour, and the complement is connected."""
    if g.n == 0:
        return False
    adj = g.adj
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if adj[u] >> v & 1:
                continue
            if (adj[u] & adj[v]).bit_count() != 1:
                return False
    gi = girth(g)
    if gi is not None and gi < 5:
        return False
    return is_connected(complement(g))


def is_regular(g: Graph) -> bool:
    if g.n == 0:
        return True
    k = g.adj[0].bit_count()
    return all(row.bit_count() == k for row in g.adj)
