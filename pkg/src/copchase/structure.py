"""Structural searches: domineering paths, dominating pairs, retracts,
P3-connected subgraphs with certificates, and snare construction.

Every search returns the lexicographically least witness under vertex order
0..n-1; BFS ties break toward least vertices.  This keeps transcripts and
golden tests reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import (
    Graph,
    GraphError,
    bits,
    closed_nbhd,
    connected_within,
    induced,
    mask_of,
    non_nbhd,
    shortest_path,
)
from .recognition import find_induced_path

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------------------
# domineering paths
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DomineeringPath:
    """Induced path a-b-c such that every neighbour of c is adjacent to a or b."""

    a: int
    b: int
    c: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def is_domineering(g: Graph, a: int, b: int, c: int) -> bool:
    if len({a, b, c}) != 3:
        raise GraphError("domineering check needs three distinct vertices")
    adj = g.adj
    if not (adj[a] >> b & 1 and adj[b] >> c & 1) or adj[a] >> c & 1:
        return False
    return adj[c] & ~(adj[a] | adj[b]) == 0


def find_domineering_3path(g: Graph) -> DomineeringPath | None:
    n = g.n
    adj = g.adj
    for a in range(n):
        for b in bits(adj[a]):
            cover = adj[a] | adj[b]
            for c in bits(adj[b] & ~adj[a] & ~(1 << a)):
                if adj[c] & ~cover == 0:
                    return DomineeringPath(a, b, c)
    return None


def find_weak_domineering(g: Graph) -> tuple[int, int, int] | None:
    """Least distinct (a, b, c) with edges ab, bc (ac allowed) and
    N(c) contained in N(a) union N(b)."""
    n = g.n
    adj = g.adj
    for a in range(n):
        for b in bits(adj[a]):
            cover = adj[a] | adj[b]
            for c in bits(adj[b] & ~(1 << a)):
                if adj[c] & ~cover == 0:
                    return (a, b, c)
    return None


# ---------------------------------------------------------------------------
# dominating pairs and retracts
# ---------------------------------------------------------------------------


def dominating_pair(g: Graph) -> tuple[int, int] | None:
    """Least (u, v), possibly u = v, with N[u] | N[v] = V; None if no pair
    of size at most two dominates.  Guaranteed present when alpha(g) <= 2."""
    if g.n == 0:
        raise GraphError("dominating_pair: null graph")
    full = g.full_mask
    closed = [closed_nbhd(g, v) for v in range(g.n)]
    for u in range(g.n):
        if closed[u] == full:
            return (u, u)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if closed[u] | closed[v] == full:
                return (u, v)
    return None


def find_retract(g: Graph, v: int) -> tuple[int, int] | None:
    """Least u in N(v) complete to some component of G[M(v)], with that
    component's mask; None if no neighbour of v swallows a component."""
    m = non_nbhd(g, v)
    if m == 0:
        return None
    comps = []
    rest = m
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & m & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    for u in bits(g.adj[v]):
        for comp in comps:
            if g.adj[u] & comp == comp:
                return (u, comp)
    return None


# ---------------------------------------------------------------------------
# P3-connected subgraphs
# ---------------------------------------------------------------------------


@dataclass
class P3Subgraph:
    """Subgraph with a P3-connectivity certificate against its host graph.

    ``cert`` maps each edge to a parent edge such that the two form an
    induced P3 in the host (shared endpoint, outer endpoints non-adjacent);
    ``root`` maps to None.  The parent pointers span all edges, which makes
    P3-connectivity re-checkable in linear time and lets the snare walk read
    off an edge sequence without re-deriving it.
    """

    host: Graph
    vertices: int
    edges: frozenset[Edge]
    root: Edge | None
    cert: dict[Edge, Edge | None] = field(default_factory=dict)

    def has_vertex(self, v: int) -> bool:
        return bool(self.vertices >> v & 1)


def _edges_p3_adjacent(g: Graph, e: Edge, f: Edge) -> bool:
    shared = set(e) & set(f)
    if len(shared) != 1:
        return False
    (s,) = shared
    x = e[0] if e[1] == s else e[1]
    y = f[0] if f[1] == s else f[1]
    return not g.has_edge(x, y)


def is_p3_connected(
    g: Graph,
    vertices: int,
    edges,
    root: Edge | None = None,
) -> P3Subgraph | None:
    """Certificate that the subgraph (vertices, edges) is P3-connected in g.

    Returns None when the subgraph is disconnected or when the edge set does
    not chain through induced P3s of the host.  Single-vertex and
    single-edge subgraphs are vacuously P3-connected.  The certificate tree
    is rooted at ``root`` (default: least edge).
    """
    edges = frozenset(_edge(u, v) for u, v in edges)
    for u, v in edges:
        if not (vertices >> u & 1 and vertices >> v & 1):
            raise GraphError(f"edge ({u},{v}) leaves the vertex set")
        if not g.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) is not a host edge")
    if vertices == 0:
        raise GraphError("empty subgraph")
    # subgraph connectivity using only its own edges
    touched = 0
    for u, v in edges:
        touched |= (1 << u) | (1 << v)
    isolated = vertices & ~touched
    if edges:
        if isolated:
            return None
        seed = vertices & -vertices
        seen = seed
        grew = True
        while grew:
            grew = False
            for u, v in edges:
                mu, mv = 1 << u, 1 << v
                if (seen & mu) and not (seen & mv):
                    seen |= mv
                    grew = True
                elif (seen & mv) and not (seen & mu):
                    seen |= mu
                    grew = True
        if seen != vertices:
            return None
    elif vertices.bit_count() != 1:
        return None
    if not edges:
        return P3Subgraph(g, vertices, edges, None, {})
    ordered = sorted(edges)
    if root is None:
        root = ordered[0]
    else:
        root = _edge(*root)
        if root not in edges:
            raise GraphError("root edge not in the subgraph")
    cert: dict[Edge, Edge | None] = {root: None}
    frontier = [root]
    while frontier:
        nxt = []
        for e in frontier:
            for f in ordered:
                if f not in cert and _edges_p3_adjacent(g, e, f):
                    cert[f] = e
                    nxt.append(f)
        frontier = nxt
    if len(cert) != len(edges):
        return None
    return P3Subgraph(g, vertices, edges, root, cert)


def validate_p3(h: P3Subgraph) -> bool:
    """Re-check every P3Subgraph invariant directly."""
    g = h.host
    touched = 0
    for u, v in h.edges:
        if not g.has_edge(u, v) or not (h.has_vertex(u) and h.has_vertex(v)):
            return False
        touched |= (1 << u) | (1 << v)
    if h.edges:
        if h.vertices & ~touched:
            return False
    elif h.vertices.bit_count() != 1:
        return False
    if not h.edges:
        return h.root is None
    if h.root not in h.edges or set(h.cert) != set(h.edges):
        return False
    for e, parent in h.cert.items():
        if parent is None:
            if e != h.root:
                return False
            continue
        if parent not in h.edges or not _edges_p3_adjacent(g, e, parent):
            return False
    # rooted: every edge reaches the root through parents.  A valid rooted
    # tree of induced-P3 pairs IS the P3-connectivity proof, so this check
    # stays linear; no search is re-run.
    for e in h.edges:
        seen = set()
        cur: Edge | None = e
        while cur is not None:
            if cur in seen:
                return False
            seen.add(cur)
            cur = h.cert[cur]
        if h.root not in seen:
            return False
    return True


def _path_subgraph(g: Graph, path: list[int]) -> P3Subgraph:
    """P3Subgraph for an induced path (shortest paths qualify)."""
    verts = mask_of(path)
    edges = [_edge(path[i], path[i + 1]) for i in range(len(path) - 1)]
    cert: dict[Edge, Edge | None] = {}
    root = edges[0] if edges else None
    for i, e in enumerate(edges):
        cert[e] = edges[i - 1] if i else None
    return P3Subgraph(g, verts, frozenset(edges), root, cert)


# ---------------------------------------------------------------------------
# P3-connected expansion
# ---------------------------------------------------------------------------


@dataclass
class Extended:
    """The subgraph grew to include v, keeping all previous edges."""

    h: P3Subgraph


@dataclass
class Apex:
    """v joined through a path ending at u, and u is complete to the old
    vertex set inside the new subgraph (old edges dropped)."""

    h: P3Subgraph
    u: int


@dataclass
class Complete:
    """v itself is complete to the old vertex set in the ambient graph."""


ExpansionResult = Extended | Apex | Complete


def p3_expand(g: Graph, h: P3Subgraph, v: int) -> ExpansionResult:
    """Grow a P3-connected subgraph toward v along a shortest path.

    Deterministic: the BFS path breaks ties toward least vertices, and the
    re-anchor edge is the least (x, w) with vx an edge and vw a non-edge at
    the path's second-to-last vertex.
    """
    if h.has_vertex(v):
        return Extended(h)
    path = shortest_path(g, v, h.vertices)
    if path is None:
        raise GraphError(f"vertex {v} cannot reach the subgraph (disconnected host)")
    u = path[-2]
    non_nb = h.vertices & ~g.adj[u]
    if non_nb:
        anchor = None
        for p, q in sorted(h.edges):
            for x, w in ((p, q), (q, p)):
                if g.adj[u] >> x & 1 and not g.adj[u] >> w & 1:
                    if anchor is None or (x, w) < anchor:
                        anchor = (x, w)
        assert anchor is not None  # h connected with a neighbour and a non-neighbour of u
        x, w = anchor
        q_path = path[:-1] + [x]
        verts = h.vertices | mask_of(q_path)
        edges = set(h.edges)
        cert = dict(h.cert)
        prev = _edge(x, w)
        for i in range(len(q_path) - 2, -1, -1):
            e = _edge(q_path[i], q_path[i + 1])
            if e not in edges:
                edges.add(e)
                cert[e] = prev
            prev = e
        return Extended(P3Subgraph(g, verts, frozenset(edges), h.root, cert))
    # u is complete to V(h)
    if len(path) == 2:
        return Complete()
    verts = h.vertices | mask_of(path)
    edges = set()
    cert = {}
    path_edges = [_edge(path[i], path[i + 1]) for i in range(len(path) - 1)]
    for i, e in enumerate(path_edges):
        edges.add(e)
        cert[e] = path_edges[i - 1] if i else None
    hook = path_edges[-2]  # (v_{l-2}, u): outer endpoint cannot touch V(h)
    for w in bits(h.vertices):
        e = _edge(u, w)
        if e not in edges:
            edges.add(e)
            cert[e] = hook
    return Apex(P3Subgraph(g, verts, frozenset(edges), path_edges[0], cert), u)


# ---------------------------------------------------------------------------
# snares
# ---------------------------------------------------------------------------


@dataclass
class Snare:
    """P3-connected trap: once the cops occupy the entry edge (d1, d2) they
    can pivot through the certificate to an edge at ``a`` and then onto
    {a, b}, after which the robber has no safe reply.

    ``case`` records which construction branch produced it, including any
    cop renaming.
    """

    h: P3Subgraph
    d1: int
    d2: int
    a: int
    b: int
    r: int
    witness_mb: int
    case: str = ""


class SnareError(GraphError):
    """A snare precondition failed; on valid inputs this falsifies the
    structural claims the construction relies on."""


def snare_violations(g: Graph, s: Snare, c1: int, c2: int) -> list[str]:
    out = []
    if not validate_p3(s.h):
        out.append("H1: subgraph is not P3-connected with a valid certificate")
    if s.h.vertices & closed_nbhd(g, s.r):
        out.append("H2: subgraph meets N[r]")
    entry = _edge(s.d1, s.d2)
    if entry not in s.h.edges:
        out.append("H3: entry edge not in the subgraph")
    elif not (closed_nbhd(g, c1) >> s.d1 & 1 and closed_nbhd(g, c2) >> s.d2 & 1):
        out.append("H3: entry edge not reachable in one cop move")
    if not s.h.has_vertex(s.a):
        out.append("H4: a missing from the subgraph")
    if not s.h.has_vertex(s.witness_mb) or closed_nbhd(g, s.b) >> s.witness_mb & 1:
        out.append("H5: witness vertex not in the subgraph minus N[b]")
    return out


def verify_snare(g: Graph, s: Snare, c1: int, c2: int) -> bool:
    return not snare_violations(g, s, c1, c2)


def _entry_from_path(h: P3Subgraph, path: list[int]) -> Edge:
    """Entry edge for a c1..c2 path of at most three edges inside h.

    For a single-vertex path the entry is the least h-edge at that vertex;
    otherwise the middle-ish edge (index (m-1)//2) joins N[c1] to N[c2].
    """
    if len(path) == 1:
        v = path[0]
        for e in sorted(h.edges):
            if v in e:
                return e
        raise SnareError("no edge at the degenerate cop vertex")
    i = (len(path) - 2) // 2
    return _edge(path[i], path[i + 1])


def build_snare(g: Graph, r: int, a: int, b: int, c1: int, c2: int) -> Snare:
    """Construct a snare for cops at (c1, c2) with the robber forced to r.

    Preconditions are checked and raise :class:`SnareError` with distinct
    messages; on valid inputs a violation would falsify the structural
    claims this construction realizes, so callers treat it as a finding.
    """
    if not is_domineering(g, a, b, r):
        raise SnareError(f"{a}-{b}-{r} is not a domineering path")
    m_r = non_nbhd(g, r)
    for c in (c1, c2):
        if not m_r >> c & 1:
            raise SnareError(f"cop at {c} is not in M({r})")
    if not connected_within(g, m_r):
        raise SnareError(f"G[M({r})] is not connected")
    if find_retract(g, r) is not None:
        raise SnareError(f"a retract exists at {r}")
    na, nb = closed_nbhd(g, a), g.adj[b]
    for ci, cj in ((c1, c2), (c2, c1)):
        if na >> ci & 1 and nb >> cj & 1:
            raise SnareError("direct-win position: cops can move straight to {a, b}")
    if find_induced_path(g, 5) is not None:
        raise SnareError("host graph is not P5-free")

    gp, vlist = induced(g, m_r)
    pos = {v: i for i, v in enumerate(vlist)}
    ap, c1p, c2p = pos[a], pos[c1], pos[c2]
    mb_p = mask_of(i for i, v in enumerate(vlist) if not closed_nbhd(g, b) >> v & 1)

    in_mb = [bool(mb_p >> c & 1) for c in (c1p, c2p)]
    if in_mb[0] or in_mb[1]:
        swapped = not in_mb[0]
        lead, trail = (c1p, c2p) if in_mb[0] else (c2p, c1p)
        h, entry, witness, case = _case_far_cop(gp, ap, lead, trail)
        case = f"A{'-swapped' if swapped else ''}:{case}"
    else:
        h, entry, witness, case = _case_near_cops(gp, ap, mb_p, c1p, c2p)
    entry = _orient_entry(gp, entry, c1p, c2p)

    def emap(e: Edge) -> Edge:
        return _edge(vlist[e[0]], vlist[e[1]])

    verts = mask_of(vlist[i] for i in bits(h.vertices))
    edges = frozenset(emap(e) for e in h.edges)
    cert = {emap(e): (emap(p) if p is not None else None) for e, p in h.cert.items()}
    root = emap(h.root) if h.root is not None else None
    out = Snare(
        P3Subgraph(g, verts, edges, root, cert),
        vlist[entry[0]],
        vlist[entry[1]],
        a,
        b,
        r,
        vlist[witness],
        case,
    )
    bad = snare_violations(g, out, c1, c2)
    if bad:
        raise SnareError("constructed snare fails: " + "; ".join(bad))
    return out


def _orient_entry(gp: Graph, entry: Edge, c1p: int, c2p: int) -> Edge:
    lo, hi = _edge(*entry)
    for p, q in ((lo, hi), (hi, lo)):
        if closed_nbhd(gp, c1p) >> p & 1 and closed_nbhd(gp, c2p) >> q & 1:
            return (p, q)
    raise SnareError("entry edge admits no valid cop orientation")


_Pieces = tuple[P3Subgraph, Edge, int, str]  # (subgraph, entry edge, M(b) witness, case tag)


def _case_far_cop(gp: Graph, a: int, c1: int, c2: int) -> _Pieces:
    """One cop (c1 after renaming) stands outside N[b]."""
    path = shortest_path(gp, c1, 1 << c2)
    assert path is not None
    if len(path) > 4:
        raise SnareError("cop-to-cop path has more than three edges in a P5-free graph")
    hp = _path_subgraph(gp, path)
    res = p3_expand(gp, hp, a)
    if isinstance(res, Complete):
        h = is_p3_connected(gp, (1 << c1) | (1 << a), [(c1, a)])
        assert h is not None
        return h, _edge(c1, a), c1, "complete"
    if isinstance(res, Apex):
        return res.h, _edge(res.u, c1), c1, "apex"
    return res.h, _entry_from_path(res.h, path), c1, "extend"


def _case_near_cops(gp: Graph, a: int, mb: int, c1: int, c2: int) -> _Pieces:
    """Both cops adjacent to b and outside N[a]."""
    dcands = list(bits(mb))
    if not dcands:
        raise SnareError("M(b) does not meet M(r)")
    adj = gp.adj
    nonclique = [
        d
        for d in dcands
        if not (c1 != c2 and adj[c1] >> c2 & 1 and adj[d] >> c1 & 1 and adj[d] >> c2 & 1)
    ]
    if nonclique:
        return _near_expand(gp, a, nonclique[0], c1, c2)
    return _near_clique(gp, a, dcands[0], c1, c2)


def _near_expand(gp: Graph, a: int, d: int, c1: int, c2: int) -> _Pieces:
    path = shortest_path(gp, c1, 1 << c2)
    assert path is not None
    if len(path) > 4:
        raise SnareError("cop-to-cop path has more than three edges in a P5-free graph")
    hp = _path_subgraph(gp, path)
    res = p3_expand(gp, hp, d)
    if isinstance(res, Complete):
        if c1 == c2:
            hstar = is_p3_connected(gp, (1 << c1) | (1 << d), [(c1, d)])
        else:
            verts = (1 << c1) | (1 << c2) | (1 << d)
            hstar = is_p3_connected(gp, verts, [(c1, d), (d, c2)])
        assert hstar is not None
        cop_path = [c1] if c1 == c2 else [c1, d, c2]
    else:
        hstar = res.h
        cop_path = path if isinstance(res, Extended) else ([c1] if c1 == c2 else [c1, res.u, c2])
    res2 = p3_expand(gp, hstar, a)
    if isinstance(res2, Complete):
        raise SnareError("a is complete to the expanded subgraph despite cops outside N[a]")
    h = res2.h
    if isinstance(res2, Apex):
        cop_path = [c1] if c1 == c2 else [c1, res2.u, c2]
    return h, _entry_from_path(h, cop_path), d, "B-expand"


def _near_clique(gp: Graph, a: int, d: int, c1: int, c2: int) -> _Pieces:
    cmask = (1 << c1) | (1 << c2) | (1 << d)
    path = shortest_path(gp, a, cmask)
    assert path is not None
    ell = len(path) - 1
    if ell < 1:
        raise SnareError("a lies in the cop clique")
    if ell == 1:
        if path[1] != d:
            raise SnareError("a is adjacent to a cop despite the direct-win check")
        h = is_p3_connected(gp, (1 << a) | (1 << d) | (1 << c1), [(a, d), (d, c1)])
        assert h is not None
        return h, (d, c1), d, "B-clique-short"
    vl, vp = path[-1], path[-2]
    verts = mask_of(path) | cmask
    edges = set()
    cert: dict[Edge, Edge | None] = {}
    path_edges = [_edge(path[i], path[i + 1]) for i in range(ell)]
    for i, e in enumerate(path_edges):
        edges.add(e)
        cert[e] = path_edges[i - 1] if i else None
    clique_edges = []
    for u in bits(cmask & ~(1 << vl)):
        if gp.adj[vp] >> u & 1:
            e = _edge(vp, u)
            parent = path_edges[-2]
        else:
            e = _edge(vl, u)
            parent = path_edges[-1]
            clique_edges.append(e)
        if e not in edges:
            edges.add(e)
            cert[e] = parent
    h = P3Subgraph(gp, verts, frozenset(edges), path_edges[0], cert)
    entry = min(clique_edges) if clique_edges else _edge(c1, vp)
    return h, entry, d, "B-clique"
