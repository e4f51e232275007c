"""Immutable simple graphs on dense integer vertices with bitset adjacency.

Vertices are 0..n-1.  Every vertex set in this package is a plain ``int``
bitmask (bit v set means vertex v is in the set), which keeps all the set
algebra at O(n/64) machine ops.  Use :func:`bits` / :func:`mask_of` to
convert between masks and vertex iterables.

The null graph (n = 0) is representable; operations that need a non-null
or connected input reject it explicitly.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertex_list(mask: int) -> list[int]:
    return list(bits(mask))


class GraphError(ValueError):
    pass


class Graph:
    """Immutable simple graph: vertex count ``n`` and bitmask adjacency rows.

    ``adj[v]`` has bit u set iff uv is an edge.  Rows are symmetric and
    irreflexive; instances are hashable and safe to share across threads.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int] = ()):
        adj = tuple(adj) if adj else tuple([0] * n)
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"adjacency row {v} has bits >= n")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    @classmethod
    def _raw(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        """Unvalidated construction for internal hot paths."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._raw(n, tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1)
            for u in bits(row):
                out.append((v, v + 1 + u))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


# ---------------------------------------------------------------------------
# graph6 codec (n < 63 only; bit order: j = 1..n-1 outer, i = 0..j-1 inner)
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    """graph6 parse/write failure; ``offset`` is the offending byte index."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def parse_graph6(line: str) -> Graph:
    base = 0
    if line.startswith(_G6_HEADER):
        base = len(_G6_HEADER)
        line = line[base:]
    line = line.rstrip("\n")
    if not line:
        raise Graph6Error("empty graph6 string", base)
    first = ord(line[0])
    if first == 126:
        raise Graph6Error("multi-byte size (n >= 63) not supported", base)
    if not 63 <= first <= 126:
        raise Graph6Error(f"size byte {first} outside 63..126", base)
    n = first - 63
    nbits = n * (n - 1) // 2
    ndata = (nbits + 5) // 6
    if len(line) - 1 < ndata:
        raise Graph6Error(
            f"truncated graph6: need {ndata} data bytes for n={n}, got {len(line) - 1}",
            base + len(line),
        )
    if len(line) - 1 > ndata:
        raise Graph6Error("trailing garbage after graph6 data", base + 1 + ndata)
    bitstream = 0
    for k, ch in enumerate(line[1:]):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"data byte {c} outside 63..126", base + 1 + k)
        bitstream = (bitstream << 6) | (c - 63)
    pad = ndata * 6 - nbits
    if pad and bitstream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", base + len(line) - 1)
    bitstream >>= pad
    rows = [0] * n
    # bits arrive most-significant first: (i,j) pairs in colex order
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bitstream >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph._raw(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    if g.n >= 63:
        raise Graph6Error(f"n={g.n} too large for single-byte graph6")
    n = g.n
    bitstream = 0
    nbits = n * (n - 1) // 2
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            bitstream = (bitstream << 1) | (row >> i & 1)
    pad = (6 - nbits % 6) % 6
    bitstream <<= pad
    out = [chr(n + 63)]
    for k in range((nbits + pad) // 6 - 1, -1, -1):
        out.append(chr(((bitstream >> (6 * k)) & 0x3F) + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# edge-list codec: header "n m", then m lines "u v"
# ---------------------------------------------------------------------------


class EdgeListError(GraphError):
    pass


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise EdgeListError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListError(f"non-integer header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise EdgeListError("negative counts in header")
    if len(lines) - 1 != m:
        raise EdgeListError(f"header promises {m} edges, found {len(lines) - 1} lines")
    rows = [0] * n
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise EdgeListError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer edge line {ln!r}") from None
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"edge ({u},{v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._raw(n, tuple(rows))


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# neighbourhood algebra, induced subgraphs, components
# ---------------------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask
    rows = tuple(~row & full & ~(1 << v) for v, row in enumerate(g.adj))
    return Graph._raw(g.n, rows)


def closed_nbhd(g: Graph, v: int) -> int:
    """N[v] as a mask."""
    return g.adj[v] | (1 << v)


def non_nbhd(g: Graph, v: int) -> int:
    """M(v) = V minus N[v], as a mask."""
    return g.full_mask & ~closed_nbhd(g, v)


def induced(g: Graph, s: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on mask ``s`` plus the order-preserving label map.

    Returns (subgraph, vlist) where new vertex i corresponds to old vertex
    vlist[i]; vlist is ascending, so lexicographic order is preserved.
    """
    if s & ~g.full_mask:
        raise GraphError("induced: mask has bits >= n")
    vlist = tuple(bits(s))
    index = {v: i for i, v in enumerate(vlist)}
    rows = []
    for v in vlist:
        row = g.adj[v] & s
        new = 0
        for u in bits(row):
            new |= 1 << index[u]
        rows.append(new)
    return Graph._raw(len(vlist), tuple(rows)), vlist


def _reach(g: Graph, start_mask: int, within: int) -> int:
    seen = start_mask & within
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> list[int]:
    """Connected components as masks, ordered by least vertex."""
    out = []
    rest = g.full_mask
    while rest:
        seed = rest & -rest
        comp = _reach(g, seed, rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    """True iff g has exactly one component; the null graph is not connected."""
    if g.n == 0:
        return False
    return _reach(g, 1, g.full_mask) == g.full_mask


def connected_within(g: Graph, mask: int) -> bool:
    """True iff the subgraph induced on ``mask`` is non-null and connected."""
    if mask == 0:
        return False
    seed = mask & -mask
    return _reach(g, seed, mask) == mask


def diameter(g: Graph) -> int | None:
    """Largest BFS eccentricity; None if g is disconnected or null."""
    if not is_connected(g):
        return None
    best = 0
    for v in range(g.n):
        seen = 1 << v
        frontier = seen
        d = 0
        while seen != g.full_mask:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~seen
            if not frontier:
                return None
            seen |= frontier
            d += 1
        best = max(best, d)
    return best


def bfs_distances(g: Graph, source: int, within: int | None = None) -> dict[int, int]:
    """BFS distance map from ``source`` restricted to the ``within`` mask."""
    if within is None:
        within = g.full_mask
    dist = {source: 0}
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & within & ~seen
        d += 1
        for v in bits(frontier):
            dist[v] = d
        seen |= frontier
    return dist


def shortest_path(g: Graph, source: int, targets: int, within: int | None = None) -> list[int] | None:
    """Deterministic shortest path from source to the nearest vertex of the
    ``targets`` mask, staying inside ``within``.

    Ties break toward least vertices: the endpoint is the least target at
    minimum distance and each predecessor is the least neighbour one level
    closer.  Returns None if no target is reachable.
    """
    if within is None:
        within = g.full_mask
    if not (1 << source) & within:
        return None
    dist = bfs_distances(g, source, within)
    reached = [v for v in bits(targets & within) if v in dist]
    if not reached:
        return None
    dmin = min(dist[v] for v in reached)
    end = min(v for v in reached if dist[v] == dmin)
    path = [end]
    cur = end
    while dist[cur] > 0:
        prev = min(u for u in bits(g.adj[cur] & within) if dist.get(u, -1) == dist[cur] - 1)
        path.append(prev)
        cur = prev
    path.reverse()
    return path


# ---------------------------------------------------------------------------
# exact independence / clique numbers (branch and bound, desk scale)
# ---------------------------------------------------------------------------


def _greedy_color(adj: tuple[int, ...], p: int) -> list[tuple[int, int]]:
    """Greedy colouring of the vertices in mask p, in colouring order."""
    order = []
    color = 0
    rest = p
    while rest:
        color += 1
        avail = rest
        while avail:
            b = avail & -avail
            v = b.bit_length() - 1
            order.append((v, color))
            avail &= ~adj[v] & ~b
            rest ^= b
    return order


def _max_clique(adj: tuple[int, ...], p: int, stop_at: int | None = None) -> int:
    best = 0

    def expand(size: int, cand: int) -> bool:
        nonlocal best
        if cand == 0:
            if size > best:
                best = size
                if stop_at is not None and best >= stop_at:
                    return True
            return False
        order = _greedy_color(adj, cand)
        for v, c in reversed(order):
            if size + c <= best:
                return False
            if expand(size + 1, cand & adj[v]):
                return True
            cand &= ~(1 << v)
        return False

    expand(0, p)
    return best


def clique_number(g: Graph) -> int:
    if g.n > 64:
        raise GraphError("exact clique number limited to n <= 64")
    return _max_clique(g.adj, g.full_mask)


def independence_number(g: Graph) -> int:
    if g.n > 64:
        raise GraphError("exact independence number limited to n <= 64")
    return _max_clique(complement(g).adj, g.full_mask)


def has_independent_set(g: Graph, k: int) -> bool:
    if k <= 0:
        return True
    if k == 1:
        return g.n >= 1
    full = g.full_mask
    adj = g.adj
    if k == 2:
        return any(~adj[v] & ~(1 << v) & full & ~((1 << (v + 1)) - 1) for v in range(g.n))
    if k == 3:
        for u in range(g.n):
            non_u = ~adj[u] & ~(1 << u) & full
            for v in bits(non_u & ~((1 << (u + 1)) - 1)):
                if non_u & ~adj[v] & ~(1 << v) & ~((1 << (v + 1)) - 1):
                    return True
        return False
    if g.n > 64:
        raise GraphError("exact independence search limited to n <= 64")
    return _max_clique(complement(g).adj, full, stop_at=k) >= k


# ---------------------------------------------------------------------------
# labeled enumeration (n <= 7)
# ---------------------------------------------------------------------------


def pair_order(n: int) -> list[tuple[int, int]]:
    """The (i, j) vertex pairs in graph6 colex order: j outer, i inner."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_labeled_graphs(
    n: int,
    connected_only: bool = False,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices exactly once (Gray-code order).

    ``start``/``stop`` select an index sub-range so independent streams can
    run in parallel.  Refuses n > 7; ingest graph6 corpora for larger scans.
    """
    if n > 7:
        raise GraphError(
            "enumerate_labeled_graphs is limited to n <= 7; "
            "ingest a graph6 corpus file for larger vertex counts"
        )
    if n < 0:
        raise GraphError("n must be non-negative")
    total = labeled_graph_count(n)
    if stop is None:
        stop = total
    start = max(0, start)
    stop = min(stop, total)
    if start >= stop:
        return
    pairs = pair_order(n)
    rows = [0] * n
    prev = start ^ (start >> 1)
    for b in bits(prev):
        i, j = pairs[b]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    raw = Graph._raw
    for index in range(start, stop):
        gray = index ^ (index >> 1)
        diff = gray ^ prev
        if diff:
            b = diff.bit_length() - 1
            i, j = pairs[b]
            rows[i] ^= 1 << j
            rows[j] ^= 1 << i
            prev = gray
        g = raw(n, tuple(rows))
        if connected_only and not is_connected(g):
            continue
        yield g


# ---------------------------------------------------------------------------
# small named graphs (test fixtures and CLI conveniences)
# ---------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def with_universal_vertex(g: Graph) -> Graph:
    """Copy of g with one new vertex adjacent to everything (added last)."""
    rows = [row | (1 << g.n) for row in g.adj]
    rows.append(g.full_mask)
    return Graph._raw(g.n + 1, tuple(rows))
