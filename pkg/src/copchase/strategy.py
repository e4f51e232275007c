"""Two-cop strategy synthesis and execution with full transcripts.

A plan is a recursive chain: Base (a dominating pair handles everything
when the independence number is at most two), Retract (one cop can pen the
robber inside a swallowed component while the sub-plan hunts its shadow),
or Domineer (force the robber onto the tail of a domineering path, then
trap it with a snare walk).  The executor runs the plan level by level:

* each level sees a *virtual robber*, the real robber projected through
  the shadow maps of the enclosing Retract levels;
* the deepest live level drives the cops; its moves are legal real moves
  because every level's graph is an induced subgraph of the original;
* a greedy rule always fires first: any cop adjacent to the (virtual)
  robber steps onto it.

Capture of a virtual robber bubbles up: if the shadow differed from the
level above, that Retract level starts its endgame (hold the shadow
vertex, march the other cop to the swallowing neighbour); otherwise the
capture belongs to the level above, ultimately the real one.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Callable, Protocol

from .graphs import (
    Graph,
    GraphError,
    bits,
    closed_nbhd,
    connected_within,
    induced,
    is_connected,
    shortest_path,
    vertex_list,
    write_graph6,
)
from .recognition import find_induced_path
from .solver import (
    ROBBER_TO_MOVE,
    GameState,
    SolveTable,
    best_robber_start,
)
from .graphs import has_independent_set
from .structure import (
    DomineeringPath,
    Snare,
    _edge,
    build_snare,
    dominating_pair,
    find_domineering_3path,
    find_retract,
    is_domineering,
    is_p3_connected,
)


class StrategyError(GraphError):
    pass


class CounterexampleError(StrategyError):
    """A structural guarantee failed; on a valid connected P5-free input
    this is a falsifying finding, never ignored silently."""


# ---------------------------------------------------------------------------
# plans
# ---------------------------------------------------------------------------


@dataclass
class BasePlan:
    u: int
    v: int
    alive: int
    n_vertices: int
    n_edges: int


@dataclass
class RetractPlan:
    r: int
    u: int
    component: int
    sub: "StrategyPlan"
    alive: int
    n_vertices: int
    n_edges: int


@dataclass
class DomineerPlan:
    a: int
    b: int
    r: int
    sub: "StrategyPlan"
    alive: int
    n_vertices: int
    n_edges: int


StrategyPlan = BasePlan | RetractPlan | DomineerPlan

DomineeringOverride = Callable[[Graph], DomineeringPath | None]


def synthesize(g: Graph, domineering_override: DomineeringOverride | None = None) -> StrategyPlan:
    """Build the recursive plan for a connected P5-free graph.

    ``domineering_override`` may pick a different domineering path per
    level; it receives the level's induced subgraph (order-preserving
    relabelling) and must return a valid domineering path or None to fall
    back to the least one.
    """
    if g.n == 0:
        raise StrategyError("synthesize: null graph")
    if not is_connected(g):
        raise StrategyError("synthesize: disconnected graph")
    witness = find_induced_path(g, 5)
    if witness is not None:
        raise StrategyError(f"synthesize: graph has an induced 5-vertex path {witness}")
    return _synth(g, g.full_mask, domineering_override)


def _synth(g: Graph, alive: int, override: DomineeringOverride | None) -> StrategyPlan:
    sub, vlist = induced(g, alive)
    n_edges = sub.edge_count()
    if not has_independent_set(sub, 3):
        pair = dominating_pair(sub)
        if pair is None:
            raise CounterexampleError("no dominating pair despite independence number <= 2")
        return BasePlan(vlist[pair[0]], vlist[pair[1]], alive, sub.n, n_edges)
    dp = None
    if override is not None:
        dp = override(sub)
        if dp is not None and not is_domineering(sub, dp.a, dp.b, dp.c):
            raise StrategyError(f"override returned a non-domineering triple {dp}")
    if dp is None:
        dp = find_domineering_3path(sub)
    if dp is None:
        raise CounterexampleError(
            "connected P5-free graph with independence number >= 3 "
            f"but no domineering 3-path: {write_graph6(sub)}"
        )
    a, b, r = vlist[dp.a], vlist[dp.b], vlist[dp.c]
    ret = find_retract(sub, dp.c)
    if ret is not None:
        u_sub, comp_sub = ret
        comp = 0
        for i in bits(comp_sub):
            comp |= 1 << vlist[i]
        new_alive = alive & ~comp
        if not connected_within(g, new_alive):
            raise CounterexampleError("graph minus a swallowed component is disconnected")
        return RetractPlan(r, vlist[u_sub], comp, _synth(g, new_alive, override), alive, sub.n, n_edges)
    new_alive = alive & ~(1 << r)
    if not connected_within(g, new_alive):
        raise CounterexampleError("graph minus a domineering-path tail is disconnected")
    return DomineerPlan(a, b, r, _synth(g, new_alive, override), alive, sub.n, n_edges)


def plan_levels(plan: StrategyPlan) -> list[StrategyPlan]:
    """Flatten the plan chain, outermost first, Base last."""
    out = []
    node: StrategyPlan = plan
    while True:
        out.append(node)
        if isinstance(node, BasePlan):
            return out
        node = node.sub


def capture_bound(plan: StrategyPlan) -> int:
    """Static upper envelope on cop turns (our own bound, used to size
    default turn limits and to flag anomalies)."""
    if isinstance(plan, BasePlan):
        return 2
    if isinstance(plan, RetractPlan):
        return capture_bound(plan.sub) + plan.n_vertices + 2
    return capture_bound(plan.sub) + plan.n_edges + 4


def plan_to_json(plan: StrategyPlan) -> dict:
    if isinstance(plan, BasePlan):
        return {
            "kind": "base",
            "u": plan.u,
            "v": plan.v,
            "alive": vertex_list(plan.alive),
        }
    if isinstance(plan, RetractPlan):
        return {
            "kind": "retract",
            "r": plan.r,
            "u": plan.u,
            "component": vertex_list(plan.component),
            "alive": vertex_list(plan.alive),
            "sub": plan_to_json(plan.sub),
        }
    return {
        "kind": "domineer",
        "a": plan.a,
        "b": plan.b,
        "r": plan.r,
        "alive": vertex_list(plan.alive),
        "sub": plan_to_json(plan.sub),
    }


# ---------------------------------------------------------------------------
# transcripts
# ---------------------------------------------------------------------------


@dataclass
class TurnRecord:
    turn: int
    phase: str
    cops_before: tuple[int, int]
    cops_after: tuple[int, int]
    robber_before: int
    robber_after: int | None = None
    annotation: str | None = None


@dataclass
class Transcript:
    graph6: str
    n: int
    initial_cops: tuple[int, int]
    initial_robber: int
    max_turns: int
    turns: list[TurnRecord]
    status: str  # "captured" | "cap_failure"
    captured_at: int | None

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "initial_cops": list(self.initial_cops),
            "initial_robber": self.initial_robber,
            "max_turns": self.max_turns,
            "status": self.status,
            "captured_at": self.captured_at,
            "turns": [
                {
                    "turn": t.turn,
                    "phase": t.phase,
                    "cops_before": list(t.cops_before),
                    "cops_after": list(t.cops_after),
                    "robber_before": t.robber_before,
                    "robber_after": t.robber_after,
                    "annotation": t.annotation,
                }
                for t in self.turns
            ],
        }


def default_max_turns(n: int) -> int:
    return 20 * n * n + 100


# ---------------------------------------------------------------------------
# the engine
# ---------------------------------------------------------------------------

_PASS = "pass"
_ENDGAME = "endgame"


class _Level:
    __slots__ = ("node", "kind", "mode", "stage", "script", "holder", "walk", "entered_mb", "snare")

    def __init__(self, node: StrategyPlan):
        self.node = node
        self.kind = (
            "base" if isinstance(node, BasePlan) else "retract" if isinstance(node, RetractPlan) else "domineer"
        )
        self.mode = _PASS
        self.stage = "init"  # domineer endgame: init -> script -> hold
        self.script: deque = deque()
        self.holder: int | None = None  # cop index pinned on r (retract endgame)
        self.walk: deque = deque()  # remaining walker vertices (retract endgame)
        self.entered_mb = False  # snare phase: robber reached M(b) at this level
        self.snare: Snare | None = None


class StrategyEngine:
    """Incremental executor: place the robber, then alternate cop_turn and
    robber_turn.  The HTTP service drives the same engine, so offline and
    online play agree move for move."""

    def __init__(
        self,
        g: Graph,
        plan: StrategyPlan,
        initial_cops: tuple[int, int] | None = None,
        debug: bool = True,
    ):
        self.g = g
        self.plan = plan
        self.debug = debug
        self.levels = [_Level(node) for node in plan_levels(plan)]
        base = self.levels[-1].node
        assert isinstance(base, BasePlan)
        if initial_cops is None:
            initial_cops = (min(base.u, base.v), max(base.u, base.v))
        self.cops: list[int] = [initial_cops[0], initial_cops[1]]
        self.robber: int | None = None
        self.turn = 0
        self.finished = False
        self.captured = False
        self.captured_at: int | None = None
        self.turns: list[TurnRecord] = []
        self._initial_cops = (self.cops[0], self.cops[1])

    # -- public surface ----------------------------------------------------

    def cops_tuple(self) -> tuple[int, int]:
        return (self.cops[0], self.cops[1])

    def place_robber(self, v: int) -> None:
        if self.robber is not None:
            raise StrategyError("robber already placed")
        if not 0 <= v < self.g.n:
            raise StrategyError(f"robber start {v} out of range")
        self.robber = v
        if v in self.cops:
            self.captured = True
            self.finished = True
            self.captured_at = 0
            return
        self._update_triggers()
        self._absorb_virtual_capture()

    def legal_robber_targets(self) -> list[int]:
        assert self.robber is not None
        return sorted(bits(closed_nbhd(self.g, self.robber)))

    def cop_turn(self) -> TurnRecord:
        if self.finished:
            raise StrategyError("game already finished")
        if self.robber is None:
            raise StrategyError("robber not placed")
        self.turn += 1
        before = self.cops_tuple()
        robber = self.robber

        # global greedy rule: a cop adjacent to the real robber captures
        adj = self.g.adj
        for i in (0, 1):
            if adj[self.cops[i]] >> robber & 1:
                self.cops[i] = robber
                rec = TurnRecord(self.turn, "greedy-capture", before, self.cops_tuple(), robber, robber)
                self.turns.append(rec)
                self.captured = True
                self.finished = True
                self.captured_at = self.turn
                return rec

        d, ys = self._chain()
        y = ys[d]
        phase = None
        annotation = None

        # level greedy: capture the driver's virtual robber.  Both cops and
        # the shadow live inside the level graph, which is induced, so plain
        # adjacency in g is the level adjacency.
        if y != robber:
            for i in (0, 1):
                if adj[self.cops[i]] >> y & 1:
                    self.cops[i] = y
                    phase = self._phase_label(d)
                    break
        if phase is None:
            phase, annotation = self._scripted_move(d, ys)

        after = self.cops_tuple()
        rec = TurnRecord(self.turn, phase, before, after, robber, None, annotation)
        self.turns.append(rec)
        if robber in self.cops:
            rec.robber_after = robber
            self.captured = True
            self.finished = True
            self.captured_at = self.turn
            return rec
        self._absorb_virtual_capture()
        return rec

    def robber_turn(self, v: int) -> None:
        if self.finished:
            raise StrategyError("game already finished")
        if not self.turns or self.turns[-1].robber_after is not None:
            raise StrategyError("robber_turn without a pending cop turn")
        assert self.robber is not None
        legal = closed_nbhd(self.g, self.robber)
        if not 0 <= v < self.g.n or not legal >> v & 1:
            raise StrategyError(f"illegal robber move {self.robber} -> {v}")
        if self.debug:
            self._check_shadow_step(self.robber, v)
        self.robber = v
        self.turns[-1].robber_after = v
        if v in self.cops:
            self.captured = True
            self.finished = True
            self.captured_at = self.turn
            return
        self._update_triggers()
        self._absorb_virtual_capture()
        if self.debug:
            self._check_snare_ledger()

    # -- chain machinery ----------------------------------------------------

    def _chain(self) -> tuple[int, list[int]]:
        assert self.robber is not None
        ys = [self.robber]
        for i, lvl in enumerate(self.levels):
            node = lvl.node
            if lvl.mode == _ENDGAME:
                return i, ys
            if isinstance(node, BasePlan):
                return i, ys
            if isinstance(node, DomineerPlan):
                ys.append(ys[-1])
            else:
                assert isinstance(node, RetractPlan)
                ys.append(node.r if node.component >> ys[-1] & 1 else ys[-1])
        raise AssertionError("plan chain must end at a Base level")

    def _update_triggers(self) -> None:
        assert self.robber is not None
        y = self.robber
        for lvl in self.levels:
            node = lvl.node
            if lvl.mode == _ENDGAME or isinstance(node, BasePlan):
                return
            if isinstance(node, DomineerPlan):
                if y == node.r:
                    lvl.mode = _ENDGAME
                    lvl.stage = "init"
                    return
            else:
                assert isinstance(node, RetractPlan)
                if node.component >> y & 1:
                    y = node.r

    def _absorb_virtual_capture(self) -> None:
        if self.finished:
            return
        d, ys = self._chain()
        if ys[d] not in self.cops:
            return
        j = d
        while j > 0 and ys[j - 1] == ys[j]:
            j -= 1
        if j == 0:
            raise AssertionError("virtual capture reached the real robber without a capture flag")
        lvl = self.levels[j - 1]
        node = lvl.node
        assert isinstance(node, RetractPlan) and ys[j] == node.r
        lvl.mode = _ENDGAME
        lvl.holder = 0 if self.cops[0] == node.r else 1
        walker = self.cops[1 - lvl.holder]
        region = node.alive & ~node.component
        path = shortest_path(self.g, walker, 1 << node.u, within=region)
        if path is None:
            raise CounterexampleError("no route to the swallowing neighbour outside the component")
        lvl.walk = deque(path[1:])

    # -- move generation ----------------------------------------------------

    def _phase_label(self, d: int) -> str:
        lvl = self.levels[d]
        if lvl.kind == "base" or lvl.mode == _PASS:
            for j in range(d - 1, -1, -1):
                if self.levels[j].kind == "retract":
                    return "shadow"
                if self.levels[j].kind == "domineer":
                    return "forcing"
            return "base"
        if lvl.kind == "retract":
            return "endgame"
        if lvl.stage == "script" and lvl.script:
            return lvl.script[0][2]
        return "endgame"

    def _scripted_move(self, d: int, ys: list[int]) -> tuple[str, str | None]:
        lvl = self.levels[d]
        node = lvl.node
        if lvl.kind == "base":
            raise CounterexampleError(
                "base level asked for a scripted move: dominating pair failed to cover the robber"
            )
        if lvl.kind == "retract":
            assert lvl.mode == _ENDGAME and lvl.holder is not None
            if lvl.walk:
                walker = 1 - lvl.holder
                target = lvl.walk.popleft()
                self._move_cop(walker, target)
            return "endgame", None
        # domineer endgame
        assert isinstance(node, DomineerPlan)
        if lvl.stage == "init":
            annotation = self._open_domineer_endgame(lvl, ys[d])
        else:
            annotation = None
        if lvl.stage == "script":
            t1, t2, label, note = lvl.script.popleft()
            self._move_cop(0, t1)
            self._move_cop(1, t2)
            if not lvl.script:
                lvl.stage = "hold"
            return label, note or annotation
        return "endgame", annotation

    def _move_cop(self, i: int, target: int) -> None:
        cur = self.cops[i]
        if target != cur and not self.g.adj[cur] >> target & 1:
            raise StrategyError(f"scripted cop move {cur} -> {target} is not an edge")
        self.cops[i] = target

    def _open_domineer_endgame(self, lvl: _Level, y: int) -> str | None:
        node = lvl.node
        assert isinstance(node, DomineerPlan)
        g = self.g
        alive = node.alive
        a, b, r = node.a, node.b, node.r
        if y != r:
            raise CounterexampleError("domineer endgame opened while the robber is off the tail vertex")
        c1, c2 = self.cops
        na = (g.adj[a] & alive) | (1 << a)  # closed neighbourhood of a, level graph
        nb = g.adj[b] & alive  # open neighbourhood of b, level graph
        lvl.stage = "script"
        # direct win: one cop can take a while the other takes b
        assignments = []
        if na >> c1 & 1 and nb >> c2 & 1:
            assignments.append((a, b))
        if na >> c2 & 1 and nb >> c1 & 1:
            assignments.append((b, a))
        if assignments:
            t1, t2 = min(assignments)  # cop 1 gets the smaller target when both work
            lvl.script.append((t1, t2, "direct-win", "cops move straight to the domineering edge"))
            return None
        # snare construction on the level graph
        sub, vlist = induced(g, alive)
        pos = {v: i for i, v in enumerate(vlist)}
        snare_sub = build_snare(sub, pos[r], pos[a], pos[b], pos[c1], pos[c2])
        snare = _remap_snare(g, snare_sub, vlist)
        lvl.snare = snare
        lvl.entered_mb = False
        walk_edges = _snare_walk(snare, a)
        script: list[tuple[int, int, str, str | None]] = []
        p1, p2 = snare.d1, snare.d2
        script.append((p1, p2, "snare-entry", f"snare case {snare.case}; entry edge ({p1},{p2})"))
        for nxt in walk_edges[1:]:
            shared = {p1, p2} & set(nxt)
            if len(shared) != 1:
                raise CounterexampleError("snare walk edges do not pivot on a shared vertex")
            (s,) = shared
            z = nxt[0] if nxt[1] == s else nxt[1]
            # cop on the dropped endpoint slides to the shared vertex, the
            # cop on the shared vertex advances to the new endpoint
            if p1 == s:
                p1, p2 = z, s
            else:
                p1, p2 = s, z
            script.append((p1, p2, "snare-walk", None))
        # final pivot: cop on a moves to b, its partner moves to a
        if p1 == a:
            p1, p2 = b, a
        elif p2 == a:
            p2, p1 = b, a
        else:
            raise CounterexampleError("snare walk did not end on an edge at a")
        script.append((p1, p2, "endgame", "pivot onto the domineering edge"))
        lvl.script = deque(script)
        return f"snare case {snare.case}"

    # -- debug assertions ----------------------------------------------------

    def _check_shadow_step(self, x1: int, x2: int) -> None:
        """Consecutive shadows are equal or adjacent inside each level graph."""
        y1, y2 = x1, x2
        for lvl in self.levels:
            node = lvl.node
            if y1 != y2 and not self.g.adj[y1] >> y2 & 1:
                raise CounterexampleError(f"shadow step {y1} -> {y2} is not a move")
            if isinstance(node, BasePlan):
                break
            if isinstance(node, DomineerPlan):
                if y1 == node.r or y2 == node.r:
                    break
            else:
                assert isinstance(node, RetractPlan)
                y1 = node.r if node.component >> y1 & 1 else y1
                y2 = node.r if node.component >> y2 & 1 else y2

    def _check_snare_ledger(self) -> None:
        """While a snare walk runs, an uncaptured robber that has not yet
        reached M(b) stays anticomplete to the trap unless a cop is already
        adjacent (about to capture it)."""
        d, ys = self._chain()
        lvl = self.levels[d]
        if lvl.kind != "domineer" or lvl.mode != _ENDGAME or lvl.snare is None:
            return
        if lvl.entered_mb:
            return
        node = lvl.node
        assert isinstance(node, DomineerPlan)
        y = ys[d]
        g = self.g
        b_closed = closed_nbhd(g, node.b) & node.alive
        if not b_closed >> y & 1:
            lvl.entered_mb = True
            return
        near_cop = any(closed_nbhd(g, c) >> y & 1 for c in self.cops)
        if near_cop:
            return
        hv = lvl.snare.h.vertices
        if g.adj[y] & hv:
            raise CounterexampleError(
                f"robber at {y} touches the snare before entering M({node.b}) "
                "without being adjacent to a cop"
            )


def _remap_snare(g: Graph, s: Snare, vlist: tuple[int, ...]) -> Snare:
    def vmap(v: int) -> int:
        return vlist[v]

    def emap(e):
        return _edge(vlist[e[0]], vlist[e[1]])

    verts = 0
    for i in bits(s.h.vertices):
        verts |= 1 << vlist[i]
    edges = frozenset(emap(e) for e in s.h.edges)
    cert = {emap(e): (emap(p) if p is not None else None) for e, p in s.h.cert.items()}
    root = emap(s.h.root) if s.h.root is not None else None
    from .structure import P3Subgraph

    h = P3Subgraph(g, verts, edges, root, cert)
    return Snare(h, vmap(s.d1), vmap(s.d2), vmap(s.a), vmap(s.b), vmap(s.r), vmap(s.witness_mb), s.case)


def _snare_walk(s: Snare, a: int) -> list[tuple[int, int]]:
    """Edge sequence from the entry edge to an edge at ``a``, read off a
    certificate re-rooted at the entry edge; no earlier edge touches a."""
    h = is_p3_connected(s.h.host, s.h.vertices, s.h.edges, root=(s.d1, s.d2))
    if h is None:
        raise CounterexampleError("snare lost P3-connectivity when re-rooted at the entry edge")
    depth: dict = {}

    def edge_depth(e) -> int:
        if e in depth:
            return depth[e]
        parent = h.cert[e]
        d = 0 if parent is None else edge_depth(parent) + 1
        depth[e] = d
        return d

    candidates = sorted(e for e in h.edges if a in e)
    if not candidates:
        raise CounterexampleError("snare has no edge at a")
    f = min(candidates, key=lambda e: (edge_depth(e), e))
    chain = [f]
    while h.cert[chain[-1]] is not None:
        chain.append(h.cert[chain[-1]])
    chain.reverse()
    for e in chain[:-1]:
        if a in e:
            raise CounterexampleError("non-final snare walk edge touches a")
    return chain


# ---------------------------------------------------------------------------
# robber policies
# ---------------------------------------------------------------------------


class RobberPolicy(Protocol):
    def start(self, g: Graph, cops: tuple[int, int]) -> int: ...

    def move(self, g: Graph, cops: tuple[int, int], robber: int, history) -> int: ...


class OptimalRobber:
    """Table-backed adversary: escape if possible, else maximise capture
    distance; least vertex among ties."""

    def __init__(self, table: SolveTable):
        self.table = table

    def start(self, g: Graph, cops: tuple[int, int]) -> int:
        return best_robber_start(g, self.table, tuple(sorted(cops)))

    def move(self, g: Graph, cops: tuple[int, int], robber: int, history) -> int:
        state = GameState(tuple(sorted(cops)), robber, ROBBER_TO_MOVE)
        return self.table.optimal_robber_move(state)


class RandomRobber:
    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def start(self, g: Graph, cops: tuple[int, int]) -> int:
        return self.rng.randrange(g.n)

    def move(self, g: Graph, cops: tuple[int, int], robber: int, history) -> int:
        return self.rng.choice(sorted(bits(closed_nbhd(g, robber))))


def _far_vertex(g: Graph, cops: tuple[int, int], candidates) -> int:
    from .graphs import bfs_distances

    d1 = bfs_distances(g, cops[0])
    d2 = bfs_distances(g, cops[1])
    big = g.n + 1

    def score(v: int) -> tuple[int, int]:
        return (-min(d1.get(v, big), d2.get(v, big)), v)

    return min(candidates, key=score)


class GreedyFarRobber:
    """Moves to maximise the nearer cop's BFS distance; least among ties."""

    def start(self, g: Graph, cops: tuple[int, int]) -> int:
        return _far_vertex(g, cops, range(g.n))

    def move(self, g: Graph, cops: tuple[int, int], robber: int, history) -> int:
        return _far_vertex(g, cops, sorted(bits(closed_nbhd(g, robber))))


class StationaryRobber:
    """Starts as far from the cops as possible, then never moves."""

    def start(self, g: Graph, cops: tuple[int, int]) -> int:
        return _far_vertex(g, cops, range(g.n))

    def move(self, g: Graph, cops: tuple[int, int], robber: int, history) -> int:
        return robber


def robber_policies() -> dict[str, type]:
    return {
        "optimal": OptimalRobber,
        "random": RandomRobber,
        "greedy_far": GreedyFarRobber,
        "stationary": StationaryRobber,
    }


# ---------------------------------------------------------------------------
# execution
# ---------------------------------------------------------------------------


def execute(
    g: Graph,
    plan: StrategyPlan,
    robber: RobberPolicy,
    max_turns: int | None = None,
    debug: bool = True,
    initial_cops: tuple[int, int] | None = None,
) -> Transcript:
    """Run the plan against a robber policy until capture or the turn cap.

    A cap_failure is a falsifying finding on valid inputs; callers never
    swallow it quietly.
    """
    if max_turns is None:
        max_turns = default_max_turns(g.n)
    engine = StrategyEngine(g, plan, initial_cops=initial_cops, debug=debug)
    start = robber.start(g, engine.cops_tuple())
    engine.place_robber(start)
    while not engine.finished and engine.turn < max_turns:
        engine.cop_turn()
        if engine.finished:
            break
        v = robber.move(g, engine.cops_tuple(), engine.robber, engine.turns)
        engine.robber_turn(v)
    return Transcript(
        graph6=write_graph6(g) if g.n < 63 else "",
        n=g.n,
        initial_cops=engine._initial_cops,
        initial_robber=start,
        max_turns=max_turns,
        turns=engine.turns,
        status="captured" if engine.captured else "cap_failure",
        captured_at=engine.captured_at,
    )
