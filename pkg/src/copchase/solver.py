"""Exact cops-and-robbers engine via retrograde analysis.

Turn structure: all cops move simultaneously (each to a neighbour or in
place), then the robber moves; capture is checked after each side's move.
Initial placement is cops first, then the robber with full knowledge.
Cop tuples are kept sorted (cops are interchangeable and may share
vertices), which halves the k=2 state space.

Capture distance counts cop turns.  Robber escape is an explicit outcome,
not an infinite distance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .graphs import Graph, GraphError, bits, closed_nbhd, is_connected

COPS_TO_MOVE = "cops"
ROBBER_TO_MOVE = "robber"


@dataclass(frozen=True)
class GameState:
    cops: tuple[int, ...]  # sorted
    robber: int
    turn: str  # COPS_TO_MOVE | ROBBER_TO_MOVE

    @property
    def captured(self) -> bool:
        return self.robber in self.cops


def legal_cop_moves(g: Graph, state: GameState) -> list[tuple[int, ...]]:
    """All next cop tuples: each cop steps to a closed neighbour, deduplicated
    as sorted tuples."""
    options = [sorted(bits(closed_nbhd(g, c))) for c in state.cops]
    return sorted({tuple(sorted(p)) for p in product(*options)})


def legal_robber_moves(g: Graph, state: GameState) -> list[int]:
    return sorted(bits(closed_nbhd(g, state.robber)))


class SolveTable:
    """Minimax fixed point: outcome, capture distance and deterministic
    optimal moves for every state of the k-cop game on g."""

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.configs: list[tuple[int, ...]] = list(
            combinations_with_replacement(range(g.n), k)
        )
        self.config_index = {cfg: i for i, cfg in enumerate(self.configs)}
        self._succ: list[list[int]] = []
        self._capture: list[int] = []
        # dist arrays indexed [config][robber]; None = robber escape
        self.dist_cops_move: list[list[int | None]] = []
        self.dist_robber_move: list[list[int | None]] = []
        self._solve()

    # -- construction -----------------------------------------------------

    def _solve(self) -> None:
        g, n = self.g, self.g.n
        closed = [closed_nbhd(g, v) for v in range(n)]
        idx = self.config_index
        for cfg in self.configs:
            opts = [sorted(bits(closed[c])) for c in cfg]
            succ = {tuple(sorted(p)) for p in product(*opts)}
            self._succ.append(sorted(idx[t] for t in succ))
            cap = 0
            for c in cfg:
                cap |= 1 << c
            self._capture.append(cap)

        ncfg = len(self.configs)
        w_ctm = list(self._capture)
        w_rtm = list(self._capture)
        d_ctm: list[list[int | None]] = [[None] * n for _ in range(ncfg)]
        d_rtm: list[list[int | None]] = [[None] * n for _ in range(ncfg)]
        for ci in range(ncfg):
            for r in bits(self._capture[ci]):
                d_ctm[ci][r] = 0
                d_rtm[ci][r] = 0

        t = 0
        changed = True
        while changed:
            changed = False
            t += 1
            for ci in range(ncfg):
                u = self._capture[ci]
                for sj in self._succ[ci]:
                    u |= w_rtm[sj]
                new = u & ~w_ctm[ci]
                if new:
                    for r in bits(new):
                        d_ctm[ci][r] = t
                    w_ctm[ci] = u
                    changed = True
            for ci in range(ncfg):
                w = w_ctm[ci]
                cur = w_rtm[ci]
                add = 0
                for r in range(n):
                    if cur >> r & 1:
                        continue
                    if closed[r] & ~w == 0:
                        add |= 1 << r
                if add:
                    for r in bits(add):
                        d_rtm[ci][r] = t
                    w_rtm[ci] = cur | add
                    changed = True
        self.dist_cops_move = d_ctm
        self.dist_robber_move = d_rtm

    # -- queries -----------------------------------------------------------

    def _ci(self, cops) -> int:
        cfg = tuple(sorted(cops))
        try:
            return self.config_index[cfg]
        except KeyError:
            raise GraphError(f"not a {self.k}-cop placement: {cops}") from None

    def outcome(self, state: GameState) -> str:
        d = self.capture_distance(state)
        return "cop_win" if d is not None else "robber_escape"

    def capture_distance(self, state: GameState) -> int | None:
        ci = self._ci(state.cops)
        arr = self.dist_cops_move if state.turn == COPS_TO_MOVE else self.dist_robber_move
        return arr[ci][state.robber]

    def is_cop_win(self, state: GameState) -> bool:
        return self.capture_distance(state) is not None

    def optimal_cop_move(self, state: GameState) -> tuple[int, ...]:
        """Least cop tuple among distance-optimal replies (cops to move)."""
        if state.turn != COPS_TO_MOVE:
            raise GraphError("optimal_cop_move needs a cops-to-move state")
        ci = self._ci(state.cops)
        r = state.robber
        if self._capture[ci] >> r & 1:
            return tuple(sorted(state.cops))
        best: int | None = None
        arg: int | None = None
        for sj in self._succ[ci]:
            d = self.dist_robber_move[sj][r]
            if d is not None and (best is None or d < best):
                best, arg = d, sj
        if arg is None:
            # escape state: fall back to closing distance (best effort)
            return _closing_cop_move(self.g, tuple(sorted(state.cops)), r)
        return self.configs[arg]

    def optimal_robber_move(self, state: GameState) -> int:
        """Escaping move if one exists, else the capture-distance maximiser;
        least vertex among ties.  A captured robber stays put."""
        if state.turn != ROBBER_TO_MOVE:
            raise GraphError("optimal_robber_move needs a robber-to-move state")
        ci = self._ci(state.cops)
        if self._capture[ci] >> state.robber & 1:
            return state.robber
        best_v = None
        best_d: int | None = -1
        for v in sorted(bits(closed_nbhd(self.g, state.robber))):
            d = self.dist_cops_move[ci][v]
            if d is None:
                return v
            if d > best_d:
                best_d, best_v = d, v
        assert best_v is not None
        return best_v

    def winning_placement(self) -> tuple[int, ...] | None:
        """Least cop placement that wins against every robber start."""
        for ci, cfg in enumerate(self.configs):
            if all(d is not None for d in self.dist_cops_move[ci]):
                return cfg
        return None


def _closing_cop_move(g: Graph, cops: tuple[int, ...], robber: int) -> tuple[int, ...]:
    """Best-effort pursuit for escape states: each cop independently takes
    the least closed-neighbour move minimising BFS distance to the robber."""
    from .graphs import bfs_distances

    dist = bfs_distances(g, robber)
    out = []
    for c in cops:
        cand = sorted(bits(closed_nbhd(g, c)))
        out.append(min(cand, key=lambda v: (dist.get(v, g.n + 1), v)))
    return tuple(sorted(out))


def solve(g: Graph, k: int = 2) -> SolveTable:
    """Retrograde solve of the k-cop game; k = 3 is supported only at
    Petersen scale (n <= 12)."""
    if g.n == 0:
        raise GraphError("solve: null graph")
    if not is_connected(g):
        raise GraphError("solve: disconnected graph")
    if k not in (1, 2, 3):
        raise GraphError("solve supports k in {1, 2, 3}")
    if k == 3 and g.n > 12:
        raise GraphError("k=3 solves are limited to n <= 12")
    return SolveTable(g, k)


def cop_number(g: Graph, k_max: int = 3) -> int | None:
    """Least k <= k_max with a winning cop placement; None if undecided."""
    if g.n == 0 or not is_connected(g):
        raise GraphError("cop_number needs a connected non-null graph")
    for k in range(1, min(k_max, 3) + 1):
        if k == 3 and g.n > 12:
            return None
        if solve(g, k).winning_placement() is not None:
            return k
    return None


def optimal_robber(table: SolveTable, state: GameState) -> int:
    return table.optimal_robber_move(state)


def best_initial(g: Graph, table: SolveTable, k: int) -> tuple[int, ...] | None:
    """Cop placement minimising the worst-case capture distance over robber
    replies; least placement among ties.  None if no placement wins."""
    if table.k != k or table.g != g:
        raise GraphError("table does not match the requested game")
    best = None
    arg = None
    for ci, cfg in enumerate(table.configs):
        dists = table.dist_cops_move[ci]
        if any(d is None for d in dists):
            continue
        worst = max(d for d in dists)  # type: ignore[arg-type]
        if best is None or worst < best:
            best, arg = worst, cfg
    return arg


def best_robber_start(g: Graph, table: SolveTable, cops: tuple[int, ...]) -> int:
    """Robber start maximising capture distance (an escape if possible);
    least vertex among ties."""
    ci = table._ci(cops)
    dists = table.dist_cops_move[ci]
    for v, d in enumerate(dists):
        if d is None:
            return v
    return max(range(g.n), key=lambda v: (dists[v], -v))
