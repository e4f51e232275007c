"""Local HTTP+JSON game service backing the playground.

A session wraps one graph and one live game.  On P5-free graphs the cops
are driven by the same :class:`~copchase.strategy.StrategyEngine` the
offline runner uses, so service replies and offline transcripts agree
move for move.  On other graphs (exploration is still allowed, the two
cops may simply not win) the cops fall back to table-optimal play.

Sessions are in-memory with an idle TTL and a capacity cap; vertices are
plain integers and every JSON field is lower_snake_case.
"""

from __future__ import annotations

import copy
import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from . import recognition, solver
from .graphs import (
    Graph,
    GraphError,
    bits,
    closed_nbhd,
    independence_number,
    is_connected,
    parse_edge_list,
    parse_graph6,
    write_graph6,
)
from .solver import COPS_TO_MOVE, GameState, SolveTable
from .strategy import StrategyEngine, synthesize


class _TableEngine:
    """Cop driver for non-P5-free sessions: greedy capture, else the
    table-optimal reply (best-effort pursuit on escape states)."""

    def __init__(self, g: Graph, table: SolveTable):
        self.g = g
        self.table = table
        placement = solver.best_initial(g, table, 2)
        if placement is None:
            placement = (0, 0)
        self.cops = [placement[0], placement[1]]
        self.robber: int | None = None
        self.turn = 0
        self.finished = False
        self.captured = False

    def cops_tuple(self) -> tuple[int, int]:
        return (self.cops[0], self.cops[1])

    def place_robber(self, v: int) -> None:
        self.robber = v
        if v in self.cops:
            self.finished = self.captured = True

    def legal_robber_targets(self) -> list[int]:
        assert self.robber is not None
        return sorted(bits(closed_nbhd(self.g, self.robber)))

    def cop_turn(self):
        assert self.robber is not None
        self.turn += 1
        for i in (0, 1):
            if self.g.adj[self.cops[i]] >> self.robber & 1:
                self.cops[i] = self.robber
                self.finished = self.captured = True
                return "greedy-capture", None
        state = GameState(tuple(sorted(self.cops)), self.robber, COPS_TO_MOVE)
        nxt = self.table.optimal_cop_move(state)
        self.cops = [nxt[0], nxt[1]]
        if self.robber in self.cops:
            self.finished = self.captured = True
        return "oracle", None

    def robber_turn(self, v: int) -> None:
        assert self.robber is not None
        if not closed_nbhd(self.g, self.robber) >> v & 1:
            raise GraphError(f"illegal robber move {self.robber} -> {v}")
        self.robber = v
        if v in self.cops:
            self.finished = self.captured = True


@dataclass
class _Session:
    id: str
    graph: Graph
    graph6: str
    p5_free: bool
    engine: StrategyEngine | _TableEngine
    table: SolveTable | None = None
    last_phase: str = "placement"
    last_annotation: str | None = None
    undo_stack: list = field(default_factory=list)
    touched: float = field(default_factory=time.monotonic)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def state_json(self) -> dict:
        e = self.engine
        robber = e.robber
        if e.robber is None:
            status = "awaiting_robber"
        elif e.captured:
            status = "captured"
        else:
            status = "playing"
        return {
            "id": self.id,
            "graph6": self.graph6,
            "n": self.graph.n,
            "cops": list(e.cops_tuple()),
            "robber": robber,
            "turn": e.turn,
            "phase": self.last_phase,
            "status": status,
            "captured": e.captured,
            "legal_robber_moves": e.legal_robber_targets() if robber is not None and not e.captured else [],
        }

    def ensure_table(self) -> SolveTable:
        if self.table is None:
            self.table = solver.solve(self.graph, 2)
        return self.table


class SessionBody(BaseModel):
    graph6: str | None = None
    edges: str | None = None


class StartBody(BaseModel):
    robber: int


class MoveBody(BaseModel):
    to: int


def create_app(session_cap: int = 64, session_ttl: float = 3600.0, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="copchase service")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    sessions: dict[str, _Session] = {}
    registry_lock = threading.Lock()

    def purge() -> None:
        now = time.monotonic()
        dead = [sid for sid, s in sessions.items() if now - s.touched > session_ttl]
        for sid in dead:
            sessions.pop(sid, None)

    def get_session(sid: str) -> _Session:
        with registry_lock:
            purge()
            s = sessions.get(sid)
        if s is None:
            raise HTTPException(404, detail=f"unknown session {sid}")
        s.touched = time.monotonic()
        return s

    @app.post("/api/session")
    def create_session(body: SessionBody):
        if (body.graph6 is None) == (body.edges is None):
            raise HTTPException(400, detail="provide exactly one of graph6 or edges")
        try:
            g = parse_graph6(body.graph6.strip()) if body.graph6 else parse_edge_list(body.edges)
        except GraphError as exc:
            raise HTTPException(422, detail=f"unsupported graph: {exc}")
        if g.n >= 63:
            raise HTTPException(422, detail="unsupported graph: n >= 63")
        if g.n == 0 or not is_connected(g):
            raise HTTPException(422, detail="unsupported graph: disconnected or null")
        p5 = recognition.is_p5_free(g)
        alpha = independence_number(g)
        cnum = solver.cop_number(g, k_max=3 if g.n <= 12 else 2)
        table = None
        if p5:
            engine: StrategyEngine | _TableEngine = StrategyEngine(g, synthesize(g))
        else:
            table = solver.solve(g, 2)
            engine = _TableEngine(g, table)
        sid = uuid.uuid4().hex[:12]
        sess = _Session(sid, g, write_graph6(g), p5, engine, table=table)
        with registry_lock:
            purge()
            if len(sessions) >= session_cap:
                raise HTTPException(503, detail="session capacity reached")
            sessions[sid] = sess
        return {
            "id": sid,
            "n": g.n,
            "edges": [list(e) for e in g.edges()],
            "p5_free": p5,
            "alpha": alpha,
            "cop_number": cnum,
            "initial_cops": list(engine.cops_tuple()),
        }

    @app.post("/api/session/{sid}/start")
    def start(sid: str, body: StartBody):
        s = get_session(sid)
        with s.lock:
            if s.engine.robber is not None:
                raise HTTPException(400, detail="session already started")
            if not 0 <= body.robber < s.graph.n:
                raise HTTPException(
                    400,
                    detail={"message": "illegal robber start", "legal_moves": list(range(s.graph.n))},
                )
            s.undo_stack.append(_snapshot(s))
            s.engine.place_robber(body.robber)
            if not s.engine.finished:
                phase, annotation = _engine_cop_turn(s)
                s.last_phase, s.last_annotation = phase, annotation
            else:
                s.last_phase = "captured"
            return s.state_json()

    @app.post("/api/session/{sid}/robber-move")
    def robber_move(sid: str, body: MoveBody):
        s = get_session(sid)
        with s.lock:
            e = s.engine
            if e.robber is None:
                raise HTTPException(400, detail="session not started")
            if e.finished:
                raise HTTPException(400, detail="game over")
            legal = e.legal_robber_targets()
            if body.to not in legal:
                raise HTTPException(
                    400, detail={"message": "illegal move", "legal_moves": legal}
                )
            s.undo_stack.append(_snapshot(s))
            e.robber_turn(body.to)
            cop_reply = None
            if not e.finished:
                phase, annotation = _engine_cop_turn(s)
                s.last_phase, s.last_annotation = phase, annotation
                cop_reply = {
                    "cops": list(e.cops_tuple()),
                    "phase": phase,
                    "annotation": annotation,
                    "captured": e.captured,
                }
            else:
                s.last_phase = "captured"
            state = s.state_json()
            return {
                "cop_reply": cop_reply,
                "state": state,
                "captured": e.captured,
                "phase": s.last_phase,
                "annotation": s.last_annotation,
            }

    @app.get("/api/session/{sid}/hint")
    def hint(sid: str):
        s = get_session(sid)
        with s.lock:
            e = s.engine
            if e.robber is None:
                raise HTTPException(400, detail="session not started")
            table = s.ensure_table()
            cops = tuple(sorted(e.cops_tuple()))
            dists = [
                table.capture_distance(GameState(cops, v, COPS_TO_MOVE)) for v in range(s.graph.n)
            ]
            legal = e.legal_robber_targets() if not e.finished else []
            best: list[int] = []
            if legal:
                if any(dists[v] is None for v in legal):
                    best = [v for v in legal if dists[v] is None]
                else:
                    top = max(dists[v] for v in legal)  # type: ignore[type-var]
                    best = [v for v in legal if dists[v] == top]
            return {
                "capture_distance": dists,
                "best_moves": best,
                "legal_moves": legal,
            }

    @app.post("/api/session/{sid}/undo")
    def undo(sid: str):
        s = get_session(sid)
        with s.lock:
            if not s.undo_stack:
                raise HTTPException(400, detail="nothing to undo")
            snap = s.undo_stack.pop()
            _restore(s, snap)
            return s.state_json()

    def _engine_cop_turn(s: _Session) -> tuple[str, str | None]:
        e = s.engine
        if isinstance(e, StrategyEngine):
            rec = e.cop_turn()
            return rec.phase, rec.annotation
        return e.cop_turn()

    def _snapshot(s: _Session):
        return (copy.deepcopy(s.engine), s.last_phase, s.last_annotation)

    def _restore(s: _Session, snap) -> None:
        s.engine, s.last_phase, s.last_annotation = snap

    if static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="playground")

    return app
