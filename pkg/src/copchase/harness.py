"""Corpus scans: run a structural check over every graph of a corpus and
aggregate a deterministic report.

Corpora are either the internal labeled enumeration (n <= 7) or an
ingested graph6 file (larger vertex counts are never generated on the
fly; reports record the file digest for provenance).  Scans fan out
across index shards and reduce deterministically, so a report's canonical
content is byte-identical regardless of the job count.  Per-graph
exceptions become findings, not crashes.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing as mp
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator

from . import recognition, solver, structure
from .graphs import (
    Graph,
    bits,
    complement,
    diameter,
    enumerate_labeled_graphs,
    has_independent_set,
    is_connected,
    labeled_graph_count,
    parse_graph6,
    write_graph6,
)
from .strategy import (
    GreedyFarRobber,
    OptimalRobber,
    RandomRobber,
    StationaryRobber,
    default_max_turns,
    execute,
    synthesize,
)
from .structure import Apex, Complete, Extended, _path_subgraph, p3_expand, validate_p3

MAX_FINDINGS = 100


# ---------------------------------------------------------------------------
# corpora
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EnumeratedCorpus:
    """All labeled simple graphs on n vertices (n <= 7)."""

    n: int

    def describe(self) -> dict:
        return {"kind": "enumerated", "n": self.n, "count": labeled_graph_count(self.n)}

    def size(self) -> int:
        return labeled_graph_count(self.n)

    def slice(self, lo: int, hi: int) -> Iterator[Graph]:
        return enumerate_labeled_graphs(self.n, start=lo, stop=hi)


@dataclass(frozen=True)
class FileCorpus:
    """graph6 file, one graph per line."""

    path: str

    def describe(self) -> dict:
        data = Path(self.path).read_bytes()
        return {
            "kind": "file",
            "path": str(self.path),
            "sha256": hashlib.sha256(data).hexdigest(),
            "count": sum(1 for ln in data.splitlines() if ln.strip()),
        }

    def size(self) -> int:
        with open(self.path, "rb") as fh:
            return sum(1 for ln in fh if ln.strip())

    def slice(self, lo: int, hi: int) -> Iterator[Graph]:
        with open(self.path) as fh:
            idx = 0
            for ln in fh:
                ln = ln.strip()
                if not ln:
                    continue
                if idx >= hi:
                    return
                if idx >= lo:
                    yield parse_graph6(ln)
                idx += 1


Corpus = EnumeratedCorpus | FileCorpus


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------


@dataclass
class Check:
    id: str
    description: str
    applies: Callable[[Graph, dict], bool]
    run: Callable[[Graph, dict], dict | None]  # finding detail or None


def _connected_p5_free(g: Graph, options: dict) -> bool:
    return is_connected(g) and recognition.is_p5_free(g)


def _check_two_cops_win(g: Graph, options: dict) -> dict | None:
    table = solver.solve(g, 2)
    if table.winning_placement() is None:
        return {"reason": "no winning two-cop placement"}
    return None


def _strategy_policies(g: Graph, options: dict):
    name = options.get("robber", "optimal")
    if name == "optimal":
        yield "optimal", OptimalRobber(solver.solve(g, 2))
    elif name == "random":
        for seed in range(int(options.get("seeds", 1))):
            yield f"random:{seed}", RandomRobber(seed)
    elif name == "greedy":
        yield "greedy_far", GreedyFarRobber()
    elif name == "stationary":
        yield "stationary", StationaryRobber()
    else:
        raise ValueError(f"unknown robber policy {name!r}")


def _check_strategy_captures(g: Graph, options: dict) -> dict | None:
    plan = synthesize(g)
    max_turns = options.get("max_turns") or default_max_turns(g.n)
    for label, policy in _strategy_policies(g, options):
        t = execute(g, plan, policy, max_turns=max_turns)
        if t.status != "captured":
            return {
                "reason": "cap_failure",
                "robber": label,
                "max_turns": max_turns,
                "transcript": t.to_json(),
            }
    return None


def _applies_alpha3(g: Graph, options: dict) -> bool:
    return _connected_p5_free(g, options) and has_independent_set(g, 3)


def _check_domineering_exists(g: Graph, options: dict) -> dict | None:
    dp = structure.find_domineering_3path(g)
    if dp is None:
        return {"reason": "no domineering 3-path"}
    if not structure.is_domineering(g, dp.a, dp.b, dp.c):
        return {"reason": "witness fails the domineering predicate", "witness": list(dp.as_tuple())}
    return None


def _applies_alpha2(g: Graph, options: dict) -> bool:
    return is_connected(g) and not has_independent_set(g, 3) and has_independent_set(g, 2)


def _check_alpha2_diameter(g: Graph, options: dict) -> dict | None:
    absent = structure.find_domineering_3path(g) is None
    d = diameter(complement(g))
    small = d is not None and d <= 2
    if absent != small:
        return {
            "reason": "domineering absence disagrees with complement diameter",
            "domineering_absent": absent,
            "complement_diameter": d,
        }
    return None


def _is_c5(g: Graph) -> bool:
    return g.n == 5 and is_connected(g) and all(row.bit_count() == 2 for row in g.adj)


def _applies_weak_dom(g: Graph, options: dict) -> bool:
    return g.n >= 3 and is_connected(g) and recognition.is_2k2_free(g) and not _is_c5(g)


def _check_weak_domineering(g: Graph, options: dict) -> dict | None:
    if structure.find_weak_domineering(g) is None:
        return {"reason": "no weak-domineering triple"}
    return None


def _applies_premises(g: Graph, options: dict) -> bool:
    return g.n > 0 and recognition.moore_degree_lemma_premises(g)


def _check_regular(g: Graph, options: dict) -> dict | None:
    if not recognition.is_regular(g):
        return {"reason": "premises hold but degrees differ", "degrees": [g.degree(v) for v in range(g.n)]}
    return None


def _applies_bijoined(g: Graph, options: dict) -> bool:
    return g.n > 0 and recognition.is_bijoined(g)


def _check_universal(g: Graph, options: dict) -> dict | None:
    if recognition.has_universal_vertex(g) is None:
        return {"reason": "bijoined graph without a universal vertex"}
    return None


def _p3_family(g: Graph) -> list:
    """Deterministic family of P3-connected subgraphs: every induced path on
    2..4 vertices plus every Extended/Apex expansion of one by one vertex."""
    paths = []

    def grow(path, chosen, blocked):
        if len(path) >= 2:
            paths.append(tuple(path))
        if len(path) == 4:
            return
        last = path[-1]
        for v in bits(g.adj[last] & ~chosen & ~blocked):
            path.append(v)
            grow(path, chosen | (1 << v), blocked | g.adj[last])
            path.pop()

    for v0 in range(g.n):
        grow([v0], 1 << v0, 0)
    subs = {}
    for p in paths:
        if p[0] > p[-1]:
            continue  # skip reversals
        h = _path_subgraph(g, list(p))
        subs[(h.vertices, h.edges)] = h
    for h in list(subs.values()):
        for v in range(g.n):
            if h.has_vertex(v):
                continue
            res = p3_expand(g, h, v)
            if isinstance(res, (Extended, Apex)):
                hh = res.h
                subs.setdefault((hh.vertices, hh.edges), hh)
    return list(subs.values())


def _check_anticomplete_propagation(g: Graph, options: dict) -> dict | None:
    full = g.full_mask
    for h in _p3_family(g):
        hv = h.vertices
        if not h.edges:
            continue
        # only a vertex vv touching V(H) can violate the conclusion
        for vv in bits(full & ~hv):
            if not g.adj[vv] & hv:
                continue
            if not any(
                not (g.adj[vv] >> x & 1) and not (g.adj[vv] >> y & 1) for x, y in h.edges
            ):
                continue  # premise: some H-edge fully non-adjacent to vv
            for uu in bits(g.adj[vv] & ~hv):
                if g.adj[uu] & hv == 0:
                    return {
                        "reason": "neighbour of an anticomplete vertex touches the subgraph",
                        "subgraph_vertices": sorted(bits(hv)),
                        "subgraph_edges": sorted(h.edges),
                        "u": uu,
                        "v": vv,
                    }
    return None


def _check_expansion_outcomes(g: Graph, options: dict) -> dict | None:
    for h in _p3_family(g):
        for v in range(g.n):
            res = p3_expand(g, h, v)
            detail = {
                "subgraph_vertices": sorted(bits(h.vertices)),
                "subgraph_edges": sorted(h.edges),
                "v": v,
                "outcome": type(res).__name__,
            }
            if isinstance(res, Extended):
                hh = res.h
                if not (
                    h.vertices & ~hh.vertices == 0
                    and h.edges <= hh.edges
                    and hh.has_vertex(v)
                    and validate_p3(hh)
                ):
                    detail["reason"] = "extended outcome invalid"
                    return detail
            elif isinstance(res, Apex):
                hh = res.h
                apex_ok = all(
                    structure._edge(res.u, w) in hh.edges for w in bits(h.vertices) if w != res.u
                )
                if not (hh.has_vertex(v) and apex_ok and validate_p3(hh)):
                    detail["reason"] = "apex outcome invalid"
                    return detail
            else:
                if g.adj[v] & h.vertices != h.vertices & ~(1 << v):
                    detail["reason"] = "complete outcome invalid"
                    return detail
    return None


CHECKS: dict[str, Check] = {
    c.id: c
    for c in [
        Check(
            "thm1.1",
            "two cops win on every connected P5-free graph",
            _connected_p5_free,
            _check_two_cops_win,
        ),
        Check(
            "thm1.1-strategy",
            "the synthesized strategy captures on every connected P5-free graph",
            _connected_p5_free,
            _check_strategy_captures,
        ),
        Check(
            "thm1.2",
            "every connected P5-free graph with independence number >= 3 has a domineering 3-path",
            _applies_alpha3,
            _check_domineering_exists,
        ),
        Check(
            "alpha2-diameter",
            "for connected graphs with independence number 2, no domineering 3-path iff the complement has diameter <= 2",
            _applies_alpha2,
            _check_alpha2_diameter,
        ),
        Check(
            "thm1.4",
            "every connected 2K2-free graph on >= 3 vertices other than the 5-cycle has a weak-domineering triple",
            _applies_weak_dom,
            _check_weak_domineering,
        ),
        Check(
            "thm2.1",
            "girth >= 5, unique common neighbours and a connected complement force regularity",
            _applies_premises,
            _check_regular,
        ),
        Check(
            "thm2.4",
            "every non-null bijoined graph has a universal vertex",
            _applies_bijoined,
            _check_universal,
        ),
        Check(
            "lemma4.1",
            "anticompleteness propagates along edges outside a P3-connected subgraph",
            _connected_p5_free,
            _check_anticomplete_propagation,
        ),
        Check(
            "lemma4.2",
            "P3-connected expansion returns a sound Extended/Apex/Complete outcome",
            _connected_p5_free,
            _check_expansion_outcomes,
        ),
    ]
}


# ---------------------------------------------------------------------------
# reports and the scan driver
# ---------------------------------------------------------------------------


@dataclass
class ScanReport:
    check: str
    corpus: dict
    scanned: int
    applicable: int
    passed: int
    findings: list[dict] = field(default_factory=list)
    findings_truncated: bool = False
    wall_time_s: float = 0.0

    @property
    def ok(self) -> bool:
        return self.passed == self.applicable and not self.findings

    def canonical(self) -> dict:
        """Report content without timing, the part that is deterministic."""
        return {
            "check": self.check,
            "corpus": self.corpus,
            "scanned": self.scanned,
            "applicable": self.applicable,
            "passed": self.passed,
            "findings": self.findings,
            "findings_truncated": self.findings_truncated,
        }

    def to_json(self) -> dict:
        out = self.canonical()
        out["wall_time_s"] = round(self.wall_time_s, 3)
        return out

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (
            f"[{status}] {self.check}: scanned={self.scanned} applicable={self.applicable} "
            f"passed={self.passed} findings={len(self.findings)} ({self.wall_time_s:.1f}s)"
        )


def _scan_shard(args) -> tuple[int, int, int, list[tuple[int, str, dict]]]:
    corpus, check_id, options, lo, hi = args
    check = CHECKS[check_id]
    scanned = applicable = passed = 0
    findings: list[tuple[int, str, dict]] = []
    for idx, g in enumerate(corpus.slice(lo, hi), start=lo):
        scanned += 1
        try:
            if not check.applies(g, options):
                continue
            applicable += 1
            detail = check.run(g, options)
            if detail is None:
                passed += 1
            elif len(findings) < MAX_FINDINGS:
                findings.append((idx, write_graph6(g), detail))
        except Exception as exc:  # per-graph errors become findings
            applicable += 1
            if len(findings) < MAX_FINDINGS:
                findings.append(
                    (idx, write_graph6(g), {"reason": "error", "error": f"{type(exc).__name__}: {exc}"})
                )
    return scanned, applicable, passed, findings


def scan(
    check_id: str,
    corpus: Corpus,
    jobs: int = 1,
    options: dict | None = None,
) -> ScanReport:
    if check_id not in CHECKS:
        raise ValueError(f"unknown check {check_id!r}; known: {', '.join(sorted(CHECKS))}")
    options = options or {}
    t0 = time.time()
    total = corpus.size()
    jobs = max(1, jobs)
    nshards = 1 if jobs == 1 else min(total, jobs * 8)
    bounds = [(total * i // nshards, total * (i + 1) // nshards) for i in range(nshards)]
    shard_args = [(corpus, check_id, options, lo, hi) for lo, hi in bounds if lo < hi]
    if jobs == 1 or len(shard_args) <= 1:
        parts = [_scan_shard(a) for a in shard_args]
    else:
        with mp.Pool(jobs) as pool:
            parts = pool.map(_scan_shard, shard_args)
    scanned = sum(p[0] for p in parts)
    applicable = sum(p[1] for p in parts)
    passed = sum(p[2] for p in parts)
    raw = sorted((f for p in parts for f in p[3]), key=lambda t: t[0])
    truncated = len(raw) > MAX_FINDINGS or applicable - passed > len(raw)
    findings = [
        {"index": idx, "graph6": g6, **detail} for idx, g6, detail in raw[:MAX_FINDINGS]
    ]
    return ScanReport(
        check=check_id,
        corpus=corpus.describe(),
        scanned=scanned,
        applicable=applicable,
        passed=passed,
        findings=findings,
        findings_truncated=truncated,
        wall_time_s=time.time() - t0,
    )


def write_report(report: ScanReport, path: str) -> None:
    Path(path).write_text(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n")
