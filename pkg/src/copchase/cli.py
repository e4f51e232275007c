"""Command-line entry points.

Exit codes: 0 success/pass, 1 findings (a failed check, an escape, a
cap_failure), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import harness, recognition, solver, strategy, structure
from .graphs import (
    Graph,
    GraphError,
    parse_edge_list,
    parse_graph6,
    write_graph6,
)

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _looks_like_edge_list(text: str) -> bool:
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        return len(parts) == 2 and all(p.isdigit() for p in parts)
    return False


def load_graphs(path: str, fmt: str = "auto") -> list[Graph]:
    """Read one edge-list graph or any number of graph6 lines."""
    text = _read_input(path)
    if fmt == "auto":
        fmt = "edges" if _looks_like_edge_list(text) else "g6"
    if fmt == "edges":
        return [parse_edge_list(text)]
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            out.append(parse_graph6(line))
    if not out:
        raise GraphError("no graphs in input")
    return out


def _cmd_recognize(args) -> int:
    graphs = load_graphs(args.input, args.format)
    wanted = [
        name
        for name, flag in (
            ("p5", args.p5),
            ("2k2", args.twok2),
            ("c4", args.c4),
            ("bijoined", args.bijoined),
            ("srg", args.srg),
            ("moore", args.moore),
        )
        if flag
    ] or ["p5", "2k2", "c4", "bijoined", "srg", "moore"]
    for g in graphs:
        tag = write_graph6(g)
        lines = []
        if "p5" in wanted:
            w = recognition.find_induced_path(g, 5)
            lines.append(f"p5_free: {w is None}" + (f", witness: {list(w)}" if w else ""))
        if "2k2" in wanted:
            w = recognition.find_induced_2k2(g)
            lines.append(f"2k2_free: {w is None}" + (f", witness: {w}" if w else ""))
        if "c4" in wanted:
            w = recognition.find_induced_c4(g)
            lines.append(f"c4_free: {w is None}" + (f", witness: {list(w)}" if w else ""))
        if "bijoined" in wanted:
            bij = recognition.is_bijoined(g)
            uni = recognition.has_universal_vertex(g)
            lines.append(
                f"bijoined: {str(bij).lower()}, universal vertex: "
                + (f"present ({uni})" if uni is not None else "absent")
            )
        if "srg" in wanted:
            try:
                p = recognition.srg_parameters(g)
            except GraphError as exc:
                lines.append(f"srg: rejected ({exc})")
            else:
                lines.append(f"srg: {p.as_tuple() if p else None}")
        if "moore" in wanted:
            info = recognition.moore_info(g)
            if info is None:
                lines.append("moore: false")
            else:
                lines.append(
                    f"moore: true, k={info.params.k}, degree feasible: {info.degree_in_lookup}, "
                    f"n=k^2+1: {info.order_matches}"
                )
        print(f"{tag}:")
        for ln in lines:
            print(f"  {ln}")
    return EXIT_OK


def _cmd_copnumber(args) -> int:
    exit_code = EXIT_OK
    for g in load_graphs(args.input, args.format):
        c = solver.cop_number(g, k_max=args.kmax)
        print(c if c is not None else f">{args.kmax}")
        if c is None:
            exit_code = EXIT_FINDINGS
    return exit_code


def _cmd_domineering(args) -> int:
    exit_code = EXIT_OK
    for g in load_graphs(args.input, args.format):
        dp = structure.find_domineering_3path(g)
        if dp is None:
            print("absent")
            exit_code = EXIT_FINDINGS
        else:
            print(f"{dp.a}-{dp.b}-{dp.c}")
    return exit_code


def _cmd_strategy_synth(args) -> int:
    (g,) = load_graphs(args.input, args.format)[:1]
    plan = strategy.synthesize(g)
    out = {
        "graph6": write_graph6(g),
        "plan": strategy.plan_to_json(plan),
        "capture_bound": strategy.capture_bound(plan),
    }
    print(json.dumps(out, indent=2))
    return EXIT_OK


def _resolve_policy(g: Graph, name: str, seed: int):
    if name == "optimal":
        return strategy.OptimalRobber(solver.solve(g, 2))
    if name == "random":
        return strategy.RandomRobber(seed)
    if name == "greedy":
        return strategy.GreedyFarRobber()
    if name == "stationary":
        return strategy.StationaryRobber()
    raise ValueError(f"unknown robber policy {name!r}")


def _cmd_strategy_run(args) -> int:
    (g,) = load_graphs(args.input, args.format)[:1]
    plan = strategy.synthesize(g)
    policy = _resolve_policy(g, args.robber, args.seed)
    t = strategy.execute(g, plan, policy, max_turns=args.max_turns)
    print(json.dumps(t.to_json(), indent=2))
    return EXIT_OK if t.status == "captured" else EXIT_FINDINGS


class _ScriptedRobber:
    """Replays the robber moves of an exported transcript."""

    def __init__(self, start: int, moves: list[int]):
        self._start = start
        self._moves = iter(moves)

    def start(self, g, cops):
        return self._start

    def move(self, g, cops, robber, history):
        return next(self._moves)


def _cmd_strategy_replay(args) -> int:
    data = json.loads(_read_input(args.transcript))
    g = parse_graph6(data["graph6"])
    plan = strategy.synthesize(g)
    moves = [t["robber_after"] for t in data["turns"] if t["robber_after"] is not None]
    policy = _ScriptedRobber(data["initial_robber"], moves)
    t = strategy.execute(g, plan, policy, max_turns=data.get("max_turns"))
    replayed = t.to_json()
    mismatches = []
    if list(data["initial_cops"]) != replayed["initial_cops"]:
        mismatches.append("initial cop placement differs")
    for old, new in zip(data["turns"], replayed["turns"]):
        if old["cops_after"] != new["cops_after"]:
            mismatches.append(f"turn {old['turn']}: cop reply differs")
    if len(replayed["turns"]) != len(data["turns"]):
        mismatches.append("turn counts differ")
    if mismatches:
        print("replay mismatch:")
        for m in mismatches:
            print(f"  {m}")
        return EXIT_FINDINGS
    print(f"replay ok: {len(replayed['turns'])} turns, status {replayed['status']}")
    return EXIT_OK


def _cmd_scan(args) -> int:
    if (args.n is None) == (args.graph6 is None):
        print("scan: provide exactly one of --n or --graph6", file=sys.stderr)
        return EXIT_USAGE
    corpus = (
        harness.EnumeratedCorpus(args.n) if args.n is not None else harness.FileCorpus(args.graph6)
    )
    options = {}
    if args.robber:
        options["robber"] = args.robber
        options["seeds"] = args.seeds
    report = harness.scan(args.check, corpus, jobs=args.jobs, options=options)
    print(report.summary())
    for f in report.findings[:10]:
        print(f"  finding: {json.dumps(f)}")
    if args.report:
        harness.write_report(report, args.report)
        print(f"report written to {args.report}")
    return EXIT_OK if report.ok else EXIT_FINDINGS


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(session_cap=args.session_cap, session_ttl=args.session_ttl, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="copchase", description="cops-and-robbers workbench")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="graph file (graph6 lines or edge list), or - for stdin")
        p.add_argument("--format", choices=("auto", "g6", "edges"), default="auto")

    p = sub.add_parser("recognize", help="freeness and structure recognizers")
    p.add_argument("--p5", action="store_true")
    p.add_argument("--2k2", dest="twok2", action="store_true")
    p.add_argument("--c4", action="store_true")
    p.add_argument("--bijoined", action="store_true")
    p.add_argument("--srg", action="store_true")
    p.add_argument("--moore", action="store_true")
    add_input(p)
    p.set_defaults(fn=_cmd_recognize)

    p = sub.add_parser("copnumber", help="exact cop number via the game solver")
    p.add_argument("--kmax", type=int, default=3)
    add_input(p)
    p.set_defaults(fn=_cmd_copnumber)

    p = sub.add_parser("domineering", help="least domineering 3-path")
    add_input(p)
    p.set_defaults(fn=_cmd_domineering)

    p = sub.add_parser("strategy", help="two-cop strategy synthesis and play")
    ssub = p.add_subparsers(dest="strategy_command", required=True)
    ps = ssub.add_parser("synth", help="synthesize a plan")
    add_input(ps)
    ps.set_defaults(fn=_cmd_strategy_synth)
    pr = ssub.add_parser("run", help="run the plan against a robber policy")
    pr.add_argument("--robber", choices=("optimal", "random", "greedy", "stationary"), default="optimal")
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--max-turns", type=int, default=None)
    add_input(pr)
    pr.set_defaults(fn=_cmd_strategy_run)
    pp = ssub.add_parser("replay", help="replay an exported transcript and compare cop replies")
    pp.add_argument("transcript", help="transcript JSON file, or - for stdin")
    pp.set_defaults(fn=_cmd_strategy_replay)

    p = sub.add_parser("scan", help="run a corpus check")
    p.add_argument("--check", required=True, choices=sorted(harness.CHECKS))
    p.add_argument("--n", type=int, default=None, help="enumerate all labeled graphs on n vertices")
    p.add_argument("--graph6", default=None, help="graph6 corpus file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", default=None, help="write the JSON report here")
    p.add_argument("--robber", choices=("optimal", "random", "greedy", "stationary"), default=None)
    p.add_argument("--seeds", type=int, default=1, help="seed count for --robber random")
    p.set_defaults(fn=_cmd_scan)

    p = sub.add_parser("serve", help="local HTTP game service")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--session-cap", type=int, default=64)
    p.add_argument("--session-ttl", type=float, default=3600.0)
    p.add_argument("--static", default=None, help="serve this directory at / (playground build)")
    p.set_defaults(fn=_cmd_serve)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if getattr(args, "command", None) == "serve" and args.port is None:
        import os

        args.port = int(os.environ.get("COPCHASE_PORT", "8471"))
    try:
        return args.fn(args)
    except (GraphError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
