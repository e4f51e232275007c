#!/usr/bin/env python3
"""Generate graph6 corpus files of all unlabeled simple graphs on n vertices.

Works by vertex augmentation: every graph on n vertices arises from some
graph on n-1 vertices plus one new vertex with an arbitrary neighbourhood,
so augmenting all (n-1)-vertex graphs with all 2^(n-1) neighbourhoods and
deduplicating by canonical form covers everything.  Canonical forms come
from a small individualization-refinement search (exact, exponential only
on highly symmetric graphs, which are rare and arise from few candidates).

Counts are cross-checked against the known numbers of unlabeled simple
graphs (1, 2, 4, 11, 34, 156, 1044, 12346, 274668 for n = 1..9).

Usage:
    python tools/gen_corpus.py --n 9 --out corpora/all_n9.g6 [--jobs 2]

This is a build-time tool; the shipped corpora/ files are its output and
the harness only ever ingests those files.
"""

from __future__ import annotations

import argparse
import multiprocessing as mp
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from copchase.graphs import Graph, pair_order, write_graph6  # noqa: E402

KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}
KNOWN_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            for sig in sorted(groups):
                out.append(groups[sig])
        if not changed:
            return out
        cells = out


def canonical_key(n: int, adj: tuple[int, ...]) -> int:
    """Packed upper-triangle bits (colex order) of the canonically labeled
    graph: the minimum over all refinement-consistent labelings."""
    best: int | None = None

    def leaf_key(cells: list[list[int]]) -> int:
        inv = [c[0] for c in cells]  # new label -> old vertex
        key = 0
        bit = 0
        for j in range(1, n):
            oj = inv[j]
            row = adj[oj]
            for i in range(j):
                if row >> inv[i] & 1:
                    key |= 1 << bit
                bit += 1
        return key

    def search(cells: list[list[int]]) -> None:
        nonlocal best
        cells = _refine(adj, cells)
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                for v in cell:
                    nxt = cells[:i] + [[v], [w for w in cell if w != v]] + cells[i + 1 :]
                    search(nxt)
                return
        key = leaf_key(cells)
        if best is None or key < best:
            best = key

    search([list(range(n))])
    assert best is not None
    return best


def key_to_graph(n: int, key: int) -> Graph:
    rows = [0] * n
    for bit, (i, j) in enumerate(pair_order(n)):
        if key >> bit & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph._raw(n, tuple(rows))


def _augment_worker(args: tuple[int, list[int]]) -> set[int]:
    n, parent_keys = args
    seen: set[int] = set()
    for pkey in parent_keys:
        parent = key_to_graph(n - 1, pkey)
        prows = parent.adj
        for nb in range(1 << (n - 1)):
            rows = [prows[v] | ((nb >> v & 1) << (n - 1)) for v in range(n - 1)]
            rows.append(nb)
            seen.add(canonical_key(n, tuple(rows)))
    return seen


def all_graph_keys(n: int, jobs: int = 1, verbose: bool = True) -> list[int]:
    keys = [0]  # the one-vertex graph
    for level in range(2, n + 1):
        t0 = time.time()
        if jobs > 1 and len(keys) >= jobs * 4:
            chunk = (len(keys) + jobs * 8 - 1) // (jobs * 8)
            shards = [(level, keys[i : i + chunk]) for i in range(0, len(keys), chunk)]
            with mp.Pool(jobs) as pool:
                parts = pool.map(_augment_worker, shards)
            merged: set[int] = set()
            for p in parts:
                merged |= p
        else:
            merged = _augment_worker((level, keys))
        keys = sorted(merged)
        expect = KNOWN_COUNTS.get(level)
        if expect is not None and len(keys) != expect:
            raise RuntimeError(f"n={level}: got {len(keys)} graphs, expected {expect}")
        if verbose:
            print(f"n={level}: {len(keys)} graphs ({time.time() - t0:.1f}s)", file=sys.stderr)
    return keys


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--out", required=True)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--connected-only", action="store_true")
    args = ap.parse_args()

    keys = all_graph_keys(args.n, jobs=args.jobs)
    graphs = (key_to_graph(args.n, k) for k in keys)
    if args.connected_only:
        from copchase.graphs import is_connected

        graphs = (g for g in graphs if is_connected(g))
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with out.open("w") as fh:
        for g in graphs:
            fh.write(write_graph6(g) + "\n")
            count += 1
    print(f"wrote {count} graphs to {out}", file=sys.stderr)
    if args.connected_only and args.n in KNOWN_CONNECTED:
        assert count == KNOWN_CONNECTED[args.n], (count, KNOWN_CONNECTED[args.n])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
