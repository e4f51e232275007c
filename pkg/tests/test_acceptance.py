"""Acceptance gate: every criterion below runs at its stated scale and
tolerance and prints one pass/fail line.

The heavy scans fan out across all CPUs; on a couple of cores the whole
module takes on the order of fifteen minutes.  Corpus files above n = 7
are ingested from corpora/ (see tools/gen_corpus.py for provenance).
"""

import multiprocessing
import os
import random

import networkx as nx
import pytest

from copchase.graphs import (
    complete_graph,
    cycle_graph,
    enumerate_labeled_graphs,
    labeled_graph_count,
    parse_graph6,
    path_graph,
    petersen_graph,
    write_graph6,
)
from copchase.harness import EnumeratedCorpus, FileCorpus, scan
from copchase.recognition import SrgParams, srg_feasible
from copchase.solver import cop_number
from copchase.structure import find_weak_domineering

JOBS = os.cpu_count() or 2


def _report_line(name: str, ok: bool, extra: str = "") -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}{': ' + extra if extra else ''}", flush=True)


def _run_scan(name, check, corpora, options=None):
    reports = []
    for corpus in corpora:
        r = scan(check, corpus, jobs=JOBS, options=options)
        reports.append(r)
    ok = all(r.ok for r in reports)
    detail = "; ".join(
        f"{r.corpus.get('n', r.corpus.get('path', '?'))}: {r.applicable} applicable" for r in reports
    )
    _report_line(name, ok, detail)
    for r in reports:
        assert r.ok, r.summary() + "\n" + "\n".join(map(str, r.findings[:3]))


@pytest.fixture(scope="module")
def n8_file(corpus_dir):
    p = corpus_dir / "all_n8.g6"
    assert p.exists(), "run tools/gen_corpus.py --n 8 first"
    return FileCorpus(str(p))


@pytest.fixture(scope="module")
def n9_file(corpus_dir):
    p = corpus_dir / "all_n9.g6"
    assert p.exists(), "run tools/gen_corpus.py --n 9 first"
    return FileCorpus(str(p))


def test_thm1_1_oracle(n8_file):
    """Two cops win on every connected P5-free graph: all labeled graphs
    n <= 7 plus the ingested n = 8 corpus.  Zero findings."""
    corpora = [EnumeratedCorpus(n) for n in range(1, 8)] + [n8_file]
    _run_scan("thm1.1 cop number <= 2 (n <= 8)", "thm1.1", corpora)


def test_thm1_1_strategy_optimal():
    """The synthesized strategy captures the table-optimal robber within
    20n^2+100 turns on every connected P5-free graph with n <= 7."""
    corpora = [EnumeratedCorpus(n) for n in range(1, 8)]
    _run_scan("thm1.1 strategy vs optimal robber (n <= 7)", "thm1.1-strategy", corpora)


def test_thm1_1_strategy_random_seeds():
    """100 seeded random robbers per graph at n <= 6: zero cap failures."""
    corpora = [EnumeratedCorpus(n) for n in range(1, 7)]
    _run_scan(
        "thm1.1 strategy vs 100 random robbers (n <= 6)",
        "thm1.1-strategy",
        corpora,
        options={"robber": "random", "seeds": 100},
    )


def test_thm1_2_domineering(n8_file):
    """Every connected P5-free graph with independence number >= 3 and
    n <= 8 has a domineering 3-path."""
    corpora = [EnumeratedCorpus(n) for n in range(1, 8)] + [n8_file]
    _run_scan("thm1.2 domineering 3-path exists (n <= 8)", "thm1.2", corpora)


def test_thm1_2_alpha2_remark():
    """On connected graphs with independence number exactly 2 (n <= 7),
    a domineering 3-path is absent iff the complement has diameter <= 2."""
    corpora = [EnumeratedCorpus(n) for n in range(1, 8)]
    _run_scan("thm1.2 alpha=2 complement-diameter remark (n <= 7)", "alpha2-diameter", corpora)


def test_thm1_4_weak_domineering():
    """Every connected 2K2-free graph with 3 <= n <= 7 other than the
    5-cycle has a weak-domineering triple; the 5-cycle has none."""
    assert find_weak_domineering(cycle_graph(5)) is None
    corpora = [EnumeratedCorpus(n) for n in range(3, 8)]
    _run_scan("thm1.4 weak domineering (3 <= n <= 7, C5 exempt)", "thm1.4", corpora)


def test_thm2_4_bijoined_universal(n8_file, n9_file):
    """Across all graphs n <= 9, every non-null bijoined graph has a
    universal vertex."""
    corpora = [EnumeratedCorpus(n) for n in range(1, 8)] + [n8_file, n9_file]
    _run_scan("thm2.4 bijoined implies universal vertex (n <= 9)", "thm2.4", corpora)


def test_thm2_1_degree_regularity(n8_file):
    """Every n <= 8 graph with girth >= 5, unique common neighbours for
    nonadjacent pairs and a connected complement is regular."""
    corpora = [EnumeratedCorpus(n) for n in range(1, 8)] + [n8_file]
    _run_scan("thm2.1 premises force regularity (n <= 8)", "thm2.1", corpora)


def test_thm2_3_srg_arithmetic():
    """Exact feasibility arithmetic on the four pinned parameter sets."""
    cases = [
        (SrgParams(5, 2, 0, 1), True),
        (SrgParams(10, 3, 0, 1), True),
        (SrgParams(41, 10, 3, 2), False),
        (SrgParams(3250, 57, 0, 1), True),
    ]
    ok = all(srg_feasible(p) is expect for p, expect in cases)
    _report_line("thm2.3 strongly-regular feasibility arithmetic", ok)
    for p, expect in cases:
        assert srg_feasible(p) is expect, p


def test_lemma4_1_anticomplete_propagation():
    """Premise-to-conclusion check over all connected P5-free graphs
    n <= 6 and every generated (H, u, v) configuration."""
    corpora = [EnumeratedCorpus(n) for n in range(2, 7)]
    _run_scan("lemma4.1 anticompleteness propagation (n <= 6)", "lemma4.1", corpora)


def test_lemma4_2_expansion_outcomes():
    """Soundness of every expansion outcome over all connected P5-free
    graphs n <= 6 and every generated (H, v) configuration."""
    corpora = [EnumeratedCorpus(n) for n in range(2, 7)]
    _run_scan("lemma4.2 expansion outcomes (n <= 6)", "lemma4.2", corpora)


def test_solver_sanity():
    """c(P_n) = c(K_n) = 1 for n <= 8, c(C_n) = 2 for 4 <= n <= 10, and
    c(Petersen) = 3, all exact."""
    ok = True
    for n in range(2, 9):
        ok &= cop_number(path_graph(n)) == 1
        ok &= cop_number(complete_graph(n)) == 1
    for n in range(4, 11):
        ok &= cop_number(cycle_graph(n)) == 2
    ok &= cop_number(petersen_graph()) == 3
    _report_line("solver sanity: paths, completes, cycles, Petersen", ok)
    assert ok


def _roundtrip_shard(args):
    n, lo, hi = args
    bad = 0
    for g in enumerate_labeled_graphs(n, start=lo, stop=hi):
        if parse_graph6(write_graph6(g)) != g:
            bad += 1
    return bad


def test_graph6_codec_roundtrip_full_enumeration():
    """write/parse round-trip is the identity over the entire n <= 7
    labeled enumeration."""
    bad = 0
    for n in range(0, 7):
        bad += _roundtrip_shard((n, 0, labeled_graph_count(n)))
    total = labeled_graph_count(7)
    shards = [(7, total * i // (JOBS * 4), total * (i + 1) // (JOBS * 4)) for i in range(JOBS * 4)]
    with multiprocessing.Pool(JOBS) as pool:
        bad += sum(pool.map(_roundtrip_shard, shards))
    _report_line("graph6 round-trip over full n <= 7 enumeration", bad == 0)
    assert bad == 0


def test_graph6_codec_against_reference(n9_file):
    """Byte equality against the networkx codec on 1000 sampled lines of
    the external corpus file, in both directions."""
    lines = [ln for ln in open(n9_file.path) if ln.strip()]
    rng = random.Random(20240901)
    sample = rng.sample(lines, 1000)
    ok = True
    for line in sample:
        s = line.strip()
        g = parse_graph6(s)
        H = nx.from_graph6_bytes(s.encode())
        ok &= set(H.edges()) == set(g.edges()) and H.number_of_nodes() == g.n
        ok &= nx.to_graph6_bytes(H, header=False).decode().strip() == write_graph6(g) == s
    _report_line("graph6 byte equality vs reference codec (1000 lines)", ok)
    assert ok
