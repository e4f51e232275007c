"""Cops-and-robbers workbench for small dense graphs.

Subpackages:

* :mod:`copchase.graphs` -- immutable bitset graphs, graph6/edge-list codecs
* :mod:`copchase.recognition` -- induced-subgraph freeness and strongly
  regular / bijoined decision procedures
* :mod:`copchase.structure` -- domineering paths, retracts, P3-connected
  subgraphs and snares
* :mod:`copchase.solver` -- exact retrograde game solver (the oracle)
* :mod:`copchase.strategy` -- two-cop strategy synthesis and execution
* :mod:`copchase.harness` -- corpus scans and reports
* :mod:`copchase.service` -- HTTP game service backing the playground
"""

__version__ = "0.1.0"

from .graphs import Graph, parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .recognition import is_bijoined, is_moore, is_p5_free, srg_feasible, srg_parameters
from .solver import cop_number, solve
from .strategy import execute, synthesize
from .structure import build_snare, find_domineering_3path, verify_snare

__all__ = [
    "Graph",
    "parse_graph6",
    "write_graph6",
    "parse_edge_list",
    "write_edge_list",
    "is_p5_free",
    "is_bijoined",
    "is_moore",
    "srg_parameters",
    "srg_feasible",
    "find_domineering_3path",
    "build_snare",
    "verify_snare",
    "solve",
    "cop_number",
    "synthesize",
    "execute",
    "__version__",
]
