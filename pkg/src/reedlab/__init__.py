"""Exact oracles, the HEAVY STABLE SETS procedure, high-degree graph classes and
their colourings, all organised around the bound χ <= ceil((Δ + ω + 1) / 2)."""

from .exact import (
    Coloring,
    CriticalSubgraph,
    chromatic_number,
    clique_number,
    extract_critical,
    is_color_critical,
    is_k_colorable,
)
from .formats import emit_graph6, parse_dimacs, parse_edge_list, parse_graph6
from .graph import Graph
from .hss import HssTrace, run_hss, union_s, verify_trace
from .verifier import ReedReport, check_graph, reed_bound, stream_check

__version__ = "0.1.0"
