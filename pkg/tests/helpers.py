"""Corpus loading and hypothesis strategies shared by the tests."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from hypothesis import strategies as st

from reedlab.enumerate import graphs_on
from reedlab.formats import read_graph6_lines
from reedlab.graph import Graph

DATA = Path(__file__).resolve().parent.parent / "data"


@lru_cache(maxsize=None)
def corpus(n: int) -> tuple[Graph, ...]:
    """All graphs on exactly n vertices up to isomorphism (from data/ if present)."""
    path = DATA / f"graphs{n}.g6"
    if path.exists():
        return tuple(read_graph6_lines(path.read_text()))
    return tuple(graphs_on(n))


def corpus_up_to(max_n: int) -> list[Graph]:
    return [g for n in range(1, max_n + 1) for g in corpus(n)]


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


