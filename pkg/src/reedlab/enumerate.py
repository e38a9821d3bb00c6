"""Built-in enumerator of non-isomorphic graphs on few vertices.

Bigger corpora are meant to come from external graph6 files (e.g. ``geng``
output); this exists so the test-suite is hermetic. Graphs on ``n`` vertices
are grown from those on ``n-1`` by adding a vertex with every possible
neighbourhood, bucketed by a colour-refinement invariant, and deduplicated
inside each bucket with VF2. Practical up to n = 8 (about two minutes).
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from typing import Iterator

import networkx as nx

from .formats import emit_graph6
from .graph import Graph

# number of non-isomorphic graphs on n vertices, n = 0..10 (OEIS A000088)
KNOWN_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168)


def _invariant(g: Graph) -> tuple:
    colors = [len(r) for r in g.adj]
    for _ in range(3):
        sig = [(colors[v], tuple(sorted(colors[u] for u in g.adj[v]))) for v in range(g.n)]
        table = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [table[s] for s in sig]
        if len(set(new)) == len(set(colors)):
            colors = new
            break
        colors = new
    return (g.n, g.m, tuple(sorted(sig)) if g.n else ())


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _extend(graphs: list[Graph]) -> list[Graph]:
    buckets: dict[tuple, list[tuple[Graph, nx.Graph]]] = defaultdict(list)
    out: list[Graph] = []
    for g in graphs:
        n = g.n
        base_edges = g.edges()
        for size in range(n + 1):
            for nbrs in combinations(range(n), size):
                h = Graph.from_edges(n + 1, base_edges + [(u, n) for u in nbrs])
                bucket = buckets[_invariant(h)]
                hx = _to_nx(h)
                if any(nx.is_isomorphic(hx, other) for _, other in bucket):
                    continue
                bucket.append((h, hx))
                out.append(h)
    return out


def graphs_on(n: int) -> list[Graph]:
    """All graphs on exactly ``n`` vertices up to isomorphism."""
    level = [Graph(0, ())]
    for _ in range(n):
        level = _extend(level)
    return level


def graphs_up_to(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    level = [Graph(0, ())]
    for n in range(max_n + 1):
        if n > 0:
            level = _extend(level)
        if n >= min_n:
            yield from level


def graph6_corpus(n: int) -> list[str]:
    return [emit_graph6(g) for g in graphs_on(n)]
