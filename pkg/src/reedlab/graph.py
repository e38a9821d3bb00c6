"""Immutable simple undirected graphs and elementary queries.

Vertices are dense ids ``0..n-1``. Every formats module shifts 1-based ids at
the boundary, so nothing in here ever sees a 1-based id.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for invalid vertex ids, loops and other structural errors."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"loop at vertex {v}")
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency {v}->{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph; duplicate edges collapse, loops and bad ids raise."""
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(frozenset(r) for r in rows))

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return sorted(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degrees(self) -> list[int]:
        return [len(r) for r in self.adj]

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))


def degree(g: Graph, v: int) -> int:
    g._check(v)
    return len(g.adj[v])


def max_degree(g: Graph) -> int:
    """Maximum degree; 0 for the graph on no vertices."""
    return max((len(r) for r in g.adj), default=0)


def min_degree(g: Graph) -> int:
    """Minimum degree; 0 for the graph on no vertices."""
    return min((len(r) for r in g.adj), default=0)


def vertex_set(g: Graph, vs: Iterable[int]) -> list[int]:
    """Validate ``vs`` against ``g`` and return it as a sorted duplicate-free list."""
    out = sorted(set(vs))
    for v in out:
        g._check(v)
    return out


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vs``.

    Returns the new graph and the index map: ``index_map[i]`` is the original
    id of new vertex ``i``. New ids follow increasing original ids.
    """
    index_map = vertex_set(g, vs)
    pos = {v: i for i, v in enumerate(index_map)}
    rows = tuple(
        frozenset(pos[u] for u in g.adj[v] if u in pos) for v in index_map
    )
    return Graph(len(index_map), rows), index_map


def remove_vertices(g: Graph, vs: Iterable[int]) -> tuple[Graph, list[int]]:
    drop = set(vertex_set(g, vs))
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def is_stable(g: Graph, vs: Iterable[int]) -> tuple[bool, tuple[int, int] | None]:
    """Whether ``vs`` is stable; on failure also the lexicographically first edge inside it."""
    s = vertex_set(g, vs)
    members = set(s)
    for u in s:
        for v in sorted(g.adj[u]):
            if u < v and v in members:
                return False, (u, v)
    return True, None


def is_clique(g: Graph, vs: Sequence[int]) -> bool:
    s = vertex_set(g, vs)
    return all(v in g.adj[u] for i, u in enumerate(s) for v in s[i + 1:])


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Components of ``g`` (or of the subgraph induced by ``within``), each sorted,
    ordered by smallest vertex."""
    allowed = set(range(g.n)) if within is None else set(within)
    seen: set[int] = set()
    comps = []
    for root in sorted(allowed):
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if u in allowed and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


# ---------------------------------------------------------------------------
# bipartiteness


@dataclass(frozen=True)
class Bipartition:
    left: list[int]
    right: list[int]


@dataclass(frozen=True)
class OddCycle:
    """Chordless odd cycle, vertices listed in cyclic order."""

    vertices: list[int]

    def __len__(self) -> int:
        return len(self.vertices)


def check_odd_cycle(g: Graph, cycle: Sequence[int]) -> str | None:
    """Return why ``cycle`` is not a chordless odd cycle of ``g``, or None if it is."""
    k = len(cycle)
    if k < 3 or k % 2 == 0:
        return f"length {k} is not odd >= 3"
    if len(set(cycle)) != k:
        return "repeated vertex"
    for v in cycle:
        if not 0 <= v < g.n:
            return f"vertex {v} out of range"
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            adjacent = cycle[j] in g.adj[cycle[i]]
            if consecutive and not adjacent:
                return f"missing cycle edge {cycle[i]}-{cycle[j]}"
            if adjacent and not consecutive:
                return f"chord {cycle[i]}-{cycle[j]}"
    return None


def _bfs_layers(g: Graph, root: int, allowed: set[int]) -> tuple[dict[int, int], dict[int, int]]:
    dist = {root: 0}
    parent = {root: -1}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in sorted(g.adj[v]):
            if u in allowed and u not in dist:
                dist[u] = dist[v] + 1
                parent[u] = v
                queue.append(u)
    return dist, parent


def _path_to_root(parent: dict[int, int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def shortest_odd_cycle(g: Graph, within: Iterable[int] | None = None) -> OddCycle | None:
    """A shortest odd cycle of ``g`` (restricted to ``within`` if given).

    From each root, BFS; an edge between two vertices in the same layer closes
    an odd closed walk of length ``2d+1`` through the root. When the two tree
    paths only meet at the root, the walk is a cycle. The minimum over all roots
    of such ``2d+1`` is the odd girth, and a shortest odd cycle has no chords.
    Ties go to the lowest root, then the lexicographically smallest sequence.
    """
    allowed = set(range(g.n)) if within is None else set(within)
    best: list[int] | None = None
    for root in sorted(allowed):
        dist, parent = _bfs_layers(g, root, allowed)
        for v in dist:
            for u in g.adj[v]:
                if u not in dist or u <= v or dist[u] != dist[v]:
                    continue
                pv = _path_to_root(parent, v)
                pu = _path_to_root(parent, u)
                if set(pv[:-1]) & set(pu[:-1]):
                    continue
                # root, ..., v, u, ..., (back to root)
                cyc = pv[::-1] + pu[:-1]
                if best is None or (len(cyc), _rotation_key(cyc)) < (len(best), _rotation_key(best)):
                    best = cyc
        if best is not None and len(best) == 3:
            break
    if best is None:
        return None
    return OddCycle(_normalize_cycle(best))


def _normalize_cycle(cyc: list[int]) -> list[int]:
    """Rotate to start at the smallest vertex, direction with the smaller second element."""
    i = cyc.index(min(cyc))
    fwd = cyc[i:] + cyc[:i]
    bwd = [fwd[0]] + fwd[1:][::-1]
    return min(fwd, bwd)


def _rotation_key(cyc: list[int]) -> list[int]:
    return _normalize_cycle(cyc)


def bipartition_or_odd_cycle(g: Graph, within: Iterable[int] | None = None) -> Bipartition | OddCycle:
    """2-colour ``g`` by BFS, or return a shortest (hence chordless) odd cycle."""
    allowed = set(range(g.n)) if within is None else set(within)
    side: dict[int, int] = {}
    for root in sorted(allowed):
        if root in side:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if u not in allowed:
                    continue
                if u not in side:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    cyc = shortest_odd_cycle(g, allowed)
                    assert cyc is not None
                    return cyc
    return Bipartition(
        sorted(v for v, s in side.items() if s == 0),
        sorted(v for v, s in side.items() if s == 1),
    )


# ---------------------------------------------------------------------------
# generators


def empty(n: int) -> Graph:
    if n < 0:
        raise GraphError("n must be >= 0")
    return Graph(n, tuple(frozenset() for _ in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Graph:
    """K_{1,n}: centre 0 joined to ``n`` leaves."""
    if n < 1:
        raise GraphError("star needs n >= 1 leaves")
    return Graph.from_edges(n + 1, ((0, i) for i in range(1, n + 1)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def chvatal() -> Graph:
    """The Chvátal graph: 12 vertices, 24 edges, 4-regular, triangle-free, 4-chromatic."""
    edges = [
        (0, 1), (0, 4), (0, 6), (0, 9),
        (1, 2), (1, 5), (1, 7),
        (2, 3), (2, 6), (2, 8),
        (3, 4), (3, 7), (3, 9),
        (4, 5), (4, 8),
        (5, 10), (5, 11),
        (6, 10), (6, 11),
        (7, 8), (7, 11),
        (8, 10),
        (9, 10), (9, 11),
    ]
    return Graph.from_edges(12, edges)


def gnp(n: int, p: float, seed: int | None = 0) -> Graph:
    """Erdős–Rényi G(n, p).

    Uses numpy's PCG64 generator: one uniform draw per vertex pair, pairs taken
    in ``(0,1), (0,2), ..., (1,2), ...`` order, so a seed fixes the graph on every
    platform.
    """
    if n < 1:
        raise GraphError("gnp needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"p={p} outside [0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    draws = rng.random(len(pairs))
    return Graph.from_edges(n, (e for e, x in zip(pairs, draws) if x < p))


GENERATORS = {
    "cycle": cycle,
    "complete": complete,
    "path": path,
    "star": star,
    "empty": empty,
    "chvatal": chvatal,
    "petersen": petersen,
    "gnp": gnp,
}
