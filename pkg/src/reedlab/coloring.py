"""Polynomial-time colourings: a constructive Brooks colourer and the colourings
of the two high-degree graph classes (threshold fixed at 4).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .exact import Coloring, clique_number, coloring_problems, is_k_colorable
from .graph import (
    Bipartition,
    Graph,
    bipartition_or_odd_cycle,
    connected_components,
    induced_subgraph,
    is_connected,
    max_degree,
)
from .structure import (
    ClassMembership,
    recognize_odd_cycle_low_degree,
    recognize_stable_high_degree,
)
from .verifier import reed_bound

CLASS_DELTA0 = 4


class PreconditionError(ValueError):
    """Input graph is outside the colourer's class; carries the recognizer's verdict."""

    def __init__(self, membership: ClassMembership):
        self.membership = membership
        super().__init__(f"graph is not in class {membership.class_id.value}: {membership.to_record()}")


class StructureAssertionError(AssertionError):
    """A structural claim that the colouring construction relies on failed."""


# ---------------------------------------------------------------------------
# Brooks


def _greedy_towards_root(h: Graph, root: int, colors: list[int], palette: int) -> None:
    """Colour the uncoloured vertices reachable from ``root`` greedily, farthest
    from ``root`` first and ``root`` last, within ``palette`` colours.

    Each non-root vertex still has its BFS parent uncoloured when its turn
    comes, so it sees at most deg - 1 coloured neighbours.
    """
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in sorted(h.adj[v]):
            if u not in seen and colors[u] == -1:
                seen.add(u)
                order.append(u)
                queue.append(u)
    for v in reversed(order):
        taken = {colors[u] for u in h.adj[v]}
        c = next(c for c in range(palette + 1) if c not in taken)
        if c >= palette:
            raise StructureAssertionError(f"vertex {v} needs colour {c} >= {palette}")
        colors[v] = c


def _cut_vertex(h: Graph) -> int | None:
    for x in range(h.n):
        rest, _ = induced_subgraph(h, [v for v in range(h.n) if v != x])
        if not is_connected(rest):
            return x
    return None


def _brooks_triple(h: Graph) -> tuple[int, int, int]:
    """``(x, u, w)`` with u, w non-adjacent neighbours of x and h - {u, w} connected.
    Exists in every 2-connected regular non-complete graph of degree >= 3."""
    for x in range(h.n):
        nbrs = sorted(h.adj[x])
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1:]:
                if h.has_edge(u, w):
                    continue
                rest, _ = induced_subgraph(h, [v for v in range(h.n) if v not in (u, w)])
                if is_connected(rest):
                    return x, u, w
    raise StructureAssertionError("no Brooks triple in a 2-connected regular graph")


def _brooks_connected(h: Graph) -> list[int]:
    n = h.n
    delta = max_degree(h)
    if h.m == n * (n - 1) // 2:
        return list(range(n))
    if delta <= 2:
        split = bipartition_or_odd_cycle(h)
        if isinstance(split, Bipartition):
            return [0 if v in set(split.left) else 1 for v in range(n)]
        # connected with max degree 2 and an odd cycle: h is that cycle
        colors = [-1] * n
        for i, v in enumerate(split.vertices):
            colors[v] = i % 2
        colors[split.vertices[-1]] = 2
        return colors

    colors = [-1] * n
    deg = h.degrees()
    low = [v for v in range(n) if deg[v] < delta]
    if low:
        _greedy_towards_root(h, low[0], colors, delta)
        return colors

    x = _cut_vertex(h)
    if x is not None:
        rest = [v for v in range(n) if v != x]
        for comp in connected_components(h, rest):
            piece, index = induced_subgraph(h, comp + [x])
            pc = [-1] * piece.n
            px = index.index(x)
            # x has neighbours outside this piece, so its degree here is below delta
            _greedy_towards_root(piece, px, pc, delta)
            swap = {pc[px]: 0, 0: pc[px]}
            for i, v in enumerate(index):
                if v != x:
                    colors[v] = swap.get(pc[i], pc[i])
        colors[x] = 0
        return colors

    x, u, w = _brooks_triple(h)
    colors[u] = colors[w] = 0
    _greedy_towards_root(h, x, colors, delta)
    return colors


def brooks_color(g: Graph) -> Coloring:
    """Proper colouring with at most Δ colours on every component that is neither
    complete nor an odd cycle (those get Δ + 1)."""
    colors = [-1] * g.n
    for comp in connected_components(g):
        h, index = induced_subgraph(g, comp)
        for v, c in zip(index, _brooks_connected(h)):
            colors[v] = c
    return Coloring(tuple(colors))


# ---------------------------------------------------------------------------
# class colourings


@dataclass(frozen=True)
class Phase:
    name: str
    vertices: list[int]
    palette: list[int]  # phase colours before compaction


@dataclass
class ColoringResult:
    coloring: Coloring
    method_log: list[Phase]  # phases partition V(G)
    core: list[int]  # B' (class B) or the degree >= 5 vertices (class A)
    notes: list[str] = field(default_factory=list)

    def to_records(self) -> list[str]:
        head = {
            "n": len(self.coloring.colors),
            "colors_used": self.coloring.num_colors,
            "core": self.core,
            "phases": [asdict(p) for p in self.method_log],
            "notes": self.notes,
        }
        return [json.dumps(head)] + [f"{v} {c}" for v, c in enumerate(self.coloring.colors)]


def _compact(colors: Sequence[int]) -> Coloring:
    rank = {c: i for i, c in enumerate(sorted(set(colors)))}
    return Coloring(tuple(rank[c] for c in colors))


def _max_degree_within(g: Graph, vs: set[int]) -> int:
    return max((sum(1 for u in g.adj[v] if u in vs) for v in vs), default=0)


def _bipartite(g: Graph, vs: set[int]) -> bool:
    return isinstance(bipartition_or_odd_cycle(g, vs), Bipartition)


def color_class_b(g: Graph) -> ColoringResult:
    """4-colour a graph whose degree >= 4 vertices induce a bipartite graph.

    B' = vertices of degree >= 4; B = inclusionwise-maximal bipartite vertex set
    containing B' (greedy, id order, repeated until a pass adds nothing); B gets
    colours 1, 2 by BFS. The rest, R, has maximum degree <= 1 and gets 3, 4.
    """
    m = recognize_odd_cycle_low_degree(g, CLASS_DELTA0)
    if not m.verdict:
        raise PreconditionError(m)
    deg = g.degrees()
    core = [v for v in range(g.n) if deg[v] >= CLASS_DELTA0]
    b = set(core)
    grew = True
    while grew:
        grew = False
        for v in range(g.n):
            if v not in b and _bipartite(g, b | {v}):
                b.add(v)
                grew = True

    colors = [-1] * g.n
    split = bipartition_or_odd_cycle(g, b)
    assert isinstance(split, Bipartition)
    for v in split.left:
        colors[v] = 1
    for v in split.right:
        colors[v] = 2

    r = set(range(g.n)) - b
    if _max_degree_within(g, r) > 1:
        raise StructureAssertionError(f"remainder has maximum degree {_max_degree_within(g, r)} > 1")
    rsplit = bipartition_or_odd_cycle(g, r)
    assert isinstance(rsplit, Bipartition)
    for v in rsplit.left:
        colors[v] = 3
    for v in rsplit.right:
        colors[v] = 4

    log = [Phase("B", sorted(b), [1, 2]), Phase("R", sorted(r), [3, 4])]
    return ColoringResult(_compact(colors), log, core)


def color_class_a(g: Graph) -> ColoringResult:
    """Colour a graph whose degree >= 5 vertices form a stable set.

    S = maximal stable set containing the degree >= 5 vertices (greedy, id
    order) gets colour 0; R = G - S has maximum degree <= 3 and is coloured by
    :func:`brooks_color` shifted to 1, 2, 3 (4 for any K_4 component of R).
    """
    m = recognize_stable_high_degree(g, CLASS_DELTA0)
    if not m.verdict:
        raise PreconditionError(m)
    deg = g.degrees()
    core = [v for v in range(g.n) if deg[v] >= CLASS_DELTA0 + 1]
    s = set(core)
    for v in range(g.n):
        if v not in s and not (g.adj[v] & s):
            s.add(v)

    rest = [v for v in range(g.n) if v not in s]
    if _max_degree_within(g, set(rest)) > 3:
        raise StructureAssertionError(f"remainder has maximum degree {_max_degree_within(g, set(rest))} > 3")
    colors = [0 if v in s else -1 for v in range(g.n)]
    h, index = induced_subgraph(g, rest)
    for v, c in zip(index, brooks_color(h).colors):
        colors[v] = c + 1

    notes = []
    for comp in connected_components(h):
        if len(comp) == 4 and all(len(h.adj[v]) == 3 for v in comp):
            notes.append(f"K4 component {[index[v] for v in comp]} in R needs a fourth colour")
    log = [Phase("S", sorted(s), [0]), Phase("R", rest, [1, 2, 3, 4])]
    return ColoringResult(_compact(colors), log, core, notes)


# ---------------------------------------------------------------------------
# compliance


@dataclass(frozen=True)
class ComplianceReport:
    num_colors: int
    delta: int
    omega: int
    bound: int
    compliant: bool
    tight: bool
    recolor_attempted: bool = False
    recolored: Coloring | None = None

    def to_record(self) -> str:
        d = asdict(self)
        d["recolored"] = list(self.recolored.colors) if self.recolored else None
        return json.dumps(d)


def certify_reed_compliance(g: Graph, coloring: Coloring) -> ComplianceReport:
    """Compare a colouring's size to ceil((Δ + ω + 1) / 2); when it exceeds the
    bound, try an exact recolouring within the bound."""
    problems = coloring_problems(g, coloring)
    if problems:
        raise ValueError(f"improper colouring: {problems[0]}")
    delta = max_degree(g)
    omega, _ = clique_number(g)
    bound = reed_bound(delta, omega)
    k = coloring.num_colors
    if k <= bound:
        return ComplianceReport(k, delta, omega, bound, True, k == bound)
    return ComplianceReport(k, delta, omega, bound, False, False, True, is_k_colorable(g, bound))
