"""Exact clique number, k-colourability, chromatic number and colour-critical subgraphs.

These are the ground-truth oracles for the rest of the package. All searches are
exponential in the worst case; intended sizes are n <= ~30 for sparse graphs and
n <= ~16 for dense ones. There is no timeout machinery here: callers that need a
time limit impose one from outside (see ``verifier.stream_check``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError, induced_subgraph, min_degree, vertex_set


@dataclass(frozen=True)
class Coloring:
    """Per-vertex colours forming the dense palette ``0..num_colors-1``."""

    colors: tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out


def make_coloring(colors: Sequence[int]) -> Coloring:
    """Relabel arbitrary colour values to a dense palette, in order of first appearance."""
    relabel: dict[int, int] = {}
    return Coloring(tuple(relabel.setdefault(c, len(relabel)) for c in colors))


def coloring_problems(g: Graph, coloring: Coloring) -> list[str]:
    """Everything wrong with ``coloring`` as a proper dense colouring of ``g``."""
    out = []
    cs = coloring.colors
    if len(cs) != g.n:
        return [f"{len(cs)} colours for {g.n} vertices"]
    if any(c < 0 for c in cs):
        out.append("negative colour")
    if set(cs) != set(range(len(set(cs)))):
        out.append("palette is not 0..num_colors-1")
    for u, v in g.edges():
        if cs[u] == cs[v]:
            out.append(f"edge {u}-{v} monochromatic ({cs[u]})")
    return out


def is_proper(g: Graph, colors: Sequence[int]) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges())


# ---------------------------------------------------------------------------
# clique number


def _bitsets(g: Graph) -> list[int]:
    rows = []
    for nbrs in g.adj:
        b = 0
        for u in nbrs:
            b |= 1 << u
        rows.append(b)
    return rows


def _bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def clique_number(g: Graph) -> tuple[int, list[int]]:
    """Size of a largest clique and one witness (sorted).

    Branch and bound in Bron–Kerbosch order with a Tomita-style pivot; a branch is
    cut when the current clique plus all remaining candidates cannot beat the best.
    """
    if g.n == 0:
        return 0, []
    nb = _bitsets(g)
    best: list[int] = [0]  # any single vertex is a clique

    def expand(clique: list[int], cand: int) -> None:
        if not cand:
            if len(clique) > len(best):
                best[:] = clique
            return
        if len(clique) + cand.bit_count() <= len(best):
            return
        pivot = max(_bits(cand), key=lambda u: ((cand & nb[u]).bit_count(), -u))
        for v in list(_bits(cand & ~nb[pivot])):
            if len(clique) + cand.bit_count() <= len(best):
                return
            clique.append(v)
            expand(clique, cand & nb[v])
            clique.pop()
            cand &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    return len(best), sorted(best)


# ---------------------------------------------------------------------------
# colouring


def is_k_colorable(g: Graph, k: int) -> Coloring | None:
    """A proper colouring with at most ``k`` colours, or None if none exists.

    DSATUR-ordered backtracking. A maximum clique is precoloured ``0..w-1``
    (symmetry breaking), and a new colour is only ever opened as the next unused
    index, so each partition into colour classes is explored once.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    n = g.n
    if n == 0:
        return Coloring(())
    if k == 0:
        return None
    w, clique = clique_number(g)
    if w > k:
        return None

    nb = [sorted(r) for r in g.adj]
    color = [-1] * n
    # forbidden[v][c] counts coloured neighbours of v with colour c
    forbidden = [[0] * k for _ in range(n)]
    sat = [0] * n

    def assign(v: int, c: int) -> None:
        color[v] = c
        for u in nb[v]:
            if forbidden[u][c] == 0:
                sat[u] += 1
            forbidden[u][c] += 1

    def unassign(v: int) -> None:
        c = color[v]
        color[v] = -1
        for u in nb[v]:
            forbidden[u][c] -= 1
            if forbidden[u][c] == 0:
                sat[u] -= 1

    for c, v in enumerate(clique):
        assign(v, c)
    deg = [len(r) for r in nb]

    def search(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = -1
        key = None
        for u in range(n):
            if color[u] == -1:
                ku = (sat[u], deg[u], -u)
                if key is None or ku > key:
                    v, key = u, ku
        if sat[v] >= k:
            return False
        for c in range(min(used + 1, k)):
            if forbidden[v][c]:
                continue
            assign(v, c)
            if search(colored + 1, max(used, c + 1)):
                return True
            unassign(v)
        return False

    if not search(len(clique), len(clique)):
        return None
    return make_coloring(color)


def chromatic_number(g: Graph) -> tuple[int, Coloring]:
    """χ(g) and a colouring using exactly that many colours.

    Iterative deepening on k starting from the clique number.
    """
    if g.n == 0:
        return 0, Coloring(())
    k = max(1, clique_number(g)[0])
    while True:
        col = is_k_colorable(g, k)
        if col is not None:
            return col.num_colors, col
        k += 1


# ---------------------------------------------------------------------------
# colour-critical subgraphs


@dataclass(frozen=True)
class CriticalSubgraph:
    vertices: list[int]
    k: int


def _colorable_without(g: Graph, keep: Sequence[int], k: int) -> bool:
    sub, _ = induced_subgraph(g, keep)
    return is_k_colorable(sub, k) is not None


def extract_critical(g: Graph, k: int) -> CriticalSubgraph:
    """An induced k-colour-critical subgraph of ``g`` for ``1 <= k <= χ(g)``.

    Deletes the lowest-indexed vertex ``v`` with ``χ(H - v) >= k`` until no such
    vertex is left. A vertex that is not deletable stays non-deletable as the
    graph shrinks, so one ascending pass visits each vertex once.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if is_k_colorable(g, k - 1) is not None:
        raise ValueError(f"k={k} exceeds the chromatic number")
    current = list(range(g.n))
    for v in range(g.n):
        rest = [u for u in current if u != v]
        if not _colorable_without(g, rest, k - 1):
            current = rest
    return CriticalSubgraph(current, k)


def critical_problems(g: Graph, crit: CriticalSubgraph) -> list[str]:
    """Re-check every CriticalSubgraph invariant from scratch."""
    vs = vertex_set(g, crit.vertices)
    h, _ = induced_subgraph(g, vs)
    chi, _ = chromatic_number(h)
    out = []
    if chi != crit.k:
        out.append(f"chromatic number {chi} != k={crit.k}")
    for i in range(h.n):
        h_minus, _ = induced_subgraph(h, [u for u in range(h.n) if u != i])
        if chromatic_number(h_minus)[0] >= chi:
            out.append(f"vertex {vs[i]} is not colour-critical")
    if h.n and min_degree(h) < crit.k - 1:
        out.append(f"minimum degree {min_degree(h)} < k-1={crit.k - 1}")
    return out


def is_color_critical(g: Graph) -> bool:
    """True iff deleting any single vertex lowers the chromatic number."""
    chi, _ = chromatic_number(g)
    for v in range(g.n):
        if not _colorable_without(g, [u for u in range(g.n) if u != v], chi - 1):
            return False
    return True


def chromatic_number_of(g: Graph, vs: Iterable[int]) -> int:
    """χ of the subgraph induced by ``vs``."""
    sub, _ = induced_subgraph(g, vs)
    return chromatic_number(sub)[0]


__all__ = [
    "Coloring",
    "CriticalSubgraph",
    "GraphError",
    "chromatic_number",
    "chromatic_number_of",
    "clique_number",
    "coloring_problems",
    "critical_problems",
    "extract_critical",
    "is_color_critical",
    "is_k_colorable",
    "is_proper",
    "make_coloring",
]
