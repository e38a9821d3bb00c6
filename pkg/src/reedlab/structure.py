"""Heavy edges, heavy odd cycles, the two high-degree graph classes, and
certificates that a graph cannot be a minimal counterexample to the Reed bound.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Union

from .graph import (
    Bipartition,
    Graph,
    OddCycle,
    bipartition_or_odd_cycle,
    check_odd_cycle,
    is_stable,
    max_degree,
    shortest_odd_cycle,
)

# a counterexample to the bound must have maximum degree at least this
MIN_COUNTEREXAMPLE_DELTA = 5


def find_heavy_edges(g: Graph) -> list[tuple[int, int]]:
    """Edges whose endpoints both have degree Δ(G)."""
    delta = max_degree(g)
    deg = g.degrees()
    return [(u, v) for u, v in g.edges() if deg[u] == delta and deg[v] == delta]


def heavy_vertices(g: Graph) -> list[int]:
    delta = max_degree(g)
    return [v for v, d in enumerate(g.degrees()) if d >= delta - 1]


def find_heavy_odd_cycle(g: Graph) -> OddCycle | None:
    """A chordless odd cycle all of whose vertices have degree >= Δ(G) - 1.

    Every heavy cycle lives in the subgraph induced by the heavy vertices, and a
    shortest odd cycle there is chordless, so searching that subgraph suffices.
    """
    return shortest_odd_cycle(g, heavy_vertices(g))


# ---------------------------------------------------------------------------
# graph classes


class GraphClass(str, Enum):
    STABLE_HIGH_DEGREE = "stable-high-degree"
    ODD_CYCLE_LOW_VERTEX = "odd-cycle-low-vertex"


@dataclass(frozen=True)
class ClassMembership:
    class_id: GraphClass
    delta0: int
    verdict: bool
    # positive: the stable high-degree set, or the bipartition of the high-degree subgraph
    # negative: a violating edge, or an induced odd cycle of high-degree vertices
    witness: Union[list[int], Bipartition, tuple[int, int], OddCycle]

    def to_record(self) -> str:
        w = self.witness
        if isinstance(w, Bipartition):
            wd: object = {"bipartition": [w.left, w.right]}
        elif isinstance(w, OddCycle):
            wd = {"odd_cycle": w.vertices}
        elif isinstance(w, tuple):
            wd = {"edge": list(w)}
        else:
            wd = {"stable_set": w}
        return json.dumps(
            {"class": self.class_id.value, "delta0": self.delta0, "verdict": self.verdict, "witness": wd}
        )


def recognize_stable_high_degree(g: Graph, delta0: int) -> ClassMembership:
    """Do the vertices of degree >= delta0 + 1 form a stable set?"""
    if delta0 < 1:
        raise ValueError("delta0 must be >= 1")
    high = [v for v, d in enumerate(g.degrees()) if d >= delta0 + 1]
    ok, edge = is_stable(g, high)
    cls = GraphClass.STABLE_HIGH_DEGREE
    return ClassMembership(cls, delta0, True, high) if ok else ClassMembership(cls, delta0, False, edge)


def recognize_odd_cycle_low_degree(g: Graph, delta0: int) -> ClassMembership:
    """Does every induced odd cycle contain a vertex of degree <= delta0 - 1?

    Equivalent to the subgraph induced by the vertices of degree >= delta0 being
    bipartite. Degrees are taken in ``g``.
    """
    if delta0 < 1:
        raise ValueError("delta0 must be >= 1")
    high = [v for v, d in enumerate(g.degrees()) if d >= delta0]
    res = bipartition_or_odd_cycle(g, high)
    return ClassMembership(GraphClass.ODD_CYCLE_LOW_VERTEX, delta0, isinstance(res, Bipartition), res)


def membership_problems(g: Graph, m: ClassMembership) -> list[str]:
    """Re-check a membership witness against the graph."""
    deg = g.degrees()
    w = m.witness
    if m.class_id is GraphClass.STABLE_HIGH_DEGREE:
        high = sorted(v for v in range(g.n) if deg[v] >= m.delta0 + 1)
        if m.verdict:
            if w != high:
                return ["witness is not the high-degree vertex set"]
            return [] if is_stable(g, high)[0] else ["high-degree set is not stable"]
        if not (isinstance(w, tuple) and g.has_edge(*w) and min(deg[w[0]], deg[w[1]]) >= m.delta0 + 1):
            return ["witness is not an edge between high-degree vertices"]
        return []
    high = {v for v in range(g.n) if deg[v] >= m.delta0}
    if m.verdict:
        if not isinstance(w, Bipartition) or set(w.left) | set(w.right) != high or set(w.left) & set(w.right):
            return ["witness does not partition the high-degree vertices"]
        bad = [(u, v) for part in (w.left, w.right) for i, u in enumerate(part) for v in part[i + 1:] if g.has_edge(u, v)]
        return [f"edge {e} inside a part" for e in bad]
    if not isinstance(w, OddCycle):
        return ["negative witness is not an odd cycle"]
    why = check_odd_cycle(g, w.vertices)
    if why:
        return [why]
    if any(deg[v] < m.delta0 for v in w.vertices):
        return ["odd cycle has a low-degree vertex"]
    return []


# ---------------------------------------------------------------------------
# refutation certificates


class CertificateKind(str, Enum):
    BOUND_HOLDS = "BoundHolds"
    DELTA_AT_MOST_4 = "DeltaAtMost4"
    NO_HEAVY_EDGE = "NoHeavyEdge"
    NO_HEAVY_ODD_CYCLE = "NoHeavyOddCycle"
    NOT_REFUTED = "NotRefuted"


@dataclass(frozen=True)
class RefutationCertificate:
    kind: CertificateKind
    report: object | None = None  # ReedReport for BOUND_HOLDS
    delta: int | None = None

    def to_record(self) -> str:
        d: dict[str, object] = {"certificate": self.kind.value, "delta": self.delta}
        if self.report is not None:
            d["report"] = asdict(self.report)  # type: ignore[call-overload]
        return json.dumps(d)


def refute_minimal_counterexample(g: Graph, exact_limit: int = 16) -> RefutationCertificate:
    """First applicable reason ``g`` is not a minimal counterexample.

    Order: the bound holds (exact χ and ω, only tried when ``g.n <= exact_limit``),
    Δ <= 4, no heavy edge, no heavy odd cycle. ``NotRefuted`` if none applies.
    """
    from .verifier import check_graph

    delta = max_degree(g)
    if g.n <= exact_limit:
        report = check_graph(g)
        if report.holds:
            return RefutationCertificate(CertificateKind.BOUND_HOLDS, report, delta)
    if delta < MIN_COUNTEREXAMPLE_DELTA:
        return RefutationCertificate(CertificateKind.DELTA_AT_MOST_4, delta=delta)
    if not find_heavy_edges(g):
        return RefutationCertificate(CertificateKind.NO_HEAVY_EDGE, delta=delta)
    if find_heavy_odd_cycle(g) is None:
        return RefutationCertificate(CertificateKind.NO_HEAVY_ODD_CYCLE, delta=delta)
    return RefutationCertificate(CertificateKind.NOT_REFUTED, delta=delta)


def certificate_problems(g: Graph, cert: RefutationCertificate) -> list[str]:
    """Re-check a certificate from scratch."""
    from .verifier import check_graph

    kind = cert.kind
    if kind is CertificateKind.BOUND_HOLDS:
        rep = check_graph(g)
        return [] if rep.holds and rep == cert.report else ["bound does not hold or report differs"]
    if kind is CertificateKind.DELTA_AT_MOST_4:
        return [] if max_degree(g) < MIN_COUNTEREXAMPLE_DELTA else ["maximum degree exceeds 4"]
    if kind is CertificateKind.NO_HEAVY_EDGE:
        return [] if not find_heavy_edges(g) else ["graph has a heavy edge"]
    if kind is CertificateKind.NO_HEAVY_ODD_CYCLE:
        return [] if find_heavy_odd_cycle(g) is None else ["graph has a heavy odd cycle"]
    return []
