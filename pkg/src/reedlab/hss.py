"""HEAVY STABLE SETS: peel off stable sets of locally maximum-degree vertices.

Round ``r`` repeatedly picks a vertex whose degree in the current graph
``G_r - S_r`` equals ``Δ(G) - r``, preferring higher degree in ``G`` and then the
lower id. When no such vertex is left the round closes and ``G_{r+1} = G_r - S_r``.
Rounds run ``r = 0 .. 2k-1``.

Remainders are stored as vertex subsets of the input graph, never re-indexed.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

from .graph import Graph, is_stable, max_degree


@dataclass(frozen=True)
class Pick:
    round: int
    vertex: int
    degree: int  # degree in G_r - S_r just before the pick
    g_degree: int


@dataclass
class HssTrace:
    k: int
    stable_sets: list[list[int]]  # S_0 .. S_{2k-1}
    remainders: list[list[int]]  # V(G_0) .. V(G_{2k})
    pick_log: list[Pick] = field(default_factory=list)

    def to_records(self) -> list[str]:
        """One JSON line per pick, then one line per round summary."""
        out = [json.dumps({"pick": asdict(p)}) for p in self.pick_log]
        for r, s in enumerate(self.stable_sets):
            out.append(json.dumps({"round": r, "stable_set": s, "remainder": self.remainders[r + 1]}))
        return out


def _current_max(g: Graph, alive: set[int]) -> tuple[int, dict[int, int]]:
    """Degrees inside ``alive`` and their maximum (-inf for an empty vertex set)."""
    deg = {v: sum(1 for u in g.adj[v] if u in alive) for v in alive}
    return max(deg.values(), default=-math.inf), deg


def run_hss(g: Graph, k: int) -> HssTrace:
    """Run HEAVY STABLE SETS with parameter ``k >= 1`` and record every step.

    The empty graph is treated as having no vertex of any degree, so a round
    whose graph has run out of vertices ends immediately.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    delta = max_degree(g)
    g_deg = g.degrees()
    last = 2 * k - 1
    stable_sets: list[list[int]] = [[] for _ in range(2 * k)]
    remainders: list[list[int]] = [list(range(g.n))]
    picks: list[Pick] = []

    alive = set(range(g.n))  # V(G_r - S_r)
    r = 0
    cur_max, deg = _current_max(g, alive)
    while True:
        # inner loop of the procedure: close rounds whose target degree is gone
        while cur_max < delta - r:
            remainders.append(sorted(alive))  # G_{r+1} = G_r - S_r
            if r == last:
                return HssTrace(k, [sorted(s) for s in stable_sets], remainders, picks)
            r += 1
        target = delta - r
        v = min((u for u in alive if deg[u] == target), key=lambda u: (-g_deg[u], u))
        picks.append(Pick(r, v, target, g_deg[v]))
        stable_sets[r].append(v)
        alive.discard(v)
        for u in g.adj[v]:
            if u in alive:
                deg[u] -= 1
        del deg[v]
        cur_max = max(deg.values(), default=-math.inf)


def union_s(trace: HssTrace) -> list[int]:
    return sorted(v for s in trace.stable_sets for v in s)


# ---------------------------------------------------------------------------
# verification


class MalformedTrace(ValueError):
    pass


def _max_deg_within(g: Graph, vs: set[int]) -> int:
    return max((sum(1 for u in g.adj[v] if u in vs) for v in vs), default=-1)


def verify_trace(g: Graph, trace: HssTrace) -> list[str]:
    """List every violated property of ``trace`` (empty list = valid).

    Checked from the graph alone, without calling :func:`run_hss`:

    * ``delta``: ``Δ(G_{r+1}) <= Δ(G) - (r+1)`` whenever ``G_{r+1}`` has vertices,
      and ``S_r`` is non-empty exactly when ``G_r`` has vertices and
      ``Δ(G_r) = Δ(G) - r``;
    * ``remainder``: ``V(G_{r+1}) = V(G) minus S_0..S_r``;
    * ``stable``: every ``S_r`` is stable in ``G``;
    * ``neighbors``: every ``v`` in ``S_r`` has exactly ``Δ(G) - r`` neighbours in ``G_{r+1}``;
    * ``tie-break``: replaying ``pick_log`` shows each pick had the target degree and
      no rival with higher ``G``-degree (or equal ``G``-degree and lower id).
    """
    k = trace.k
    if k < 1 or len(trace.stable_sets) != 2 * k or len(trace.remainders) != 2 * k + 1:
        raise MalformedTrace(
            f"expected {2 * k} stable sets and {2 * k + 1} remainders, got "
            f"{len(trace.stable_sets)} and {len(trace.remainders)}"
        )
    rem = [set(x) for x in trace.remainders]
    for r in range(2 * k):
        if not rem[r + 1] <= rem[r]:
            raise MalformedTrace(f"remainder {r + 1} is not contained in remainder {r}")
    for vs in list(rem) + [set(s) for s in trace.stable_sets]:
        if any(not 0 <= v < g.n for v in vs):
            raise MalformedTrace("vertex id out of range")

    delta = max_degree(g)
    problems: list[str] = []
    if rem[0] != set(range(g.n)):
        problems.append("remainder: G_0 is not G")

    removed: set[int] = set()
    for r, s_list in enumerate(trace.stable_sets):
        s = set(s_list)
        removed |= s
        expected = set(range(g.n)) - removed
        if rem[r + 1] != expected:
            problems.append(f"remainder: V(G_{r + 1}) != V(G) minus S_0..S_{r}")

        ok, edge = is_stable(g, s)
        if not ok:
            problems.append(f"stable: S_{r} contains edge {edge}")

        nxt = _max_deg_within(g, rem[r + 1])
        if rem[r + 1] and nxt > delta - (r + 1):
            problems.append(f"delta: Δ(G_{r + 1})={nxt} > Δ(G)-{r + 1}")
        full = bool(rem[r]) and _max_deg_within(g, rem[r]) == delta - r
        if bool(s) != full:
            problems.append(f"delta: S_{r} non-empty={bool(s)} but Δ(G_{r})=Δ(G)-{r} is {full}")

        for v in sorted(s):
            got = sum(1 for u in g.adj[v] if u in rem[r + 1])
            if got != delta - r:
                problems.append(f"neighbors: vertex {v} in S_{r} has {got} neighbours in G_{r + 1}, not {delta - r}")

    problems += _check_picks(g, trace, delta)
    return problems


def _check_picks(g: Graph, trace: HssTrace, delta: int) -> list[str]:
    problems = []
    per_round: dict[int, list[Pick]] = {}
    for p in trace.pick_log:
        per_round.setdefault(p.round, []).append(p)
    for r, s in enumerate(trace.stable_sets):
        logged = [p.vertex for p in per_round.get(r, [])]
        if sorted(logged) != sorted(s):
            problems.append(f"tie-break: pick log of round {r} does not match S_{r}")
    rounds = [p.round for p in trace.pick_log]
    if rounds != sorted(rounds):
        problems.append("tie-break: pick log rounds out of order")
        return problems

    g_deg = g.degrees()
    for r, picks in sorted(per_round.items()):
        if not 0 <= r < len(trace.remainders) - 1:
            problems.append(f"tie-break: pick in unknown round {r}")
            continue
        alive = set(trace.remainders[r])
        for p in picks:
            if p.vertex not in alive:
                problems.append(f"tie-break: vertex {p.vertex} picked twice or outside G_{r}")
                continue
            deg = {v: sum(1 for u in g.adj[v] if u in alive) for v in alive}
            if deg[p.vertex] != delta - r or p.degree != deg[p.vertex] or p.g_degree != g_deg[p.vertex]:
                problems.append(f"tie-break: round {r} pick {p.vertex} has wrong recorded degrees")
            rivals = [v for v in alive if deg[v] == delta - r]
            best = min(rivals, key=lambda v: (-g_deg[v], v)) if rivals else None
            if best != p.vertex:
                problems.append(f"tie-break: round {r} picked {p.vertex} instead of {best}")
            alive.discard(p.vertex)
    return problems
