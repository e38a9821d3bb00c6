"""Brute-force reference implementations used only by the tests.

Everything here works from raw adjacency bitmasks and shares no code with the
package beyond the Graph container.
"""

from __future__ import annotations

from itertools import combinations

from reedlab.graph import Graph


def masks(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        m = 0
        for u in g.adj[v]:
            m |= 1 << u
        out.append(m)
    return out


def brute_clique_number(g: Graph) -> int:
    nb = masks(g)
    best = 0
    for s in range(1 << g.n):
        k = bin(s).count("1")
        if k <= best:
            continue
        if all((nb[v] | (1 << v)) & s == s for v in range(g.n) if s >> v & 1):
            best = k
    return best


def brute_chromatic_number(g: Graph) -> int:
    """Subset DP: chi(S) = 1 + min chi(S - I) over stable I containing min(S)."""
    n = g.n
    nb = masks(g)
    full = (1 << n) - 1
    stable = [True] * (1 << n)
    for s in range(1, 1 << n):
        low = (s & -s).bit_length() - 1
        rest = s & ~(1 << low)
        stable[s] = stable[rest] and not (nb[low] & rest)
    chi = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        best = n + 1
        sub = rest
        while True:
            i = sub | low
            if stable[i]:
                c = chi[s ^ i] + 1
                if c < best:
                    best = c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[s] = best
    return chi[full]


def brute_k_colorable(g: Graph, k: int) -> bool:
    return brute_chromatic_number(g) <= k


def induced_odd_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All vertex sets inducing an odd cycle (connected, 2-regular, odd size >= 3)."""
    nb = masks(g)
    out = []
    for s in range(1 << g.n):
        k = bin(s).count("1")
        if k < 3 or k % 2 == 0:
            continue
        vs = [v for v in range(g.n) if s >> v & 1]
        if any(bin(nb[v] & s).count("1") != 2 for v in vs):
            continue
        # connected?
        seen = 1 << vs[0]
        frontier = seen
        while frontier:
            nxt = 0
            for v in range(g.n):
                if frontier >> v & 1:
                    nxt |= nb[v] & s
            frontier = nxt & ~seen
            seen |= nxt
        if seen == s:
            out.append(tuple(vs))
    return out


def has_odd_cycle_through(g: Graph, allowed: set[int]) -> bool:
    """Is there any (not necessarily induced) odd cycle using only ``allowed``?
    Depth-first enumeration of simple paths, anchored at each cycle's smallest vertex."""
    for start in sorted(allowed):
        stack = [(start, [start])]
        while stack:
            v, path = stack.pop()
            for u in g.adj[v]:
                if u not in allowed or u < start:
                    continue
                if u == start and len(path) >= 3 and len(path) % 2 == 1:
                    return True
                if u not in path:
                    stack.append((u, path + [u]))
    return False


def is_proper_coloring(g: Graph, colors) -> bool:
    return all(colors[u] != colors[v] for u in range(g.n) for v in g.adj[u])


def all_labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if bits >> i & 1])
