"""graph6, DIMACS ``.col`` and plain edge-list readers/writers."""

from __future__ import annotations

from .graph import Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"
_SHORT_MAX = 62
_MEDIUM_MAX = 258047
_LONG_MAX = 68719476735


class FormatError(ValueError):
    """Malformed input. ``offset`` is a 0-based byte offset (graph6) or a
    1-based line number (text formats)."""

    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        self.offset = offset
        self.line = line
        where = ""
        if offset is not None:
            where = f" at byte {offset}"
        elif line is not None:
            where = f" on line {line}"
        super().__init__(f"{message}{where}")


def _encode_n(n: int) -> str:
    if n <= _SHORT_MAX:
        return chr(n + 63)
    if n <= _MEDIUM_MAX:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= _LONG_MAX:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"n={n} exceeds graph6 capacity")


def emit_graph6(g: Graph) -> str:
    """Canonical (minimal-length, zero-padded) graph6 string, no header."""
    bits = [1 if i in g.adj[j] else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        body.append(chr(x + 63))
    return _encode_n(g.n) + "".join(body)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header, trailing newline ok)."""
    base = 0
    s = line.rstrip("\r\n")
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise FormatError("empty graph6 string", offset=base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"character {ch!r} outside graph6 range", offset=base + i)

    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise FormatError("truncated 36-bit vertex count", offset=base + len(vals))
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        if len(vals) < 4:
            raise FormatError("truncated 18-bit vertex count", offset=base + len(vals))
        n = 0
        for x in vals[1:4]:
            n = (n << 6) | x
        pos = 4

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < nchars:
        raise FormatError(
            f"truncated bit vector: need {nchars} chars, got {len(body)}",
            offset=base + len(s),
        )
    if len(body) > nchars:
        raise FormatError("trailing characters after bit vector", offset=base + pos + nchars)
    pad = nchars * 6 - nbits
    if pad and body and body[-1] & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits", offset=base + pos + nchars - 1)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_graph6_lines(text: str) -> list[Graph]:
    return [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]


def parse_dimacs(text: str) -> Graph:
    """DIMACS ``.col`` subset: ``c`` comments, one ``p edge n m`` line, ``e u v`` lines (1-based)."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise FormatError("duplicate problem line", line=lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise FormatError("expected 'p edge <n> <m>'", line=lineno)
            n = _int(parts[2], lineno)
            _int(parts[3], lineno)
        elif tag == "e":
            if n is None:
                raise FormatError("edge before problem line", line=lineno)
            if len(parts) != 3:
                raise FormatError("expected 'e <u> <v>'", line=lineno)
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"vertex id out of range 1..{n}", line=lineno)
            if u == v:
                raise FormatError(f"loop at vertex {u}", line=lineno)
            edges.append((u - 1, v - 1))
        else:
            raise FormatError(f"unknown line type {tag!r}", line=lineno)
    if n is None:
        raise FormatError("missing problem line")
    return Graph.from_edges(n, edges)


def emit_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """First non-blank line holds ``n``; each later line holds a 0-based pair ``u v``.
    Lines starting with ``#`` are ignored."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0].startswith("#"):
            continue
        if n is None:
            if len(parts) != 1:
                raise FormatError("first line must hold the vertex count", line=lineno)
            n = _int(parts[0], lineno)
            continue
        if len(parts) != 2:
            raise FormatError("expected '<u> <v>'", line=lineno)
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex id out of range 0..{n - 1}", line=lineno)
        if u == v:
            raise FormatError(f"loop at vertex {u}", line=lineno)
        edges.append((u, v))
    if n is None:
        raise FormatError("missing vertex count")
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def _int(tok: str, lineno: int) -> int:
    try:
        x = int(tok)
    except ValueError:
        raise FormatError(f"not an integer: {tok!r}", line=lineno) from None
    if x < 0:
        raise FormatError(f"negative value {x}", line=lineno)
    return x
