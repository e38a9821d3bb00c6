"""Reed-bound verdicts for single graphs and for streams of graph6 lines."""

from __future__ import annotations

import json
import signal
import threading
from dataclasses import asdict, dataclass, field
from itertools import combinations
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator

from .exact import chromatic_number, clique_number
from .formats import FormatError, emit_graph6, parse_graph6
from .graph import Graph, induced_subgraph, max_degree


def reed_bound(delta: int, omega: int) -> int:
    """ceil((delta + omega + 1) / 2), in integers."""
    if delta < 0 or omega < 0:
        raise ValueError("delta and omega must be non-negative")
    return (delta + omega + 2) // 2


@dataclass(frozen=True)
class ReedReport:
    graph6: str
    n: int
    delta: int
    omega: int
    chi: int | None  # None when undecided (time limit hit)
    bound: int
    holds: bool | None
    tight: bool | None

    @property
    def decided(self) -> bool:
        return self.chi is not None

    def to_record(self) -> str:
        return json.dumps(asdict(self))


def check_graph(g: Graph) -> ReedReport:
    delta = max_degree(g)
    omega, _ = clique_number(g)
    chi, _ = chromatic_number(g)
    bound = reed_bound(delta, omega)
    return ReedReport(emit_graph6(g), g.n, delta, omega, chi, bound, chi <= bound, chi == bound)


def _undecided(g: Graph) -> ReedReport:
    delta = max_degree(g)
    omega, _ = clique_number(g)
    return ReedReport(emit_graph6(g), g.n, delta, omega, None, reed_bound(delta, omega), None, None)


# ---------------------------------------------------------------------------
# streaming


class _Timeout(Exception):
    pass


def _alarm(signum, frame):  # pragma: no cover - only fires on slow graphs
    raise _Timeout


def _check_line(args: tuple[str, float | None]) -> ReedReport:
    line, limit = args
    g = parse_graph6(line)
    if not limit or threading.current_thread() is not threading.main_thread():
        return check_graph(g)
    old = signal.signal(signal.SIGALRM, _alarm)
    signal.setitimer(signal.ITIMER_REAL, limit)
    try:
        return check_graph(g)
    except _Timeout:
        return _undecided(g)
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


@dataclass
class StreamSummary:
    """Order-insensitive aggregate of stream results.

    ``holds_count + len(violations) + len(undecided) == graphs_seen``.
    """

    graphs_seen: int = 0
    holds_count: int = 0
    tight_count: int = 0
    violations: list[str] = field(default_factory=list)
    undecided: list[str] = field(default_factory=list)
    slack_histogram: dict[int, int] = field(default_factory=dict)  # bound - chi -> count
    parse_errors: list[int] = field(default_factory=list)  # skipped line numbers

    def add(self, rep: ReedReport) -> None:
        self.graphs_seen += 1
        if not rep.decided:
            self.undecided.append(rep.graph6)
            return
        if rep.holds:
            self.holds_count += 1
        else:
            self.violations.append(rep.graph6)
        if rep.tight:
            self.tight_count += 1
        slack = rep.bound - rep.chi  # type: ignore[operator]
        self.slack_histogram[slack] = self.slack_histogram.get(slack, 0) + 1

    def normalized(self) -> "StreamSummary":
        return StreamSummary(
            self.graphs_seen,
            self.holds_count,
            self.tight_count,
            sorted(self.violations),
            sorted(self.undecided),
            dict(sorted(self.slack_histogram.items())),
            sorted(self.parse_errors),
        )

    def to_record(self) -> str:
        d = asdict(self.normalized())
        d["slack_histogram"] = {str(k): v for k, v in d["slack_histogram"].items()}
        return json.dumps({"summary": d})


class StreamInputError(FormatError):
    pass


def _numbered(lines: Iterable[str], on_error: str, summary: StreamSummary) -> Iterator[tuple[str, int]]:
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            parse_graph6(line)
        except FormatError as e:
            if on_error == "skip":
                summary.parse_errors.append(lineno)
                continue
            raise StreamInputError(f"line {lineno}: {e}", line=lineno) from e
        yield line, lineno


def stream_check(
    lines: Iterable[str],
    workers: int = 1,
    fail_fast: bool = False,
    ordered: bool = False,
    time_limit: float | None = None,
    on_error: str = "abort",
    emit: Callable[[ReedReport], None] | None = None,
) -> StreamSummary:
    """Check every graph6 line; call ``emit`` once per report; return the summary.

    The summary does not depend on ``workers``. Reports reach ``emit`` in input
    order when ``workers == 1`` or ``ordered`` is set. ``on_error`` is ``"abort"``
    (raise :class:`StreamInputError`) or ``"skip"`` (record the line number).
    """
    if on_error not in ("abort", "skip"):
        raise ValueError(f"on_error must be 'abort' or 'skip', not {on_error!r}")
    summary = StreamSummary()
    # parse everything up front so an abort happens before any report is emitted
    tasks = [(line, time_limit) for line, _ in _numbered(lines, on_error, summary)]

    def consume(results: Iterable[ReedReport]) -> bool:
        for rep in results:
            summary.add(rep)
            if emit is not None:
                emit(rep)
            if fail_fast and rep.holds is False:
                return True
        return False

    if workers <= 1:
        consume(map(_check_line, tasks))
    else:
        with Pool(workers) as pool:
            mapper = pool.imap if ordered else pool.imap_unordered
            stopped = consume(mapper(_check_line, tasks, chunksize=16))
            if stopped:
                pool.terminate()
    return summary.normalized()


# ---------------------------------------------------------------------------
# minimality


@dataclass(frozen=True)
class ProbeResult:
    vertices: list[int]
    report: ReedReport


def _smallest_violating(
    g: Graph, violates: Callable[[Graph], ReedReport | None]
) -> ProbeResult | None:
    """Smallest proper induced subgraph for which ``violates`` returns a report;
    ties by lexicographic vertex set."""
    for size in range(1, g.n):
        for vs in combinations(range(g.n), size):
            sub, _ = induced_subgraph(g, vs)
            rep = violates(sub)
            if rep is not None:
                return ProbeResult(list(vs), rep)
    return None


def _violation(h: Graph) -> ReedReport | None:
    rep = check_graph(h)
    return rep if not rep.holds else None


def minimality_probe(g: Graph, report: ReedReport | None = None) -> ProbeResult | None:
    """For a bound-violating ``g``, its smallest violating proper induced subgraph.

    None means every proper induced subgraph obeys the bound, i.e. ``g`` is a
    minimal counterexample. A supplied ``report`` is recomputed and must match.
    Raises ValueError when ``g`` does not violate the bound.
    """
    actual = check_graph(g)
    if report is not None and report != actual:
        raise ValueError("report does not match the graph")
    if actual.holds:
        raise ValueError("graph obeys the bound; nothing to probe")
    return _smallest_violating(g, _violation)
