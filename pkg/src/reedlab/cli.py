"""``reedlab`` command line.

Machine-readable records (JSON lines, or ``vertex colour`` pairs for ``color``)
go to stdout; human-readable messages go to stderr.
Exit codes: 0 success / bound holds / positive verdict, 1 violation or negative
verdict, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, TextIO

import numpy as np

from . import graph as gmod
from .coloring import (
    PreconditionError,
    brooks_color,
    certify_reed_compliance,
    color_class_a,
    color_class_b,
)
from .enumerate import graphs_on
from .exact import chromatic_number, extract_critical, is_k_colorable
from .formats import (
    FormatError,
    emit_dimacs,
    emit_edge_list,
    emit_graph6,
    parse_dimacs,
    parse_edge_list,
    read_graph6_lines,
)
from .graph import Graph, GraphError
from .hss import run_hss, union_s, verify_trace
from .structure import (
    GraphClass,
    recognize_odd_cycle_low_degree,
    recognize_stable_high_degree,
    refute_minimal_counterexample,
)
from .verifier import StreamInputError, check_graph, stream_check

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    source: str  # "gen", "file" or "stdin"
    gen_spec: str | None = None
    input_path: Path | None = None
    fmt: str = "graph6"
    output: Path | None = None
    seed: int = 0
    flags: dict = field(default_factory=dict)
    rng: np.random.Generator = field(init=False, repr=False)

    def __post_init__(self) -> None:
        # every random choice the CLI makes is drawn from this one generator
        self.rng = np.random.Generator(np.random.PCG64(self.seed))


def generate(spec: str, rng: np.random.Generator) -> Graph:
    """Build a graph from ``name[:param[:param]]``, e.g. ``cycle:7`` or ``gnp:10:0.5``."""
    name, *params = spec.split(":")
    if name not in gmod.GENERATORS:
        raise UsageError(f"unknown generator {name!r}; choose from {', '.join(sorted(gmod.GENERATORS))}")
    try:
        if name == "gnp":
            if len(params) != 2:
                raise UsageError("gnp needs gnp:<n>:<p>")
            return gmod.gnp(int(params[0]), float(params[1]), seed=int(rng.integers(2**63)))
        return gmod.GENERATORS[name](*(int(p) for p in params))
    except (TypeError, ValueError) as e:
        raise UsageError(f"bad generator spec {spec!r}: {e}") from None


def _read_graphs(cfg: CliConfig, stdin: TextIO) -> list[Graph]:
    if cfg.source == "gen":
        assert cfg.gen_spec is not None
        return [generate(cfg.gen_spec, cfg.rng)]
    text = cfg.input_path.read_text() if cfg.source == "file" else stdin.read()  # type: ignore[union-attr]
    if cfg.fmt == "graph6":
        return read_graph6_lines(text)
    if cfg.fmt == "dimacs":
        return [parse_dimacs(text)]
    return [parse_edge_list(text)]


def _emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "dimacs":
        return emit_dimacs(g).rstrip("\n")
    if fmt == "edgelist":
        return emit_edge_list(g).rstrip("\n")
    return emit_graph6(g)


# ---------------------------------------------------------------------------
# subcommands; each returns an exit code


def cmd_gen(cfg: CliConfig, out: Callable[[str], None], stdin: TextIO) -> int:
    if cfg.flags.get("all") is not None:
        graphs = graphs_on(cfg.flags["all"])
    else:
        if cfg.gen_spec is None:
            raise UsageError("gen needs --gen SPEC or --all N")
        graphs = [generate(cfg.gen_spec, cfg.rng) for _ in range(cfg.flags.get("count") or 1)]
    for g in graphs:
        out(_emit_graph(g, cfg.fmt if cfg.flags.get("all") is None else "graph6"))
    return EXIT_OK


def cmd_check(cfg: CliConfig, out, stdin) -> int:
    code = EXIT_OK
    for g in _read_graphs(cfg, stdin):
        rep = check_graph(g)
        out(rep.to_record())
        if not rep.holds:
            code = EXIT_NEGATIVE
    return code


def cmd_stream(cfg: CliConfig, out, stdin) -> int:
    if cfg.source == "gen":
        lines = [emit_graph6(g) for g in _read_graphs(cfg, stdin)]
    elif cfg.source == "file":
        lines = cfg.input_path.read_text().splitlines()  # type: ignore[union-attr]
    else:
        lines = stdin.read().splitlines()
    summary = stream_check(
        lines,
        workers=cfg.flags.get("workers") or 1,
        fail_fast=bool(cfg.flags.get("fail_fast")),
        ordered=bool(cfg.flags.get("ordered")),
        time_limit=cfg.flags.get("time_limit"),
        on_error="skip" if cfg.flags.get("skip_errors") else "abort",
        emit=lambda rep: out(rep.to_record()),
    )
    out(summary.to_record())
    print(
        f"{summary.graphs_seen} graphs, {summary.holds_count} hold, "
        f"{len(summary.violations)} violations, {len(summary.undecided)} undecided",
        file=sys.stderr,
    )
    return EXIT_NEGATIVE if summary.violations else EXIT_OK


def cmd_hss(cfg: CliConfig, out, stdin) -> int:
    k = cfg.flags.get("k")
    if k is None or k < 1:
        raise UsageError("hss needs -k >= 1")
    code = EXIT_OK
    for g in _read_graphs(cfg, stdin):
        if cfg.flags.get("enforce_range"):
            if is_k_colorable(g, k) is not None:
                raise UsageError(f"k={k} is not below the chromatic number")
        trace = run_hss(g, k)
        for rec in trace.to_records():
            out(rec)
        problems = verify_trace(g, trace)
        out(json.dumps({"union": union_s(trace), "problems": problems}))
        if problems:
            code = EXIT_NEGATIVE
    return code


def cmd_recognize(cfg: CliConfig, out, stdin) -> int:
    cls = cfg.flags.get("cls")
    delta0 = cfg.flags.get("delta0")
    if cls is None or delta0 is None:
        raise UsageError("recognize needs --class and --delta0")
    fn = recognize_stable_high_degree if cls == GraphClass.STABLE_HIGH_DEGREE.value else recognize_odd_cycle_low_degree
    code = EXIT_OK
    for g in _read_graphs(cfg, stdin):
        m = fn(g, delta0)
        out(m.to_record())
        if not m.verdict:
            code = EXIT_NEGATIVE
    return code


def cmd_color(cfg: CliConfig, out, stdin) -> int:
    method = cfg.flags.get("method") or "brooks"
    code = EXIT_OK
    for g in _read_graphs(cfg, stdin):
        try:
            if method == "class-a":
                res = color_class_a(g)
                lines, coloring = res.to_records(), res.coloring
            elif method == "class-b":
                res = color_class_b(g)
                lines, coloring = res.to_records(), res.coloring
            else:
                coloring = brooks_color(g) if method == "brooks" else chromatic_number(g)[1]
                head = {"n": g.n, "colors_used": coloring.num_colors, "method": method}
                lines = [json.dumps(head)] + [f"{v} {c}" for v, c in enumerate(coloring.colors)]
        except PreconditionError as e:
            print(str(e), file=sys.stderr)
            out(e.membership.to_record())
            code = EXIT_NEGATIVE
            continue
        for ln in lines:
            out(ln)
        out(certify_reed_compliance(g, coloring).to_record())
    return code


def cmd_critical(cfg: CliConfig, out, stdin) -> int:
    for g in _read_graphs(cfg, stdin):
        k = cfg.flags.get("k")
        chi, _ = chromatic_number(g)
        if k is None:
            k = chi
        if not 1 <= k <= chi:
            raise UsageError(f"k={k} outside 1..{chi}")
        crit = extract_critical(g, k)
        out(json.dumps({"k": crit.k, "vertices": crit.vertices}))
    return EXIT_OK


def cmd_refute(cfg: CliConfig, out, stdin) -> int:
    code = EXIT_OK
    for g in _read_graphs(cfg, stdin):
        cert = refute_minimal_counterexample(g, exact_limit=cfg.flags.get("exact_limit", 16))
        out(cert.to_record())
        if cert.kind.value == "NotRefuted":
            code = EXIT_NEGATIVE
    return code


COMMANDS = {
    "gen": cmd_gen,
    "check": cmd_check,
    "stream": cmd_stream,
    "hss": cmd_hss,
    "recognize": cmd_recognize,
    "color": cmd_color,
    "critical": cmd_critical,
    "refute": cmd_refute,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--gen", metavar="SPEC", help="generator, e.g. cycle:7, gnp:10:0.5, chvatal")
    src.add_argument("--input", "-i", type=Path, metavar="FILE", help="read graphs from FILE (default stdin)")
    common.add_argument("--format", "-f", choices=["graph6", "dimacs", "edgelist"], default="graph6")
    common.add_argument("--output", "-o", type=Path, help="write records to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0)

    ap = argparse.ArgumentParser(prog="reedlab", description="Reed-bound graph colouring toolkit")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("gen", parents=[common], help="emit generated graphs")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--all", type=int, metavar="N", help="all graphs on N vertices up to isomorphism")

    sub.add_parser("check", parents=[common], help="Reed-bound report per graph")

    p = sub.add_parser("stream", parents=[common], help="check a stream of graph6 lines")
    p.add_argument("--workers", "-w", type=int, default=1)
    p.add_argument("--fail-fast", action="store_true")
    p.add_argument("--ordered", action="store_true")
    p.add_argument("--time-limit", type=float, metavar="SECONDS")
    p.add_argument("--skip-errors", action="store_true", help="skip unparsable lines instead of aborting")

    p = sub.add_parser("hss", parents=[common], help="run HEAVY STABLE SETS and print its trace")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--enforce-range", action="store_true", help="require k <= chromatic number - 1")

    p = sub.add_parser("recognize", parents=[common], help="test membership in a high-degree class")
    p.add_argument("--class", dest="cls", required=True, choices=[c.value for c in GraphClass])
    p.add_argument("--delta0", type=int, required=True)

    p = sub.add_parser("color", parents=[common], help="colour a graph")
    p.add_argument("--method", choices=["brooks", "class-a", "class-b", "exact"], default="brooks")

    p = sub.add_parser("critical", parents=[common], help="extract a k-colour-critical induced subgraph")
    p.add_argument("-k", type=int)

    p = sub.add_parser("refute", parents=[common], help="minimal-counterexample refutation certificate")
    p.add_argument("--exact-limit", type=int, default=16)
    return ap


def parse_config(argv: list[str]) -> CliConfig:
    ns = build_parser().parse_args(argv)
    if ns.gen is not None:
        source = "gen"
    elif ns.input is not None:
        source = "file"
    else:
        source = "stdin"
    common = {"subcommand", "gen", "input", "format", "output", "seed"}
    flags = {k: v for k, v in vars(ns).items() if k not in common}
    for key in ("workers", "count", "delta0"):
        if flags.get(key) is not None and flags[key] < 1:
            raise UsageError(f"--{key.replace('_', '-')} must be >= 1")
    if flags.get("time_limit") is not None and flags["time_limit"] <= 0:
        raise UsageError("--time-limit must be positive")
    return CliConfig(ns.subcommand, source, ns.gen, ns.input, ns.format, ns.output, ns.seed, flags)


def main(argv: list[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    stdin = stdin or sys.stdin
    try:
        cfg = parse_config(argv)
    except SystemExit as e:  # argparse already printed usage
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    except UsageError as e:
        print(f"reedlab: {e}", file=sys.stderr)
        return EXIT_USAGE

    handle = cfg.output.open("w") if cfg.output else None
    sink = handle or stdout or sys.stdout

    def out(line: str) -> None:
        sink.write(line + "\n")

    try:
        return COMMANDS[cfg.subcommand](cfg, out, stdin)
    except (UsageError, FormatError, GraphError, StreamInputError, ValueError, OSError) as e:
        print(f"reedlab: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if handle:
            handle.close()


if __name__ == "__main__":
    sys.exit(main())
