"""Write graph6 corpora of all non-isomorphic graphs on n vertices.

Usage:
    python scripts/enumerate_graphs.py --max-n 8 --out data/

Produces one file ``graphs<n>.g6`` per n. The counts are checked against the
known sequence 1, 1, 2, 4, 11, 34, 156, 1044, 12346.
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from reedlab.enumerate import KNOWN_COUNTS, graphs_up_to
from reedlab.formats import emit_graph6


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--out", type=Path, default=Path("data"))
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    t0 = time.time()
    by_n: dict[int, list[str]] = {}
    for g in graphs_up_to(args.max_n):
        by_n.setdefault(g.n, []).append(emit_graph6(g))
    for n, lines in sorted(by_n.items()):
        assert len(lines) == KNOWN_COUNTS[n], (n, len(lines))
        (args.out / f"graphs{n}.g6").write_text("\n".join(sorted(lines)) + "\n")
        print(f"n={n}: {len(lines)} graphs")
    print(f"done in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
