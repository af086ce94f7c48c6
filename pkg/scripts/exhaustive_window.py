#!/usr/bin/env python3
"""Exhaustively test every red/blue colouring of a small complete graph
against a named predicate, with the colour-swap reduction and optional
worker parallelism.

Examples:
    python scripts/exhaustive_window.py --n 5 --predicate mono-c3-or-c5
    python scripts/exhaustive_window.py --n 7 --predicate mono-c4 --workers 4
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from redblue import SearchBudget, UncolouredView, search_colourings  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=5, help="order of the complete base")
    parser.add_argument("--predicate", default="mono-c3-or-c5")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--budget", type=int, default=1 << 28)
    args = parser.parse_args()

    base = UncolouredView.from_edges(
        args.n, [(u, v) for u in range(args.n) for v in range(u + 1, args.n)]
    )
    report = search_colourings(
        base,
        args.predicate,
        SearchBudget(workers=args.workers, max_items=args.budget),
        instance=f"K{args.n}",
    )
    print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    return 2 if report.verdict.value == "Refuted-at-this-n" else 0


if __name__ == "__main__":
    raise SystemExit(main())
