#!/usr/bin/env python3
"""Local-search hunt for colourings of K_n with small monochromatic
circumference.  The 3t-vertex split colouring achieves (2/3) n, so a good
run on K9 should reach 6.

Example:
    python scripts/circumference_hunt.py --n 9 --budget 10000 --seed 1
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from redblue import (  # noqa: E402
    SearchBudget,
    SearchMode,
    UncolouredView,
    minimize_mono_circumference,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=9)
    parser.add_argument("--budget", type=int, default=10_000)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--mode", choices=("local", "random"), default="local")
    args = parser.parse_args()

    base = UncolouredView.from_edges(
        args.n, [(u, v) for u in range(args.n) for v in range(u + 1, args.n)]
    )
    report = minimize_mono_circumference(
        base,
        SearchBudget(
            mode=SearchMode(args.mode), max_items=args.budget, seed=args.seed
        ),
        instance=f"K{args.n}",
    )
    print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
