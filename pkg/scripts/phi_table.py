#!/usr/bin/env python3
"""Sweep the minimum-degree fraction c and tabulate the verified
monochromatic-circumference upper-bound certificates at each value.

Example:
    python scripts/phi_table.py --start 0.1 --stop 0.74 --step 0.04
"""

import argparse
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from redblue import phi_certificates  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--start", default="0.10")
    parser.add_argument("--stop", default="0.74")
    parser.add_argument("--step", default="0.04")
    args = parser.parse_args()

    c = Fraction(args.start)
    stop = Fraction(args.stop)
    step = Fraction(args.step)
    print(f"{'c':>8}  {'best bound':>10}  certificates")
    while c <= stop:
        certs = phi_certificates(c)
        best = min((cert.family_bound for cert in certs), default=None)
        listing = ", ".join(
            f"{cert.spec.canonical()} (ratio {cert.ratio})" for cert in certs
        )
        print(f"{str(c):>8}  {str(best):>10}  {listing or '-'}")
        c += step
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
