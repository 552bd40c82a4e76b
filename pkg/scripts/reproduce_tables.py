#!/usr/bin/env python3
"""Print both density tables next to the published digits."""

import argparse

from hypack.cell import Family
from hypack.verify import TABLE1, TABLE2, table_row

COLS = ("h", "vol_over_48", "piece_over_m", "delta")


def show(family: Family, table: dict) -> float:
    print(f"\n{family.value}")
    print(f"{'p':>8}  " + "  ".join(f"{c:>12}" for c in COLS) + f"  {'max|diff|':>10}")
    worst = 0.0
    for p, expected in table.items():
        row = table_row(family, p)
        diff = max(abs(row[c] - e) for c, e in zip(COLS, expected))
        worst = max(worst, diff)
        print(f"{p:>8g}  " + "  ".join(f"{row[c]:12.8f}" for c in COLS) + f"  {diff:10.1e}")
    return worst


def main() -> None:
    argparse.ArgumentParser(description=__doc__).parse_args()
    worst = max(show(Family.OCTAHEDRON, TABLE1), show(Family.CUBE, TABLE2))
    print(f"\nlargest deviation from the printed tables: {worst:.1e}")


if __name__ == "__main__":
    main()
