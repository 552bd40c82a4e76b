#!/usr/bin/env python3
"""Write the density curves behind the figures as CSV files (no plotting)."""

import argparse
from pathlib import Path

from hypack.cli import main as hypack

CURVES = {
    "octahedron_congruent_p": ["--family", "octahedron", "--variant", "congruent", "--p-range", "4:12"],
    "octahedron_delta1_x_p5": ["--family", "octahedron", "--variant", "delta1", "--p", "5"],
    "octahedron_delta2_x_p5": ["--family", "octahedron", "--variant", "delta2", "--p", "5"],
    "cube_congruent_p": ["--family", "cube", "--variant", "congruent", "--p-range", "6:12"],
    "cube_delta1_x_p7": ["--family", "cube", "--variant", "delta1", "--p", "7"],
    "cube_delta2_x_p7": ["--family", "cube", "--variant", "delta2", "--p", "7"],
    "cube_delta3_x_p7": ["--family", "cube", "--variant", "delta3", "--p", "7"],
    "cube_delta2_end_p": ["--family", "cube", "--variant", "delta2", "--policy", "end", "--p-range", "6:7"],
    "cube_delta3_end_p": ["--family", "cube", "--variant", "delta3", "--policy", "end", "--p-range", "6:7"],
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", type=Path, default=Path("curves"))
    ap.add_argument("--n", type=int, default=200)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for name, argv in CURVES.items():
        path = args.outdir / f"{name}.csv"
        code = hypack(["scan", *argv, "--n", str(args.n), "--out", str(path)])
        print(f"{'ok ' if code == 0 else 'ERR'} {path}")


if __name__ == "__main__":
    main()
