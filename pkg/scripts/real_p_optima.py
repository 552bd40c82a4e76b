#!/usr/bin/env python3
"""Optimal real p for each family, variant and x policy."""

import argparse

from hypack.cell import Family
from hypack.errors import DomainError
from hypack.optimize import XPolicy, maximize_over_p
from hypack.packing import PackingVariant as V

CASES = [
    (Family.OCTAHEDRON, V.CONGRUENT, XPolicy.START, (4, 20)),
    (Family.OCTAHEDRON, V.DELTA1, XPolicy.FREE, (4, 20)),
    (Family.OCTAHEDRON, V.DELTA2, XPolicy.FREE, (4, 6)),
    (Family.CUBE, V.CONGRUENT, XPolicy.START, (6, 20)),
    (Family.CUBE, V.DELTA1, XPolicy.FREE, (6, 20)),
    (Family.CUBE, V.DELTA2, XPolicy.END, (6, 7)),
    (Family.CUBE, V.DELTA2, XPolicy.FREE, (6, 9)),
    (Family.CUBE, V.DELTA3, XPolicy.END, (6, 7)),
    (Family.CUBE, V.DELTA3, XPolicy.END, (6, 20)),
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-scan", type=int, default=1024)
    args = ap.parse_args()
    print(f"{'family':<11}{'variant':<10}{'policy':<7}{'range':<9}{'p_opt':>10}{'x_opt':>10}{'density':>10}")
    for family, v, policy, rng in CASES:
        try:
            r = maximize_over_p(family, v, policy, rng, n_scan=args.n_scan)
        except DomainError as exc:
            print(f"{family.value:<11}{v.value:<10}{policy.value:<7}{rng!s:<9}  {exc}")
            continue
        print(f"{family.value:<11}{v.value:<10}{policy.value:<7}{rng[0]}:{rng[1]:<7}{r.arg:10.5f}{r.x:10.5f}{r.value:10.5f}")


if __name__ == "__main__":
    main()
