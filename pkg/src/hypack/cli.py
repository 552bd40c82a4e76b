"""hypack command line: table | scan | optimize | verify.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import math
import sys
from typing import IO, Iterator, Optional, Sequence

import numpy as np

from hypack import verify
from hypack.cell import Family, build
from hypack.errors import DomainError
from hypack.optimize import XPolicy, clamp_p_range, maximize_over_p, maximize_over_x, policy_density
from hypack.packing import PackingVariant, density_at, x_interval

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TABLE_FIELDS = ("p", "h", "vol_over_48", "piece_over_m", "delta")


class UsageError(Exception):
    pass


def _floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _range(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from None
    if not lo <= hi:
        raise argparse.ArgumentTypeError(f"range {text!r} has lo > hi")
    return lo, hi


def _num(v: Optional[float]) -> Optional[float]:
    return None if v is None or (isinstance(v, float) and math.isnan(v)) else float(v)


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


@contextlib.contextmanager
def _output(path: Optional[str]) -> Iterator[IO[str]]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def _csv_writer(fh: IO[str]):
    return csv.writer(fh, lineterminator="\n")


def cmd_table(args: argparse.Namespace) -> int:
    family = Family(args.family)
    rows, failed = [], False
    for p in args.p:
        try:
            rows.append(verify.table_row(family, p))
        except (DomainError, ValueError) as exc:
            failed = True
            print(f"p={p:g}: {exc}", file=sys.stderr)
            rows.append({"p": p, "error": str(exc)})
    with _output(args.out) as fh:
        if args.format == "json":
            fh.write(dump_json({"family": family.value, "rows": rows}))
        else:
            w = _csv_writer(fh)
            w.writerow(TABLE_FIELDS)
            for row in rows:
                if "error" in row:
                    continue
                w.writerow([f"{row['p']:g}"] + [f"{row[k]:.8f}" for k in TABLE_FIELDS[1:]])
    return EXIT_USAGE if failed else EXIT_OK


def _scan_rows(args: argparse.Namespace) -> tuple[str, list[tuple[float, Optional[float]]]]:
    family, variant = Family(args.family), PackingVariant(args.variant)
    if args.p is not None:
        if len(args.p) != 1:
            raise UsageError("scan takes a single --p value")
        if variant is PackingVariant.CONGRUENT:
            raise UsageError("congruent packings have no blow-up range; scan over --p-range instead")
        cell = build(family, args.p[0])
        lo, hi = x_interval(cell, variant)
        xs = np.linspace(lo, hi, args.n)
        return "x", [(float(x), density_at(cell, variant, min(float(x), hi))) for x in xs]

    lo, hi = clamp_p_range(family, args.p_range)
    ps = np.linspace(lo, hi, args.n)
    out = []
    for p in ps:
        if args.x is not None:
            cell = build(family, p)
            try:
                val = density_at(cell, variant, args.x)
            except DomainError:
                val = math.nan
        else:
            val = policy_density(family, variant, XPolicy(args.policy), float(p))[1]
        out.append((float(p), val))
    return "p", out


def cmd_scan(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise UsageError(f"--n must be at least 2, got {args.n}")
    if (args.p is None) == (args.p_range is None):
        raise UsageError("scan needs exactly one of --p (scan x) or --p-range (scan p)")
    kind, rows = _scan_rows(args)
    with _output(args.out) as fh:
        if args.format == "json":
            fh.write(dump_json({"abscissa": kind, "rows": [{"abscissa": a, "density": _num(d)} for a, d in rows]}))
        else:
            w = _csv_writer(fh)
            w.writerow(("abscissa", "density"))
            for a, d in rows:
                w.writerow((repr(a), repr(float(d))))
    return EXIT_OK


def cmd_optimize(args: argparse.Namespace) -> int:
    family, variant = Family(args.family), PackingVariant(args.variant)
    if (args.p is None) == (args.p_range is None):
        raise UsageError("optimize needs exactly one of --p (optimize x) or --p-range (optimize p)")
    if args.p is not None:
        if len(args.p) != 1:
            raise UsageError("optimize takes a single --p value")
        res = maximize_over_x(build(family, args.p[0]), variant)
        out = {
            "family": family.value,
            "variant": variant.value,
            "policy": None,
            "p": float(args.p[0]),
            "x": res.arg,
            "delta": res.value,
        }
    else:
        res = maximize_over_p(family, variant, XPolicy(args.policy), args.p_range)
        out = {
            "family": family.value,
            "variant": variant.value,
            "policy": args.policy,
            "p": res.arg,
            "x": _num(res.x),
            "delta": res.value,
        }
    out.update(bracket=list(res.bracket), tol=res.tol, evaluations=res.evaluations)
    with _output(args.out) as fh:
        fh.write(dump_json(out))
    return EXIT_OK


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, str):
        return v
    return f"{v:.8f}"


def cmd_verify(args: argparse.Namespace) -> int:
    only = [g for g in (args.only or "").split(",") if g]
    try:
        reports = verify.run(only or None)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    with _output(args.out) as fh:
        if args.format == "json":
            fh.write(
                dump_json(
                    [
                        {
                            "name": r.name,
                            "group": r.group,
                            "expected": r.expected,
                            "source": r.source,
                            "computed": r.computed,
                            "tolerance": r.tol,
                            "passed": r.passed,
                            "error": r.error,
                        }
                        for r in reports
                    ]
                )
            )
        else:
            width = max((len(r.name) for r in reports), default=4)
            fh.write(f"{'':4}  {'check':<{width}}  {'expected':>12}  {'computed':>12}  {'|diff|':>9}  {'tol':>7}  source\n")
            for r in reports:
                diff = "-" if r.delta is None else f"{r.delta:.2e}"
                tag = "PASS" if r.passed else "FAIL"
                fh.write(
                    f"{tag:4}  {r.name:<{width}}  {_fmt(r.expected):>12}  {_fmt(r.computed):>12}  "
                    f"{diff:>9}  {r.tol:7.0e}  {r.source}"
                )
                fh.write(f"  [{r.error}]\n" if r.error else "\n")
            n_fail = sum(not r.passed for r in reports)
            fh.write(f"{len(reports) - n_fail}/{len(reports)} checks passed\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypack", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, family: bool = True) -> None:
        if family:
            sp.add_argument("--family", required=True, choices=[f.value for f in Family])
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", default=None, help="write to this path instead of stdout")

    sp = sub.add_parser("table", help="per-p table of h, volume, hyperball piece and density")
    common(sp)
    sp.add_argument("--p", type=_floats, required=True, help="comma-separated p values")
    sp.set_defaults(func=cmd_table)

    variants = [v.value for v in PackingVariant]
    policies = [p.value for p in XPolicy]

    sp = sub.add_parser("scan", help="density curve over x (fixed --p) or over p (--p-range)")
    common(sp)
    sp.add_argument("--variant", choices=variants, default="congruent")
    sp.add_argument("--p", type=_floats)
    sp.add_argument("--p-range", type=_range)
    sp.add_argument("--x", type=float, default=None, help="fixed blow-up parameter for p scans")
    sp.add_argument("--policy", choices=policies, default="start")
    sp.add_argument("--n", type=int, default=200)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("optimize", help="maximize density over x (fixed --p) or over p (--p-range)")
    common(sp)
    sp.add_argument("--variant", choices=variants, default="congruent")
    sp.add_argument("--p", type=_floats)
    sp.add_argument("--p-range", type=_range)
    sp.add_argument("--policy", choices=policies, default="start")
    sp.set_defaults(func=cmd_optimize)

    sp = sub.add_parser("verify", help="reproduce every published value and report pass/fail")
    common(sp, family=False)
    sp.add_argument("--only", default=None, help=f"comma-separated groups: {','.join(verify.GROUPS)}")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except DomainError as exc:
        print(f"hypack {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK
