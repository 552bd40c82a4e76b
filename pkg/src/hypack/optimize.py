"""One-dimensional maximization of packing densities.

All searches scan a uniform grid first and then refine the best grid cell
with golden-section search. Interval endpoints are always candidates, so a
maximum sitting on the boundary is returned exactly at the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from hypack.cell import Family, TruncatedRegularCell, build
from hypack.errors import DomainError
from hypack.packing import PackingVariant, density_at, x_interval

N_SCAN = 1024
X_TOL = 1e-10
TIE_TOL = 1e-13
OPEN_END_OFFSET = 1e-6

INVGOLD = (math.sqrt(5.0) - 1.0) / 2.0


class XPolicy(Enum):
    START = "start"
    END = "end"
    FREE = "free"


@dataclass(frozen=True)
class OptResult:
    arg: float
    value: float
    bracket: tuple[float, float]
    tol: float
    evaluations: int
    x: Optional[float] = None  # blow-up parameter at the optimum of a p-search


def _golden(f: Callable[[float], float], a: float, b: float, tol: float) -> tuple[float, float, int]:
    n = 0
    c = b - INVGOLD * (b - a)
    d = a + INVGOLD * (b - a)
    fc, fd = f(c), f(d)
    n += 2
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INVGOLD * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INVGOLD * (b - a)
            fd = f(d)
        n += 1
    return a, b, n


def maximize(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    n_scan: int = N_SCAN,
    tol: float = X_TOL,
) -> OptResult:
    """Global maximum of ``f`` on ``[lo, hi]`` by scan-then-refine.

    NaN values count as -inf so objectives may be partial. Grid ties within
    ``TIE_TOL`` go to the smaller abscissa.
    """
    if not hi >= lo:
        raise DomainError(f"empty interval [{lo!r}, {hi!r}]")
    if hi == lo:
        return OptResult(lo, f(lo), (lo, hi), 0.0, 1)

    def g(v: float) -> float:
        y = f(v)
        return -math.inf if math.isnan(y) else y

    grid = np.linspace(lo, hi, n_scan)
    vals = np.array([g(v) for v in grid])
    best = float(vals.max())
    if best == -math.inf:
        raise DomainError(f"objective undefined on all of [{lo:g}, {hi:g}]")
    i = int(np.flatnonzero(vals >= best - TIE_TOL)[0])
    a = float(grid[max(i - 1, 0)])
    b = float(grid[min(i + 1, n_scan - 1)])
    a, b, n_gold = _golden(g, a, b, tol)

    x = 0.5 * (a + b)
    gx = g(x)
    n_extra = 2
    for e in (lo, hi):
        if a <= e <= b:
            ge = g(e)
            n_extra += 1
            # endpoints win ties so boundary maxima land exactly on the boundary
            if ge >= gx:
                x, gx = e, ge
    return OptResult(
        arg=x,
        value=f(x),
        bracket=(a, b),
        tol=0.5 * (b - a),
        evaluations=n_scan + n_gold + n_extra,
    )


def maximize_over_x(
    cell: TruncatedRegularCell, variant: PackingVariant, n_scan: int = N_SCAN
) -> OptResult:
    lo, hi = x_interval(cell, variant)
    return maximize(lambda x: density_at(cell, variant, x), lo, hi, n_scan=n_scan)


def x_at_policy(
    cell: TruncatedRegularCell, variant: PackingVariant, policy: XPolicy, n_scan: int = N_SCAN
) -> float:
    policy = XPolicy(policy)
    lo, hi = x_interval(cell, variant)
    if policy is XPolicy.START:
        return lo
    if policy is XPolicy.END:
        return hi
    return maximize_over_x(cell, variant, n_scan=n_scan).arg


def policy_density(
    family: Family,
    variant: PackingVariant,
    policy: XPolicy,
    p: float,
    n_scan: int = N_SCAN,
) -> tuple[float, float]:
    """(x, density) at parameter ``p``; both NaN where the variant is absent."""
    cell = build(family, p)
    try:
        x = x_at_policy(cell, variant, policy, n_scan=n_scan)
    except DomainError:
        return math.nan, math.nan
    return x, density_at(cell, variant, x)


def clamp_p_range(family: Family, p_range: tuple[float, float]) -> tuple[float, float]:
    lo, hi = (float(v) for v in p_range)
    bound = Family(family).p_bound
    if lo <= bound:
        lo = bound + OPEN_END_OFFSET
    if not hi >= lo:
        raise DomainError(f"p range [{p_range[0]}, {p_range[1]}] has no admissible part (p > {bound:g})")
    return lo, hi


def maximize_over_p(
    family: Family,
    variant: PackingVariant,
    policy: XPolicy,
    p_range: tuple[float, float],
    n_scan: int = N_SCAN,
) -> OptResult:
    family, variant, policy = Family(family), PackingVariant(variant), XPolicy(policy)
    lo, hi = clamp_p_range(family, p_range)
    inner_scan = n_scan if policy is not XPolicy.FREE else max(64, n_scan // 8)

    def objective(p: float) -> float:
        return policy_density(family, variant, policy, p, n_scan=inner_scan)[1]

    try:
        res = maximize(objective, lo, hi, n_scan=n_scan)
    except DomainError as exc:
        raise DomainError(f"{variant.value} absent on p range [{lo:g}, {hi:g}]: {exc}") from None
    x, _ = policy_density(family, variant, policy, res.arg, n_scan=inner_scan)
    return OptResult(res.arg, res.value, res.bracket, res.tol, res.evaluations, x=x)


@dataclass(frozen=True)
class Profile:
    abscissa: np.ndarray
    values: np.ndarray
    segments: list[tuple[float, float, str]]

    @property
    def sign_changes(self) -> int:
        return sum(1 for a, b in zip(self.segments, self.segments[1:]) if {a[2], b[2]} == {"increasing", "decreasing"})

    @property
    def turning_points(self) -> list[float]:
        return [b[0] for a, b in zip(self.segments, self.segments[1:]) if {a[2], b[2]} == {"increasing", "decreasing"}]


def profile(f: Callable[[float], float], lo: float, hi: float, n: int, flat_tol: float = 0.0) -> Profile:
    """Sample ``f`` uniformly and split the samples into monotone runs."""
    if n < 3:
        raise DomainError(f"profile needs n >= 3, got {n}")
    xs = np.linspace(lo, hi, n)
    ys = np.array([f(v) for v in xs])
    d = np.diff(ys)
    labels = np.where(d > flat_tol, "increasing", np.where(d < -flat_tol, "decreasing", "flat"))
    segments: list[tuple[float, float, str]] = []
    start = 0
    for k in range(1, len(labels) + 1):
        if k == len(labels) or labels[k] != labels[start]:
            segments.append((float(xs[start]), float(xs[k]), str(labels[start])))
            start = k
    # flat runs between monotone runs do not break a trend
    trend = [s for s in segments if s[2] != "flat"]
    return Profile(xs, ys, trend if trend else segments)


def monotone_profile(
    family: Family,
    variant: PackingVariant,
    policy: XPolicy,
    p_range: tuple[float, float],
    n: int,
) -> Profile:
    lo, hi = clamp_p_range(family, p_range)
    return profile(lambda p: policy_density(family, variant, policy, p)[1], lo, hi, n)
