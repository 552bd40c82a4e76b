"""Hyperball piece volumes and local packing densities.

Every density is a weighted sum of truncated-prism hyperball pieces over
one cell, divided by the cell volume. The variants differ only in which
heights the hyperballs get, so each is described by a tuple of rows
``(multiplicity, coef_h, coef_t, coef_x)`` meaning ``multiplicity`` balls
of height ``coef_h*h + coef_t*t + coef_x*x``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from hypack.cell import Family, TruncatedRegularCell
from hypack.errors import DomainError, VariantAbsent

X_TOL = 1e-12

CURVATURE_UNIT = 1.0  # natural length unit k; fixed to 1 throughout


class PackingVariant(Enum):
    CONGRUENT = "congruent"
    DELTA1 = "delta1"
    DELTA2 = "delta2"
    DELTA3 = "delta3"


HeightRow = tuple[int, float, float, float]

HEIGHTS: dict[tuple[Family, PackingVariant], tuple[HeightRow, ...]] = {
    (Family.OCTAHEDRON, PackingVariant.CONGRUENT): ((6, 1, 0, 0),),
    (Family.OCTAHEDRON, PackingVariant.DELTA1): ((2, 1, 0, 1), (4, 1, 0, -1)),
    (Family.OCTAHEDRON, PackingVariant.DELTA2): ((1, 0, 1, 1), (1, 0, 1, -1), (4, 2, -1, -1)),
    (Family.CUBE, PackingVariant.CONGRUENT): ((8, 1, 0, 0),),
    (Family.CUBE, PackingVariant.DELTA1): ((2, 1, 0, 1), (6, 1, 0, -1)),
    (Family.CUBE, PackingVariant.DELTA2): (
        (1, 0, 1, 1),
        (1, 0, 1, -1),
        (3, 2, -1, -1),
        (3, 2, -1, 1),
    ),
    (Family.CUBE, PackingVariant.DELTA3): ((4, 1, 0, 1), (4, 1, 0, -1)),
}

_C = TruncatedRegularCell
X_MAX: dict[tuple[Family, PackingVariant], Callable[[_C], float]] = {
    (Family.OCTAHEDRON, PackingVariant.CONGRUENT): lambda c: 0.0,
    (Family.OCTAHEDRON, PackingVariant.DELTA1): lambda c: min(c.h, c.w - c.h, c.t - c.h),
    # w - t keeps the t + x ball off the far face for real p near 4; inactive at p = 5
    (Family.OCTAHEDRON, PackingVariant.DELTA2): lambda c: min(2 * c.h - c.t, c.w - c.t),
    (Family.CUBE, PackingVariant.CONGRUENT): lambda c: 0.0,
    (Family.CUBE, PackingVariant.DELTA1): lambda c: min(2 * c.h, c.w, c.t) - c.h,
    (Family.CUBE, PackingVariant.DELTA2): lambda c: min(2 * c.h - c.t, c.t, c.w - c.t, c.s - c.h),
    (Family.CUBE, PackingVariant.DELTA3): lambda c: min(c.h, c.s - c.h),
}


@dataclass(frozen=True)
class PackingConfig:
    cell: TruncatedRegularCell
    variant: PackingVariant
    x: float = 0.0


def hyperball_piece_volume(area: float, h: float) -> float:
    """Volume of a half hyperball of height ``h`` over a base polygon of ``area``."""
    if area < 0.0 or h < 0.0:
        raise DomainError(f"piece volume needs area >= 0 and h >= 0, got area={area!r}, h={h!r}")
    k = CURVATURE_UNIT
    return 0.25 * area * (k * math.sinh(2.0 * h / k) + 2.0 * h)


def piece_volume_dh(area: float, h: float) -> float:
    return 0.25 * area * (2.0 * math.cosh(2.0 * h) + 2.0)


def _rows(cell: TruncatedRegularCell, variant: PackingVariant) -> tuple[HeightRow, ...]:
    try:
        return HEIGHTS[(cell.family, PackingVariant(variant))]
    except KeyError:
        raise DomainError(f"variant {variant} is not defined for the {cell.family.value}") from None


def x_interval(cell: TruncatedRegularCell, variant: PackingVariant) -> tuple[float, float]:
    """Admissible blow-up range ``[0, x_max]``; raises ``VariantAbsent`` if empty."""
    variant = PackingVariant(variant)
    _rows(cell, variant)
    x_max = X_MAX[(cell.family, variant)](cell)
    if x_max < 0.0:
        raise VariantAbsent(
            f"{variant.value} does not occur for the {cell.family.value} at p={cell.p:g} "
            f"(x_max={x_max:.6g} < 0)"
        )
    return 0.0, x_max


def heights(cell: TruncatedRegularCell, variant: PackingVariant, x: float) -> list[tuple[int, float]]:
    out = []
    for mult, ch, ct, cx in _rows(cell, variant):
        hh = ch * cell.h + ct * cell.t + cx * x
        if -X_TOL < hh < 0.0:
            hh = 0.0
        out.append((mult, hh))
    return out


def _checked_x(cell: TruncatedRegularCell, variant: PackingVariant, x: float) -> float:
    _, x_max = x_interval(cell, variant)
    if not (-X_TOL <= x <= x_max + X_TOL):
        raise DomainError(f"x={x!r} outside [0, {x_max!r}] for {PackingVariant(variant).value}")
    return min(max(x, 0.0), x_max)


def density_at(cell: TruncatedRegularCell, variant: PackingVariant, x: float = 0.0) -> float:
    x = _checked_x(cell, variant, float(x))
    total = sum(m * hyperball_piece_volume(cell.face_area, hh) for m, hh in heights(cell, variant, x))
    return total / cell.volume


def density(config: PackingConfig) -> float:
    return density_at(config.cell, config.variant, config.x)


def density_dx(cell: TruncatedRegularCell, variant: PackingVariant, x: float) -> float:
    """Analytic derivative of ``density_at`` in the blow-up parameter."""
    x = _checked_x(cell, variant, float(x))
    rows = _rows(cell, variant)
    total = sum(
        mult * cx * piece_volume_dh(cell.face_area, ch * cell.h + ct * cell.t + cx * x)
        for mult, ch, ct, cx in rows
    )
    return total / cell.volume
