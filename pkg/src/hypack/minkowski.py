"""Projective model of H^3 in the Lorentz space of signature (1,3).

Points and planes are both stored as 4-vectors. A plane is represented by
its pole, so the plane itself is ``{x : bilinear(pole, x) = 0}``. Vectors
are never normalized; every distance divides out the scale of its inputs.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import NamedTuple, Sequence

from hypack.errors import GeometryError

BOUNDARY_TOL = 1e-9
ACOSH_GUARD = 1e-9


class LVec4(NamedTuple):
    x0: float
    x1: float
    x2: float
    x3: float

    def scaled(self, c: float) -> "LVec4":
        return LVec4(*(c * v for v in self))


class Kind(Enum):
    INNER = "inner"
    BOUNDARY = "boundary"
    OUTER = "outer"


def lvec(*xs: float) -> LVec4:
    if len(xs) == 1:
        xs = tuple(xs[0])
    return LVec4(*(float(v) for v in xs))


def bilinear(x: Sequence[float], y: Sequence[float]) -> float:
    return -x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3]


def classify(v: Sequence[float], tol: float = BOUNDARY_TOL) -> Kind:
    """Sign of the Lorentz norm, measured relative to the largest component."""
    scale = max(abs(c) for c in v)
    if scale == 0.0:
        raise GeometryError("zero vector does not represent a projective point")
    q = bilinear(v, v) / (scale * scale)
    if abs(q) <= tol:
        return Kind.BOUNDARY
    return Kind.INNER if q < 0 else Kind.OUTER


def _require(v: Sequence[float], kind: Kind, what: str) -> None:
    got = classify(v)
    if got is not kind:
        raise GeometryError(f"{what} must be {kind.value}, got {got.value}: {tuple(v)}")


def _arccosh_guarded(q: float, what: str) -> float:
    if q < 1.0:
        if q < 1.0 - ACOSH_GUARD:
            raise GeometryError(f"{what}: cosh quotient {q!r} < 1")
        return 0.0
    return math.acosh(q)


def point_distance(p: Sequence[float], q: Sequence[float]) -> float:
    _require(p, Kind.INNER, "first point")
    _require(q, Kind.INNER, "second point")
    # sinh^2 d = <p,q>^2 - <p,p><q,q> (normalized) expanded in 2x2 minors, so
    # nearby points do not lose half their digits to the arccosh near 1
    gram = 0.0
    for i in range(4):
        for j in range(i + 1, 4):
            m = p[i] * q[j] - p[j] * q[i]
            gram += m * m if i == 0 else -m * m
    norm = bilinear(p, p) * bilinear(q, q)
    return math.asinh(math.sqrt(max(gram, 0.0) / norm))


def point_plane_distance(p: Sequence[float], b: Sequence[float]) -> float:
    """Distance from the inner point ``p`` to the plane with pole ``b``."""
    _require(p, Kind.INNER, "point")
    _require(b, Kind.OUTER, "plane pole")
    return math.asinh(abs(bilinear(p, b)) / math.sqrt(-bilinear(p, p) * bilinear(b, b)))


def plane_distance(a: Sequence[float], b: Sequence[float]) -> float:
    """Distance between two ultraparallel planes given by their poles.

    Intersecting planes raise ``GeometryError``; parallel (asymptotic)
    planes sit at quotient 1 and come back as distance 0.
    """
    _require(a, Kind.OUTER, "first plane pole")
    _require(b, Kind.OUTER, "second plane pole")
    quot = abs(bilinear(a, b)) / math.sqrt(bilinear(a, a) * bilinear(b, b))
    if quot < 1.0 - ACOSH_GUARD:
        raise GeometryError(
            f"planes intersect inside H^3 (cos of angle {quot!r}); no common perpendicular"
        )
    return _arccosh_guarded(quot, "plane_distance")


def polar_projection(p: Sequence[float], b_pole: Sequence[float]) -> LVec4:
    """Foot of ``p`` on the polar plane of ``b_pole``.

    The line through a pole is orthogonal to its polar plane, so the foot
    is where the line ``p b_pole`` meets that plane.
    """
    _require(b_pole, Kind.OUTER, "pole")
    bb = bilinear(b_pole, b_pole)
    pb = bilinear(p, b_pole)
    foot = LVec4(*(pi * bb - bi * pb for pi, bi in zip(p, b_pole)))
    scale = max(max(abs(c) for c in p) * abs(bb), max(abs(c) for c in b_pole) * abs(pb))
    if max(abs(c) for c in foot) <= 1e-14 * scale:
        raise GeometryError("degenerate projection: point coincides with the pole")
    return foot
