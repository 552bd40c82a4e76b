"""Truncated regular octahedra and cubes with dihedral angle 2pi/p.

Both cells start from a Euclidean solid centred at the origin of the
Cayley-Klein ball whose vertices lie outside the absolute. Each vertex is
cut off by its polar plane; those truncating planes carry the hyperballs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Optional

from hypack import minkowski as mk
from hypack.errors import DomainError, GeometryError
from hypack.minkowski import LVec4
from hypack.orthoscheme import OrthoschemeAngles, SchlafliTriple, orthoscheme_volume, truncation_height

CENTER = LVec4(1.0, 0.0, 0.0, 0.0)
ROUTE_TOL = 1e-8


class Family(Enum):
    OCTAHEDRON = "octahedron"
    CUBE = "cube"

    @property
    def p_bound(self) -> float:
        return 4.0 if self is Family.OCTAHEDRON else 6.0

    @property
    def n_vertices(self) -> int:
        return 6 if self is Family.OCTAHEDRON else 8

    @property
    def triple_order(self) -> tuple[float, float]:
        # (q, r) of the fundamental orthoscheme {p, q, r}
        return (4.0, 3.0) if self is Family.OCTAHEDRON else (3.0, 4.0)

    def triple(self, p: float) -> SchlafliTriple:
        return SchlafliTriple(float(p), *self.triple_order)

    def angles(self, p: float) -> OrthoschemeAngles:
        return OrthoschemeAngles.from_triple(self.triple(p))


def _check_p(family: Family, p: float) -> float:
    p = float(p)
    if not (math.isfinite(p) and p > family.p_bound):
        raise DomainError(
            f"p outside admissible range (p > {family.p_bound:g} required), got {p:g}"
        )
    return p


def param_y(family: Family, p: float) -> float:
    """Euclidean vertex coordinate y for dihedral angle 2pi/p."""
    p = _check_p(family, p)
    c = math.cos(2.0 * math.pi / p)
    if family is Family.OCTAHEDRON:
        y2 = (3.0 * c + 1.0) / (c + 1.0)
        outer = y2 > 1.0
    else:
        y2 = c / (c + 1.0)
        outer = 3.0 * y2 > 1.0
    if not outer:
        raise DomainError(f"p={p:g} does not put the {family.value} vertices outside the absolute")
    return math.sqrt(y2)


def vertices(family: Family, y: float) -> tuple[LVec4, ...]:
    if family is Family.OCTAHEDRON:
        return (
            LVec4(1.0, y, 0.0, 0.0),
            LVec4(1.0, 0.0, y, 0.0),
            LVec4(1.0, -y, 0.0, 0.0),
            LVec4(1.0, 0.0, -y, 0.0),
            LVec4(1.0, 0.0, 0.0, y),
            LVec4(1.0, 0.0, 0.0, -y),
        )
    return (
        LVec4(1.0, y, -y, -y),
        LVec4(1.0, y, y, -y),
        LVec4(1.0, -y, y, -y),
        LVec4(1.0, -y, -y, -y),
        LVec4(1.0, y, -y, y),
        LVec4(1.0, y, y, y),
        LVec4(1.0, -y, y, y),
        LVec4(1.0, -y, -y, y),
    )


def side_face_poles(family: Family, y: float) -> tuple[LVec4, ...]:
    """Poles of the planes through the side faces of the untruncated solid.

    Octahedron faces are s.x = y for sign vectors s; cube faces are x_i = +-y.
    """
    if family is Family.OCTAHEDRON:
        return tuple(LVec4(y, *s) for s in product((1.0, -1.0), repeat=3))
    poles = []
    for i in range(3):
        for sgn in (1.0, -1.0):
            e = [0.0, 0.0, 0.0]
            e[i] = 1.0
            poles.append(LVec4(sgn * y, *e))
    return tuple(poles)


def face_area(family: Family, p: float) -> float:
    """Area of one truncating polygon (square or triangle, all angles 2pi/p)."""
    p = _check_p(family, p)
    if family is Family.OCTAHEDRON:
        return 2.0 * math.pi * (p - 4.0) / p
    return math.pi * (p - 6.0) / p


def _closed_forms(family: Family, y: float) -> tuple[float, float, float, Optional[float]]:
    """(h, w, t, s) from the vertex coordinate alone."""
    y2 = y * y
    if family is Family.OCTAHEDRON:
        h = 0.5 * math.acosh(1.0 / (y2 - 1.0))
        w = math.asinh(math.sqrt((y2 * y2 + 3.0) / ((3.0 - y2) * (y2 - 1.0))))
        t = math.acosh(y / math.sqrt(y2 - 1.0))
        return h, w, t, None
    h = 0.5 * math.acosh((1.0 - y2) / (3.0 * y2 - 1.0))
    w = math.asinh(math.sqrt((3.0 * y2 * y2 + 1.0) / ((1.0 - 3.0 * y2) * (y2 - 1.0))))
    t = math.acosh(math.sqrt(3.0 * y2 / (3.0 * y2 - 1.0)))
    s = 0.5 * math.acosh((1.0 + y2) / (3.0 * y2 - 1.0))
    return h, w, t, s


@dataclass(frozen=True)
class TruncatedRegularCell:
    family: Family
    p: float
    y: float
    vertices: tuple[LVec4, ...]
    h: float
    w: float
    t: float
    s: Optional[float]
    face_area: float
    volume: float

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def axis_vertex(self) -> LVec4:
        # B5 for the octahedron, B2 for the cube
        return self.vertices[4] if self.family is Family.OCTAHEDRON else self.vertices[1]


def build(family: Family, p: float) -> TruncatedRegularCell:
    family = Family(family)
    y = param_y(family, p)
    p = float(p)
    verts = vertices(family, y)

    h, w, _, _ = _closed_forms(family, y)
    h_matrix = truncation_height(family.triple(p))
    if abs(h - h_matrix) > ROUTE_TOL * max(1.0, h):
        raise GeometryError(f"{family.value} p={p:g}: h={h!r} disagrees with matrix route {h_matrix!r}")

    axis = verts[4] if family is Family.OCTAHEDRON else verts[1]
    t = mk.point_distance(CENTER, mk.polar_projection(CENTER, axis))
    s = None
    if family is Family.CUBE:
        # B1 and B3 are face-diagonal neighbours
        s = 0.5 * mk.plane_distance(verts[0], verts[2])

    return TruncatedRegularCell(
        family=family,
        p=p,
        y=y,
        vertices=verts,
        h=h,
        w=w,
        t=t,
        s=s,
        face_area=face_area(family, p),
        volume=48.0 * orthoscheme_volume(family.angles(p)),
    )
