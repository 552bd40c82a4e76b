"""Coxeter orthoschemes {p,q,r}: Schlaefli matrix, truncation height, volume."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from hypack import lobachevsky as _lob
from hypack.errors import DomainError, GeometryError

ZERO_EIG_TOL = 1e-10


class SchlafliTriple(NamedTuple):
    p: float
    q: float
    r: float


class OrthoschemeAngles(NamedTuple):
    a01: float
    a12: float
    a23: float

    @classmethod
    def from_triple(cls, t: SchlafliTriple) -> "OrthoschemeAngles":
        return cls(math.pi / t.p, math.pi / t.q, math.pi / t.r)


@dataclass(frozen=True)
class CoxeterMatrix:
    triple: SchlafliTriple
    c: np.ndarray
    hinv: np.ndarray
    eigenvalues: np.ndarray

    @property
    def signature(self) -> tuple[int, int]:
        return int((self.eigenvalues < 0).sum()), int((self.eigenvalues > 0).sum())


def schlafli_matrix(t: SchlafliTriple) -> np.ndarray:
    a, b, c = (math.cos(math.pi / k) for k in t)
    return np.array(
        [
            [1.0, -a, 0.0, 0.0],
            [-a, 1.0, -b, 0.0],
            [0.0, -b, 1.0, -c],
            [0.0, 0.0, -c, 1.0],
        ]
    )


def coxeter_matrix(t: SchlafliTriple) -> CoxeterMatrix:
    """Schlaefli matrix of ``t`` and its inverse; only hyperbolic triples pass.

    Raises ``GeometryError`` when the signature is not (1,3), e.g. for the
    Euclidean cube tiling (4,3,4) whose matrix is singular.
    """
    t = SchlafliTriple(*(float(k) for k in t))
    if min(t) < 2.0:
        raise DomainError(f"Schlaefli entries must be >= 2, got {tuple(t)}")
    c = schlafli_matrix(t)
    eig = np.linalg.eigvalsh(c)
    n_zero = int((np.abs(eig) <= ZERO_EIG_TOL).sum())
    n_neg = int((eig < -ZERO_EIG_TOL).sum())
    if n_zero or n_neg != 1:
        signs = "".join("0" if abs(e) <= ZERO_EIG_TOL else ("-" if e < 0 else "+") for e in eig)
        raise GeometryError(f"{tuple(t)} is not hyperbolic: eigenvalue signs {signs}")
    return CoxeterMatrix(t, c, np.linalg.inv(c), eig)


def truncation_height(t: SchlafliTriple) -> float:
    """Half the distance between adjacent truncating planes of the dual cell.

    With ``H`` the inverse Schlaefli matrix,
    cosh^2 h = (H22 H33 - H23^2) / (H22 H33). For truncated orthoschemes
    H22 < 0 < H33, which keeps the quotient above 1.
    """
    h = coxeter_matrix(t).hinv
    h22, h33, h23 = h[2, 2], h[3, 3], h[2, 3]
    quot = (h22 * h33 - h23 * h23) / (h22 * h33)
    if not quot >= 1.0:
        raise GeometryError(f"{tuple(t)}: truncation radicand {quot!r} < 1, vertex not outer")
    return math.acosh(math.sqrt(quot))


def orthoscheme_volume(a: OrthoschemeAngles) -> float:
    """Volume of a (simply truncated) orthoscheme from its essential angles."""
    a01, a12, a23 = a
    rad = math.cos(a12) ** 2 - math.sin(a01) ** 2 * math.sin(a23) ** 2
    if rad < 0.0:
        raise GeometryError(f"angles {tuple(a)} give no real theta (radicand {rad!r})")
    theta = math.atan(math.sqrt(rad) / (math.cos(a01) * math.cos(a23)))
    L = _lob.lobachevsky
    hp = 0.5 * math.pi
    return 0.25 * (
        L(a01 + theta)
        - L(a01 - theta)
        + L(hp + a12 - theta)
        + L(hp - a12 - theta)
        + L(a23 + theta)
        - L(a23 - theta)
        + 2.0 * L(hp - theta)
    )
