import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypack.errors import GeometryError
from hypack.orthoscheme import (
    OrthoschemeAngles,
    SchlafliTriple,
    coxeter_matrix,
    orthoscheme_volume,
    truncation_height,
)
from oracles import eigen_signs, tridiagonal_det


def test_matrix_entries_734():
    c = coxeter_matrix(SchlafliTriple(7, 3, 4)).c
    assert np.allclose(np.diag(c), 1.0)
    assert c[0, 1] == pytest.approx(-0.90097, abs=1e-5)
    assert c[1, 2] == pytest.approx(-0.5)
    assert c[2, 3] == pytest.approx(-math.sqrt(2) / 2)
    assert c[0, 2] == c[0, 3] == c[1, 3] == 0.0
    assert np.array_equal(c, c.T)


def test_euclidean_cube_tiling_rejected():
    assert tridiagonal_det(4, 3, 4) == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(GeometryError, match="not hyperbolic"):
        coxeter_matrix(SchlafliTriple(4, 3, 4))


def test_spherical_triple_rejected():
    assert tridiagonal_det(3, 3, 3) > 0
    with pytest.raises(GeometryError):
        coxeter_matrix(SchlafliTriple(3, 3, 3))


def test_543_hyperbolic():
    m = coxeter_matrix(SchlafliTriple(5, 4, 3))
    assert eigen_signs(m.c) == (1, 0, 3)
    assert m.signature == (1, 3)
    assert tridiagonal_det(5, 4, 3) == pytest.approx(np.linalg.det(m.c), abs=1e-14)


@given(st.floats(4.01, 200.0), st.sampled_from([(4, 3), (3, 4)]))
def test_inverse_property(p, qr):
    m = coxeter_matrix(SchlafliTriple(p, *qr))
    assert np.abs(m.c @ m.hinv - np.eye(4)).max() <= 1e-12


@pytest.mark.parametrize(
    "triple, expected",
    [((7, 3, 4), 1.03799291), ((5, 4, 3), 0.69128565)],
)
def test_truncation_height_tables(triple, expected):
    assert truncation_height(SchlafliTriple(*triple)) == pytest.approx(expected, abs=1e-7)


def test_truncation_height_large_p():
    assert truncation_height(SchlafliTriple(1e6, 4, 3)) < 1e-5


def test_triple_order_is_the_one_matching_tables():
    # the swapped (q, r) order does not reproduce the octahedron row p=5 nor the cube row p=7
    assert abs(truncation_height(SchlafliTriple(5, 3, 4)) - 0.69128565) > 1e-3 if _exists(5, 3, 4) else True
    assert abs(truncation_height(SchlafliTriple(7, 4, 3)) - 1.03799291) > 1e-3


def _exists(*t):
    try:
        truncation_height(SchlafliTriple(*t))
    except GeometryError:
        return False
    return True


@pytest.mark.parametrize(
    "angles, expected",
    [
        ((math.pi / 5, math.pi / 4, math.pi / 3), 0.16596371),
        ((math.pi / 7, math.pi / 3, math.pi / 4), 0.16297337),
    ],
)
def test_volume_tables(angles, expected):
    assert orthoscheme_volume(OrthoschemeAngles(*angles)) == pytest.approx(expected, abs=1e-7)


def test_volume_symmetry_example():
    a = orthoscheme_volume(OrthoschemeAngles(math.pi / 3, math.pi / 4, math.pi / 5))
    b = orthoscheme_volume(OrthoschemeAngles(math.pi / 5, math.pi / 4, math.pi / 3))
    assert a == pytest.approx(b, abs=1e-12)


@given(st.floats(0.05, 0.7), st.floats(0.6, math.pi / 2), st.floats(0.05, 0.7))
def test_volume_symmetric_in_outer_angles(a01, a12, a23):
    if math.cos(a12) ** 2 < math.sin(a01) ** 2 * math.sin(a23) ** 2:
        return
    v1 = orthoscheme_volume(OrthoschemeAngles(a01, a12, a23))
    v2 = orthoscheme_volume(OrthoschemeAngles(a23, a12, a01))
    assert abs(v1 - v2) <= 1e-12


def test_negative_radicand():
    with pytest.raises(GeometryError):
        orthoscheme_volume(OrthoschemeAngles(1.5, 0.2, 1.5))


def test_volume_increasing_in_p():
    v = [orthoscheme_volume(OrthoschemeAngles(math.pi / p, math.pi / 4, math.pi / 3)) for p in range(5, 101)]
    assert all(b > a for a, b in zip(v, v[1:]))
