import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypack.cell import Family, build
from hypack.errors import DomainError, VariantAbsent
from hypack.optimize import (
    XPolicy,
    maximize,
    maximize_over_p,
    maximize_over_x,
    monotone_profile,
    profile,
)
from hypack.packing import PackingVariant as V, density_at, x_interval

OCT, CUBE = Family.OCTAHEDRON, Family.CUBE


@pytest.mark.parametrize(
    "family, p, variant, arg, value",
    [
        (OCT, 5, V.DELTA1, 0.0, 0.76893),
        (CUBE, 7, V.DELTA3, 0.41108, 0.84931),
        (CUBE, 8, V.DELTA3, 0.45994, 0.82259),
    ],
)
def test_maximize_over_x(family, p, variant, arg, value):
    res = maximize_over_x(build(family, p), variant)
    assert res.arg == pytest.approx(arg, abs=1e-5)
    assert res.value == pytest.approx(value, abs=1e-5)


@pytest.mark.parametrize("family, p, variant, end", [(OCT, 5, V.DELTA1, 0), (CUBE, 7, V.DELTA1, 0), (CUBE, 7, V.DELTA3, 1)])
def test_endpoint_maxima_are_exact(family, p, variant, end):
    cell = build(family, p)
    res = maximize_over_x(cell, variant)
    assert res.arg == x_interval(cell, variant)[end]
    assert res.value == density_at(cell, variant, res.arg)


def test_empty_interval():
    with pytest.raises(VariantAbsent):
        maximize_over_x(build(OCT, 7), V.DELTA2)


@pytest.mark.parametrize(
    "family, variant, policy, rng, p_opt, value, x_opt",
    [
        (OCT, V.CONGRUENT, XPolicy.START, (4, 20), 4.11320, 0.83173, 0.0),
        (CUBE, V.CONGRUENT, XPolicy.START, (6, 20), 6.33962, 0.70427, 0.0),
        (CUBE, V.DELTA3, XPolicy.END, (6, 7), 6.26384, 0.86145, 0.36563),
        (CUBE, V.DELTA2, XPolicy.END, (6, 7), 6.10563, 0.85684, None),
    ],
)
def test_maximize_over_p(family, variant, policy, rng, p_opt, value, x_opt):
    res = maximize_over_p(family, variant, policy, rng)
    assert res.arg == pytest.approx(p_opt, abs=1e-4)
    assert res.value == pytest.approx(value, abs=1e-5)
    if x_opt is not None:
        assert res.x == pytest.approx(x_opt, abs=1e-4)
    lo, hi = res.bracket
    assert lo <= res.arg <= hi


def test_delta3_end_x_is_s_minus_h():
    res = maximize_over_p(CUBE, V.DELTA3, XPolicy.END, (6, 7))
    c = build(CUBE, res.arg)
    assert res.x == pytest.approx(c.s - c.h, abs=1e-12)


def test_absent_everywhere_on_range():
    with pytest.raises(DomainError, match="absent"):
        maximize_over_p(CUBE, V.DELTA2, XPolicy.START, (8.5, 9))


def test_range_below_bound():
    with pytest.raises(DomainError, match="admissible"):
        maximize_over_p(CUBE, V.CONGRUENT, XPolicy.START, (3, 5))


def test_deterministic():
    a = maximize_over_p(CUBE, V.DELTA3, XPolicy.END, (6, 7))
    b = maximize_over_p(CUBE, V.DELTA3, XPolicy.END, (6, 7))
    assert a == b


def test_result_value_is_objective_at_arg():
    res = maximize_over_p(OCT, V.CONGRUENT, XPolicy.START, (4, 20))
    assert abs(res.value - density_at(build(OCT, res.arg), V.CONGRUENT)) <= 1e-13


@settings(max_examples=50, deadline=None)
@given(st.floats(-3.0, 3.0), st.floats(0.1, 5.0))
def test_bracket_validity_interior(centre, width):
    f = lambda x: -((x - centre) ** 2)  # noqa: E731
    res = maximize(f, -4.0, 4.0)
    assert res.arg == pytest.approx(centre, abs=1e-6)
    assert res.tol <= 1e-10
    # equality up to re-evaluation noise; a quadratic peak is flat at this scale
    assert f(res.arg) >= max(f(res.arg + res.tol), f(res.arg - res.tol)) - 1e-13


@pytest.mark.parametrize("p", [6.1, 6.3, 6.6])
def test_bracket_validity_on_free_delta2(p):
    cell = build(CUBE, p)
    res = maximize_over_x(cell, V.DELTA2)
    f = lambda x: density_at(cell, V.DELTA2, x)  # noqa: E731
    lo, hi = x_interval(cell, V.DELTA2)
    for x in (res.arg - res.tol, res.arg + res.tol):
        if lo <= x <= hi:
            assert f(res.arg) >= f(x) - 1e-13


@given(st.floats(1e-6, 5.0), st.booleans())
def test_monotone_objective_hits_endpoint(slope, up):
    slope = slope if up else -slope
    res = maximize(lambda x: slope * x, 1.0, 2.0)
    assert res.arg == (2.0 if slope > 0 else 1.0)


def test_grid_ties_go_left():
    res = maximize(lambda x: 1.0, 0.0, 1.0)
    assert res.arg == 0.0


def test_nan_objective_is_partial():
    res = maximize(lambda x: math.nan if x < 0.5 else -x, 0.0, 1.0)
    assert res.arg == pytest.approx(0.5, abs=1e-3)
    with pytest.raises(DomainError):
        maximize(lambda x: math.nan, 0.0, 1.0)


@pytest.mark.parametrize(
    "family, lo, p_opt",
    [(OCT, 4.05, 4.11320), (CUBE, 6.05, 6.33962)],
)
def test_profile_single_turn(family, lo, p_opt):
    prof = monotone_profile(family, V.CONGRUENT, XPolicy.START, (lo, 10), 512)
    assert prof.sign_changes == 1
    assert prof.turning_points[0] == pytest.approx(p_opt, abs=1e-2)
    assert [s[2] for s in prof.segments] == ["increasing", "decreasing"]


def test_profile_tail_decreasing():
    prof = monotone_profile(OCT, V.CONGRUENT, XPolicy.START, (4.12, 100), 256)
    assert [s[2] for s in prof.segments] == ["decreasing"]


def test_profile_constant():
    prof = profile(lambda x: 0.5, 0.0, 1.0, 16)
    assert prof.sign_changes == 0
    with pytest.raises(DomainError):
        profile(lambda x: x, 0.0, 1.0, 2)


def test_global_cube_maximum_over_integer_p():
    best = None
    for p in range(7, 51):
        cell = build(CUBE, p)
        for v in (V.DELTA1, V.DELTA2, V.DELTA3):
            try:
                res = maximize_over_x(cell, v)
            except VariantAbsent:
                continue
            if best is None or res.value > best[0]:
                best = (res.value, v, p, res.arg, cell)
    value, v, p, x, cell = best
    assert (v, p) == (V.DELTA3, 7)
    assert x == pytest.approx(cell.s - cell.h, abs=1e-12)
    assert value == pytest.approx(0.84931, abs=1e-5)
