"""Independent reference computations used only by the tests."""

import math

import numpy as np
from scipy.integrate import quad


def _g(t):
    # log(sin t / (t (pi - t))) is smooth on [0, pi]
    if t <= 0.0 or t >= math.pi:
        return -math.log(math.pi)
    return math.log(math.sin(t) / (t * (math.pi - t)))


def lobachevsky_quad(x):
    """-int_0^x log|2 sin t| dt for 0 <= x <= pi, both log endpoint singularities subtracted."""
    assert 0.0 <= x <= math.pi
    if x == 0.0:
        return 0.0
    pm = math.pi - x
    log_t = x * math.log(x) - x
    log_pi_minus_t = (-(pm * math.log(pm)) if pm > 0 else 0.0) + pm + math.pi * math.log(math.pi) - math.pi
    smooth, _ = quad(_g, 0.0, x, epsabs=1e-13, epsrel=1e-13, limit=200)
    return -(x * math.log(2.0) + log_t + log_pi_minus_t + smooth)


def tridiagonal_det(p, q, r):
    """4x4 Schlaefli determinant expanded by hand."""
    a, b, c = (math.cos(math.pi / k) ** 2 for k in (p, q, r))
    return 1.0 - a - b - c + a * c


def eigen_signs(m):
    ev = np.linalg.eigvals(np.asarray(m))
    return int((ev.real < -1e-10).sum()), int((abs(ev.real) <= 1e-10).sum()), int((ev.real > 1e-10).sum())


def interior_dihedral_cos(u, v):
    """cos of the dihedral angle between face planes with outward poles u, v."""
    b = lambda x, y: -x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3]
    return -b(u, v) / math.sqrt(b(u, u) * b(v, v))


def central_diff(f, x, h=1e-6):
    return (f(x + h) - f(x - h)) / (2.0 * h)


def chebyshev_points(lo, hi, n):
    k = np.arange(n)
    return 0.5 * (lo + hi) + 0.5 * (hi - lo) * np.cos((2 * k + 1) * np.pi / (2 * n))
