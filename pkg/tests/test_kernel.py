"""2F1 at quadrature nodes, including 1 - x down to 1e-100, against mpmath."""

import math

import mpmath
import numpy as np
import pytest

from thomae3f2.errors import LowerPoleError
from thomae3f2.oracle.kernel import NEAR_INTEGER, hyp2f1, hyp2f1_parts, min_power, series_vec

Z = np.array([0.9, 0.6, 0.3, 1e-2, 1e-5, 1e-10, 1e-30, 1e-100])


def combined_at(a, b, c, z):
    x = 1.0 - z
    log_z = np.log(z)
    parts = hyp2f1_parts(a, b, c, x, z, log_z)
    return sum(np.exp(p * log_z) * v for p, v in parts)


def reference(a, b, c, z):
    # 1 - z must be exact at the working precision
    with mpmath.workdps(130):
        return float(mpmath.hyp2f1(a, b, c, 1 - mpmath.mpf(z)))


CASES = [
    (0.5, 0.6, 2.0),  # m = 0.9
    (1.5, 1.4, 2.0),  # m = -0.9
    (1.0, 1.0, 2.0),  # m = 0
    (0.3, 0.7, 3.0),  # m = 2
    (1.2, 0.8, 1.0),  # m = -1
    (2.3, 1.7, 1.0),  # m = -3
    (0.4, 0.6, 1.0 + 3e-5),  # m near 0
    (0.4, 0.6, 3.0 - 5e-5),  # m near 2
    (1.1, 1.9, 2.0 + 2e-5),  # m near -1
    (-0.3, 0.8, 1.7),  # negative a
]


@pytest.mark.parametrize("a,b,c", CASES)
def test_kernel_against_mpmath(a, b, c):
    got = combined_at(a, b, c, Z)
    for z, g in zip(Z, got):
        ref = reference(a, b, c, z)
        if not math.isfinite(ref) or not math.isfinite(g):
            continue
        tol = 1e-12 if abs(c - a - b - round(c - a - b)) >= NEAR_INTEGER or c - a - b == round(c - a - b) else 1e-9
        assert abs(g - ref) <= tol * max(1.0, abs(ref)), (z, g, ref)


def test_singular_growth_stays_in_power_part():
    # m < 0: the largest value is carried by a z**m component, not overflowed
    parts = hyp2f1_parts(1.5, 1.4, 2.0, np.array([1 - 1e-300]), np.array([1e-300]))
    assert all(np.all(np.isfinite(v)) for _, v in parts)
    assert min(p for p, _ in parts) == pytest.approx(-0.9)
    assert min_power(1.5, 1.4, 2.0) == pytest.approx(-0.9)
    assert min_power(0.5, 0.6, 2.0) == 0.0


def test_terminating_kernel_is_polynomial():
    x = np.linspace(0, 0.99, 7)
    got = hyp2f1(-2, 3, 4, x)
    want = 1 + (-2 * 3 / 4) * x + (-2 * -1 * 3 * 4 / (4 * 5 * 2)) * x**2
    assert np.allclose(got, want, rtol=1e-14, atol=1e-15)
    assert min_power(-2, 3, 4) == 0.0


def test_lower_pole():
    with pytest.raises(LowerPoleError):
        hyp2f1_parts(0.5, 0.5, -1, np.array([0.2]), np.array([0.8]))


def test_series_vec_small_x():
    x = np.array([0.0, 0.1, 0.4])
    ref = [float(mpmath.hyp2f1(0.3, 0.4, 1.5, v)) for v in x]
    assert np.allclose(series_vec([0.3, 0.4], [1.5], x), ref, rtol=1e-15)
