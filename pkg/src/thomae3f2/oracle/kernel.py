"""2F1(a, b; c; x) at quadrature nodes, including nodes crowded against x = 1.

Quadrature nodes reach 1 - x ~ 1e-300, where the defining series is useless.
For x > 1/2 the function is rebuilt from series in z = 1 - x:

* m = c - a - b not an integer: the two-term connection formula, returned as
  two components so that the z^m factor can be folded into the quadrature
  weight in log space (m < 0 would otherwise overflow);
* m a non-negative integer: the logarithmic limit of that formula;
* m a negative integer: Euler's transformation first, which flips the sign of m;
* m within ``NEAR_INTEGER`` of an integer: five-point interpolation in c
  through the integer point and points where the connection formula is well
  conditioned.

Every evaluator returns a list of ``(power, values)`` with
``F(x) = sum(z**power * values)``.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import digamma

from ..arith import is_nonpositive_integer, log_gamma_signed, reciprocal_gamma
from ..errors import LowerPoleError
from ..series import check_lower, regime_index, termination_index

SPLIT = 0.5
NEAR_INTEGER = 1e-4
_EPS = 2.0 ** -56
_MAX_TERMS = 100_000


def series_vec(upper, lower, x, max_terms: int = _MAX_TERMS) -> np.ndarray:
    """Direct pFq (p = q + 1) series evaluated at every point of ``x`` (|x| < 1)."""
    x = np.asarray(x, dtype=float)
    total = np.ones_like(x)
    if x.size == 0:
        return total
    upper = [float(u) for u in upper]
    lower = [float(v) for v in lower]
    stop = termination_index(upper)
    check_lower(lower, stop)
    limit = stop if stop is not None else max_terms
    n_reg = regime_index(upper, lower, unit=False)
    ax = np.abs(x)
    term = np.ones_like(x)
    for n in range(limit):
        r = math.prod(n + u for u in upper) / (math.prod(n + v for v in lower) * (n + 1))
        term = term * (r * x)
        total = total + term
        if stop is None and n + 1 >= n_reg:
            k = n + 1
            q = abs(math.prod(k + u for u in upper) / (math.prod(k + v for v in lower) * (k + 1)))
            rho = ax * max(q, 1.0)
            if np.all(rho < 1) and np.all(np.abs(term) * rho / (1 - rho) <= _EPS * np.abs(total) + 1e-300):
                break
    return total


def _log_gamma_product(args) -> tuple[float, int]:
    lm, sign = 0.0, 1
    for x in args:
        v = log_gamma_signed(x)
        lm += v.log_magnitude
        sign *= v.sign
    return lm, sign


def _connection_general(a, b, c, z, max_terms=_MAX_TERMS):
    """Non-integer m: F = A F(a,b;1-m;z) + z^m B F(c-a,c-b;1+m;z)."""
    m = c - a - b
    lm, sg = _log_gamma_product([c, m])
    coef_a = sg * math.exp(lm) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b)
    lm, sg = _log_gamma_product([c, -m])
    coef_b = sg * math.exp(lm) * reciprocal_gamma(a) * reciprocal_gamma(b)
    parts = []
    if coef_a != 0:
        parts.append((0.0, coef_a * series_vec([a, b], [1 - m], z, max_terms)))
    if coef_b != 0:
        parts.append((m, coef_b * series_vec([c - a, c - b], [1 + m], z, max_terms)))
    return parts


def _connection_log(a, b, m: int, z, log_z, max_terms=_MAX_TERMS):
    """Integer m >= 0 (a, b not non-positive integers); returns the value of F."""
    c = a + b + m
    z = np.asarray(z, dtype=float)
    head = np.zeros_like(z)
    if m > 0:
        coef = math.gamma(m) * math.gamma(c) * reciprocal_gamma(a + m) * reciprocal_gamma(b + m)
        t = np.ones_like(z)
        acc = np.ones_like(z)
        for n in range(1, m):
            t = t * ((a + n - 1) * (b + n - 1) / (n * (n - m))) * z
            acc = acc + t
        head = coef * acc

    lm, sg = _log_gamma_product([c])
    pref = (-1) ** m * sg * math.exp(lm) * reciprocal_gamma(a) * reciprocal_gamma(b)
    w = 1.0 / math.factorial(m)
    zn = np.ones_like(z)
    acc = np.zeros_like(z)
    quiet = 0
    for n in range(max_terms):
        if n > 0:
            w *= (a + m + n - 1) * (b + m + n - 1) / (n * (n + m))
            zn = zn * z
        psi = -digamma(n + 1.0) - digamma(n + m + 1.0) + digamma(a + n + m) + digamma(b + n + m)
        acc = acc + w * zn * (log_z + psi)
        size = np.abs(w * zn) * (np.abs(log_z) + abs(psi))
        quiet = quiet + 1 if np.all(size <= _EPS * (np.abs(acc) + np.abs(head)) + 1e-300) else 0
        if quiet >= 3:
            break
    return head - pref * z**m * acc


def _near_one(a, b, c, x, z, log_z, max_terms=_MAX_TERMS):
    m = c - a - b
    mi = round(m)
    eps = m - mi
    if mi < 0 or (mi == 0 and eps < 0):
        if eps == 0 or abs(eps) < NEAR_INTEGER:
            # Euler: F = z^m F(c-a, c-b; c; x), whose own excess is -m > 0
            if termination_index([c - a, c - b]) is not None:
                return [(m, series_vec([c - a, c - b], [c], x, max_terms))]
            return [(m, _combined(_near_one(c - a, c - b, c, x, z, log_z, max_terms), z, log_z))]
    if eps == 0:
        return [(0.0, _connection_log(a, b, mi, z, log_z, max_terms))]
    if abs(eps) < NEAR_INTEGER:
        return [(0.0, _interpolate_in_c(a, b, c, mi, eps, z, log_z, max_terms))]
    return _connection_general(a, b, c, z, max_terms)


def _combined(parts, z, log_z):
    out = np.zeros_like(np.asarray(z, dtype=float))
    for power, values in parts:
        out = out + np.exp(power * log_z) * values
    return out


def _interpolate_in_c(a, b, c, mi, eps, z, log_z, max_terms=_MAX_TERMS):
    """Lagrange interpolation in m = c - a - b through m = mi (exact) and mi +- h, +- 2h."""
    h = 2 * NEAR_INTEGER
    offsets = [-2 * h, -h, 0.0, h, 2 * h]
    values = [
        _connection_log(a, b, mi, z, log_z, max_terms) if off == 0.0
        else _combined(_connection_general(a, b, a + b + mi + off, z, max_terms), z, log_z)
        for off in offsets
    ]
    out = np.zeros_like(np.asarray(z, dtype=float))
    for i, off in enumerate(offsets):
        weight = 1.0
        for j, other in enumerate(offsets):
            if j != i:
                weight *= (eps - other) / (off - other)
        out = out + weight * values[i]
    return out


def hyp2f1_parts(a, b, c, x, z, log_z=None, max_terms: int = _MAX_TERMS):
    """``[(power, values)]`` with 2F1(a, b; c; x) = sum z**power * values.

    ``z`` must be 1 - x computed without cancellation (the quadrature supplies
    it directly).  0 <= x < 1.
    """
    a, b, c = float(a), float(b), float(c)
    x = np.asarray(x, dtype=float)
    z = np.asarray(z, dtype=float)
    if log_z is None:
        with np.errstate(divide="ignore"):
            log_z = np.log(z)
    log_z = np.asarray(log_z, dtype=float)
    if is_nonpositive_integer(c) and termination_index([a, b]) is None:
        raise LowerPoleError(c, int(-c) + 1)
    if termination_index([a, b]) is not None:
        return [(0.0, series_vec([a, b], [c], x, max_terms))]

    lo = x <= SPLIT
    if lo.all():
        return [(0.0, series_vec([a, b], [c], x, max_terms))]
    low_vals = np.zeros_like(x)
    low_vals[lo] = series_vec([a, b], [c], x[lo], max_terms)
    parts = [(0.0, low_vals)]
    hi = ~lo
    for power, values in _near_one(a, b, c, x[hi], z[hi], log_z[hi], max_terms):
        full = np.zeros_like(x)
        full[hi] = values
        parts.append((power, full))
    return parts


def min_power(a, b, c) -> float:
    """Most negative z-power that :func:`hyp2f1_parts` can return."""
    if termination_index([a, b]) is not None:
        return 0.0
    return min(0.0, float(c) - float(a) - float(b))


def hyp2f1(a, b, c, x) -> np.ndarray:
    """Convenience evaluation for 0 <= x < 1 (1 - x formed by subtraction)."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    z = 1.0 - x
    with np.errstate(divide="ignore"):
        log_z = np.log(z)
    return _combined(hyp2f1_parts(a, b, c, x, z, log_z), z, log_z)
