"""Term-recurrence summation of 2F1(x) and 3F2(1).

Both series are summed through the ratio t_{n+1}/t_n, in numpy chunks.  At
unit argument the terms decay like n^(-1-s) with s the parametric excess,
which makes plain truncation slow; ``tail_correction=True`` adds an
asymptotic estimate of the neglected tail (see :func:`_asymptotic_tail`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.special import bernoulli, zeta

from .arith import is_nonpositive_integer
from .errors import (
    DivergenceError,
    DomainError,
    LowerPoleError,
    MaxTermsExceeded,
    PreconditionError,
    SlowConvergenceError,
)

MIN_UNIT_EXCESS = 0.05
DEFAULT_MAX_TERMS = 2_000_000

_CHUNK0 = 64
_CHUNK_MAX = 1 << 16
_ASYM_ORDER = 12
_ASYM_MIN_INDEX = 32
_BERNOULLI = bernoulli(_ASYM_ORDER + 1)


@dataclass(frozen=True)
class Params2F1:
    a: float
    b: float
    c: float

    @property
    def upper(self) -> tuple:
        return (self.a, self.b)

    @property
    def lower(self) -> tuple:
        return (self.c,)

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class Params3F2:
    """Parameters of 3F2(a, b, c; d, e; 1), upper first."""

    a: float
    b: float
    c: float
    d: float
    e: float

    @classmethod
    def from_sequence(cls, values: Sequence) -> "Params3F2":
        if len(values) != 5:
            raise ValueError(f"expected 5 parameters (a, b, c, d, e), got {len(values)}")
        return cls(*values)

    @property
    def upper(self) -> tuple:
        return (self.a, self.b, self.c)

    @property
    def lower(self) -> tuple:
        return (self.d, self.e)

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.c, self.d, self.e)


@dataclass(frozen=True)
class Tolerance:
    rel: float = 1e-12
    abs: float = 0.0
    max_terms: int = DEFAULT_MAX_TERMS

    def __post_init__(self):
        if not self.rel >= 1e-15:
            raise ValueError(f"relative tolerance {self.rel!r} is below double precision resolution")
        if not self.abs >= 0:
            raise ValueError("absolute tolerance must be >= 0")
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise ValueError("max_terms must be a positive integer")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class SeriesResult:
    """Outcome of a summation.

    ``tail_bound`` estimates the absolute error still present in ``value``:
    the neglected tail for plain truncation, or the error of the tail
    estimate when ``tail_corrected`` is set.
    """

    value: float
    terms_used: int
    tail_bound: float
    converged: bool
    terminated_exactly: bool
    tail_corrected: bool = False

    def check(self) -> "SeriesResult":
        if not self.converged:
            raise MaxTermsExceeded(self)
        return self


def excess_3f2(p: Params3F2) -> float:
    return p.d + p.e - p.a - p.b - p.c


def excess_2f1(p: Params2F1) -> float:
    return p.c - p.a - p.b


def termination_index(upper) -> int | None:
    """Index of the last nonzero term if an upper parameter is 0, -1, -2, ..."""
    idx = [int(-float(u)) for u in upper if is_nonpositive_integer(u)]
    return min(idx) if idx else None


def check_lower(lower, stop: int | None) -> None:
    """Raise LowerPoleError if a lower Pochhammer vanishes at or before ``stop``."""
    bad = []
    for low in lower:
        if is_nonpositive_integer(low):
            first = int(-float(low)) + 1
            if stop is None or stop >= first:
                bad.append((first, low))
    if bad:
        first, low = min(bad, key=lambda t: t[0])
        raise LowerPoleError(low, first)


def _trim(coeffs: np.ndarray) -> np.ndarray:
    coeffs = np.atleast_1d(coeffs)
    scale = np.max(np.abs(coeffs)) if coeffs.size else 0.0
    if scale == 0:
        return np.zeros(1)
    nz = np.nonzero(np.abs(coeffs) > 1e-12 * scale)[0]
    return coeffs[nz[0]:]


def _real_roots(coeffs) -> list[float]:
    coeffs = _trim(np.asarray(coeffs, dtype=float))
    if coeffs.size < 2:
        return []
    roots = np.roots(coeffs)
    return [r.real for r in roots if abs(r.imag) <= 1e-7 * max(1.0, abs(r))]


def regime_index(upper, lower, unit: bool) -> int:
    """First index from which the term ratio is monotone in n (and, at x = 1, below 1).

    With P(n) = prod(n + u) and Q(n) = (n + 1) prod(n + l) the term ratio is
    x P(n)/Q(n).  Beyond every real root of P'Q - PQ', of Q - P (unit
    argument) and of P, Q themselves, both properties hold for all larger n.
    """
    p = np.poly([-float(u) for u in upper]) if len(upper) else np.array([1.0])
    q = np.poly([-float(v) for v in lower] + [-1.0])
    cands = [0.0]
    cands += [-float(u) for u in upper] + [-float(v) for v in lower]
    dp, dq = np.polyder(p), np.polyder(q)
    cands += _real_roots(np.polysub(np.polymul(dp, q), np.polymul(p, dq)))
    if unit:
        cands += _real_roots(np.polysub(q, p))
    return max(0, math.floor(max(cands)) + 1)


def _bernoulli_poly(m: int, h: float) -> float:
    return math.fsum(math.comb(m, j) * _BERNOULLI[j] * h ** (m - j) for j in range(m + 1))


def _asymptotic_tail(upper, lower1, n: int, t_n: float, s: float, order: int = _ASYM_ORDER):
    """Estimate sum_{m > n} t_m for a unit-argument series; returns (estimate, error).

    The term is a gamma ratio K * prod G(m+u) / prod G(m+l).  Its Stirling
    expansion is m^(-1-s) * sum_k c_k m^(-k); each power is summed exactly
    with the Hurwitz zeta function and K is fixed from the known term t_n.
    """
    beta = []
    for k in range(1, order + 1):
        diff = math.fsum(_bernoulli_poly(k + 1, float(h)) for h in upper) - math.fsum(
            _bernoulli_poly(k + 1, float(h)) for h in lower1
        )
        beta.append((-1) ** (k + 1) * diff / (k * (k + 1)))
    coef = [1.0]
    for m in range(1, order + 1):
        coef.append(math.fsum(k * beta[k - 1] * coef[m - k] for k in range(1, m + 1)) / m)
    coef = np.array(coef)
    powers = float(n) ** -np.arange(order + 1, dtype=float)
    g_n = float(n) ** (-1.0 - s) * math.fsum(coef * powers)
    scale = t_n / g_n
    pieces = coef * zeta(1.0 + s + np.arange(order + 1), n + 1.0)
    est = scale * math.fsum(pieces)
    err = abs(scale) * (abs(pieces[-1]) + abs(pieces[-2])) + abs(est) * abs(coef[-1] * powers[-1])
    return float(est), float(err)


def _sum_terminating(upper, lower, x, m) -> float:
    terms = [1.0]
    t = 1.0
    for n in range(m):
        t *= x * math.prod(n + float(u) for u in upper) / (math.prod(n + float(v) for v in lower) * (n + 1))
        terms.append(t)
    return math.fsum(terms)


def sum_hypergeometric(upper, lower, x: float, tol: Tolerance = DEFAULT_TOL,
                       tail_correction: bool = False) -> SeriesResult:
    """Sum pFq(upper; lower; x) with p = q + 1 and 0 <= x <= 1.

    Plain truncation stops at the first index n in the monotone regime where
    the last three terms decreased and the tail estimate is below
    ``max(tol.abs, tol.rel * |partial sum|)``.  The tail estimate is
    ``|t_n| rho / (1 - rho)`` for x < 1 and ``|t_n| (n + 1) / s`` at x = 1.
    """
    upper = tuple(upper)
    lower = tuple(lower)
    if len(upper) != len(lower) + 1:
        raise ValueError("only p = q + 1 series are supported")
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"argument x = {x!r} outside [0, 1]", condition="0 <= x <= 1")

    stop = termination_index(upper)
    check_lower(lower, stop)
    if stop is not None:
        return SeriesResult(_sum_terminating(upper, lower, x, stop), stop + 1, 0.0, True, True)
    if x == 0.0:
        return SeriesResult(1.0, 1, 0.0, True, False)

    unit = x == 1.0
    s = math.fsum(float(v) for v in lower) - math.fsum(float(u) for u in upper)
    if unit:
        if s <= 0:
            raise DivergenceError(
                f"series diverges at unit argument: excess {s:.6g} <= 0", condition="excess > 0"
            )
        if s < MIN_UNIT_EXCESS:
            raise SlowConvergenceError(
                f"excess {s:.6g} < {MIN_UNIT_EXCESS}; use choose_representation to rewrite first",
                condition=f"excess >= {MIN_UNIT_EXCESS}",
            )
    corrected = tail_correction and unit
    n_reg = regime_index(upper, lower, unit)

    up = np.array([float(u) for u in upper])
    lo = np.array([float(v) for v in lower])
    lower1 = tuple(lower) + (1.0,)

    def ratio(idx):
        return x * np.prod(idx[:, None] + up, axis=1) / (np.prod(idx[:, None] + lo, axis=1) * (idx + 1.0))

    chunk_sums = [1.0]
    total = 1.0
    recent = np.array([np.nan, np.nan, 1.0])
    t_last, n_last = 1.0, 0
    size = _CHUNK0
    bound_last = math.inf

    while n_last < tol.max_terms - 1:
        k = min(size, tol.max_terms - 1 - n_last)
        idx = np.arange(n_last, n_last + k, dtype=float)
        terms = t_last * np.cumprod(ratio(idx))
        ns = idx + 1.0
        mags = np.abs(terms)
        hist = np.concatenate([recent, mags])
        dec = (hist[1:] < hist[:-1]) | (hist[1:] == 0)
        three = dec[:-2] & dec[1:-1] & dec[2:]
        ok = three & (ns >= n_reg)
        partial = total + np.cumsum(terms)
        thr = np.maximum(tol.abs, tol.rel * np.abs(partial))

        if corrected:
            j = k - 1
            if ok[j] and ns[j] >= _ASYM_MIN_INDEX:
                est, err = _asymptotic_tail(upper, lower1, int(ns[j]), float(terms[j]), s)
                bound_last = err
                if err <= thr[j]:
                    value = math.fsum(chunk_sums + [math.fsum(terms)]) + est
                    return SeriesResult(value, int(ns[j]) + 1, err, True, False, True)
        else:
            if unit:
                bound = mags * (ns + 1.0) / s
            else:
                rho = np.maximum(np.abs(ratio(ns)), x)
                with np.errstate(divide="ignore"):
                    bound = np.where(rho < 1.0, mags * rho / (1.0 - rho), np.inf)
            hit = ok & (bound <= thr)
            if hit.any():
                j = int(np.argmax(hit))
                value = math.fsum(chunk_sums + [math.fsum(terms[: j + 1])])
                return SeriesResult(value, int(ns[j]) + 1, float(bound[j]), True, False)
            bound_last = float(bound[-1])

        chunk_sums.append(math.fsum(terms))
        total = math.fsum(chunk_sums)
        recent = hist[-3:]
        t_last = float(terms[-1])
        n_last += k
        size = min(2 * size, _CHUNK_MAX)

    value = math.fsum(chunk_sums)
    if corrected and n_last >= 1:
        est, err = _asymptotic_tail(upper, lower1, n_last, t_last, s)
        return SeriesResult(value + est, n_last + 1, err, False, False, True)
    return SeriesResult(value, n_last + 1, bound_last, False, False)


def sum_2f1(p: Params2F1, x: float, tol: Tolerance = DEFAULT_TOL,
            tail_correction: bool = False) -> SeriesResult:
    """2F1(a, b; c; x) for 0 <= x <= 1 by direct summation.

    At x = 1 the series needs c - a - b > 0 unless it terminates.
    """
    return sum_hypergeometric(p.upper, p.lower, x, tol, tail_correction)


def sum_3f2_unit(p: Params3F2, tol: Tolerance = DEFAULT_TOL,
                 tail_correction: bool = False) -> SeriesResult:
    """3F2(a, b, c; d, e; 1).

    Raises DivergenceError for excess <= 0, SlowConvergenceError below
    ``MIN_UNIT_EXCESS``, LowerPoleError when d or e is a pole reached
    before termination.
    """
    return sum_hypergeometric(p.upper, p.lower, 1.0, tol, tail_correction)


def sum_3f2_terminating_exact(p: Params3F2, n: int) -> Fraction:
    """Exact value of a terminating 3F2(1) whose upper list contains -n."""
    upper = [Fraction(u) for u in p.upper]
    lower = [Fraction(v) for v in p.lower]
    if n < 0 or Fraction(-n) not in upper:
        raise PreconditionError(f"no upper parameter equals -{n}", condition=f"upper contains -{n}")
    total = Fraction(1)
    t = Fraction(1)
    for k in range(n):
        num = math.prod(u + k for u in upper)
        if num == 0:
            break
        den = math.prod(v + k for v in lower)
        if den == 0:
            bad = next(v for v in lower if v + k == 0)
            raise LowerPoleError(bad, k + 1)
        t = t * num / (den * (k + 1))
        total += t
    return total
