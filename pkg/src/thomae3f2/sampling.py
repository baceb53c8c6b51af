"""Seeded uniform sampling of parameter sets inside each identity's validity region.

Regions are bounded boxes so that runs are reproducible and all gamma
arguments stay in the range where double precision is comfortable.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .series import Params2F1, Params3F2

# thomae: a and the excess s drawn directly; b, c free; d + e fixed by s.
THOMAE_A = (0.2, 3.0)
THOMAE_MIN_TRANSFORMED_EXCESS = 0.5  # the transformed excess equals a
EXCESS_RANGE = (0.5, 4.0)
FREE_UPPER = (0.1, 3.0)
MIN_LOWER = 0.2
# kummer: e - c and s drawn directly
KUMMER_E_MINUS_C = (0.5, 4.0)
KUMMER_UPPER = (0.1, 3.0)
# gauss: c - a - b drawn directly
GAUSS_UPPER = (0.1, 3.0)
GAUSS_EXCESS = (0.5, 4.0)
# euler2: any positive lower parameter
EULER_UPPER = (0.1, 2.0)
EULER_LOWER = (0.5, 4.0)
EULER_X = (0.1, 0.3, 0.5, 0.7, 0.9)
# integral representation
INTEGRAL_C = (0.2, 3.0)
INTEGRAL_E_MINUS_C = (0.2, 3.0)
INTEGRAL_EXCESS = (0.5, 3.0)
INTEGRAL_UPPER = (0.1, 3.0)
# proof chain: every stage precondition with margin
CHAIN_A = (0.5, 3.0)
CHAIN_C = (0.2, 3.0)
CHAIN_E_MINUS_C = (0.5, 3.0)
CHAIN_EXCESS = (0.5, 3.0)
CHAIN_D_MINUS_A = (0.2, 3.0)
# beta integral
BETA_RANGE = (0.2, 6.0)
# saalschutz: small rationals p/q
SAAL_NUM = (-9, 9)
SAAL_DEN = (1, 6)
SAAL_MAX_N = 20


def rng(seed: int | None) -> np.random.Generator:
    return np.random.default_rng(seed)


def _u(g, box) -> float:
    return float(g.uniform(*box))


def _split_lower(g, total: float) -> tuple[float, float] | None:
    """Split ``total`` into d + e with both at least MIN_LOWER."""
    if total < 2 * MIN_LOWER:
        return None
    d = _u(g, (MIN_LOWER, total - MIN_LOWER))
    return d, total - d


def sample_thomae(g) -> Params3F2:
    while True:
        a = _u(g, THOMAE_A)
        if a < THOMAE_MIN_TRANSFORMED_EXCESS:
            continue
        b, c = _u(g, FREE_UPPER), _u(g, FREE_UPPER)
        s = _u(g, EXCESS_RANGE)
        de = _split_lower(g, a + b + c + s)
        if de is not None:
            return Params3F2(a, b, c, *de)


def sample_kummer(g) -> Params3F2:
    while True:
        a, b, c = (_u(g, KUMMER_UPPER) for _ in range(3))
        e = c + _u(g, KUMMER_E_MINUS_C)
        s = _u(g, EXCESS_RANGE)
        d = a + b + c + s - e
        if d > MIN_LOWER:
            return Params3F2(a, b, c, d, e)


def sample_gauss(g) -> Params2F1:
    a, b = _u(g, GAUSS_UPPER), _u(g, GAUSS_UPPER)
    return Params2F1(a, b, a + b + _u(g, GAUSS_EXCESS))


def sample_euler2(g) -> Params2F1:
    return Params2F1(_u(g, EULER_UPPER), _u(g, EULER_UPPER), _u(g, EULER_LOWER))


def sample_integral(g) -> Params3F2:
    while True:
        a, b = _u(g, INTEGRAL_UPPER), _u(g, INTEGRAL_UPPER)
        c = _u(g, INTEGRAL_C)
        e = c + _u(g, INTEGRAL_E_MINUS_C)
        d = a + b + c + _u(g, INTEGRAL_EXCESS) - e
        if d > MIN_LOWER:
            return Params3F2(a, b, c, d, e)


def sample_chain(g) -> Params3F2:
    while True:
        a = _u(g, CHAIN_A)
        c = _u(g, CHAIN_C)
        e = c + _u(g, CHAIN_E_MINUS_C)
        d = a + _u(g, CHAIN_D_MINUS_A)
        b = d + e - a - c - _u(g, CHAIN_EXCESS)
        # b may be negative; keep it away from the integers where kernels degenerate
        if b > -0.8 and abs(b - round(b)) > 0.05:
            return Params3F2(a, b, c, d, e)


def sample_beta(g) -> tuple[float, float]:
    return _u(g, BETA_RANGE), _u(g, BETA_RANGE)


def _small_rational(g) -> Fraction:
    return Fraction(int(g.integers(SAAL_NUM[0], SAAL_NUM[1] + 1)), int(g.integers(SAAL_DEN[0], SAAL_DEN[1] + 1)))


def sample_saalschutz(g) -> tuple[Fraction, Fraction, Fraction]:
    """(a, b, c) small rationals; c and c - a - b avoid non-positive integers."""
    while True:
        a, b, c = _small_rational(g), _small_rational(g), _small_rational(g)
        bad = [x for x in (c, c - a - b) if x.denominator == 1 and x <= 0]
        if not bad:
            return a, b, c


SAMPLERS = {
    "thomae": sample_thomae,
    "kummer": sample_kummer,
    "gauss": sample_gauss,
    "euler2": sample_euler2,
    "saalschutz": sample_saalschutz,
    "integral": sample_integral,
    "chain": sample_chain,
    "beta": sample_beta,
}


def sample(identity: str, n: int, seed: int | None) -> list:
    g = rng(seed)
    fn = SAMPLERS[identity]
    return [fn(g) for _ in range(n)]
