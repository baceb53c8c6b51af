"""Two-term transformations as data, plus the Gauss and Saalschütz closed forms.

A transformation is a gamma-ratio prefactor together with a new parameter
set; nothing is evaluated until :meth:`Transformed3F2.evaluate` is called.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import GammaRatio, is_nonpositive_integer, pochhammer_rational
from .errors import (
    LowerPoleError,
    NoValidRepresentationError,
    PoleError,
    PreconditionError,
    ZeroDenominatorError,
)
from .series import (
    DEFAULT_TOL,
    Params2F1,
    Params3F2,
    Tolerance,
    check_lower,
    excess_2f1,
    excess_3f2,
    sum_2f1,
    sum_3f2_unit,
    termination_index,
)

# tie-break order: earlier wins
REPRESENTATIONS = ("identity", "kummer", "thomae")


@dataclass(frozen=True)
class Transformed3F2:
    prefactor: GammaRatio
    params: Params3F2
    name: str

    @property
    def excess(self) -> float:
        return excess_3f2(self.params)

    def evaluate(self, tol: Tolerance = DEFAULT_TOL, tail_correction: bool = True) -> float:
        series = sum_3f2_unit(self.params, tol, tail_correction)
        return self.prefactor.evaluate() * series.value


@dataclass(frozen=True)
class Transformed2F1:
    power_exponent: float
    params: Params2F1

    def evaluate(self, x: float, tol: Tolerance = DEFAULT_TOL) -> float:
        return (1.0 - x) ** self.power_exponent * sum_2f1(self.params, x, tol).value


def _require(ok: bool, condition: str, detail: str) -> None:
    if not ok:
        raise PreconditionError(f"precondition {condition} violated ({detail})", condition=condition)


def _no_poles(ratio: GammaRatio) -> GammaRatio:
    poles = ratio.poles()
    if poles:
        raise PoleError(poles[0], f"prefactor has a gamma pole at {poles[0]!r}")
    return ratio


def identity_map(p: Params3F2) -> Transformed3F2:
    stop = termination_index(p.upper)
    check_lower(p.lower, stop)
    if stop is None:
        s = excess_3f2(p)
        _require(s > 0, "d+e-a-b-c > 0", f"excess = {s:.15g}")
    return Transformed3F2(GammaRatio(), p, "identity")


def thomae_map(p: Params3F2) -> Transformed3F2:
    a, b, c, d, e = p.as_tuple()
    s = excess_3f2(p)
    _require(a > 0, "a > 0", f"a = {a:.15g}")
    _require(s > 0, "d+e-a-b-c > 0", f"excess = {s:.15g}")
    prefactor = _no_poles(GammaRatio((d, e, s), (a, d + e - a - b, d + e - a - c)))
    params = Params3F2(d - a, e - a, s, d + e - a - b, d + e - a - c)
    return Transformed3F2(prefactor, params, "thomae")


def kummer_map(p: Params3F2) -> Transformed3F2:
    a, b, c, d, e = p.as_tuple()
    s = excess_3f2(p)
    _require(e - c > 0, "e-c > 0", f"e-c = {e - c:.15g}")
    _require(s > 0, "d+e-a-b-c > 0", f"excess = {s:.15g}")
    prefactor = _no_poles(GammaRatio((e, s), (e - c, d + e - a - b)))
    params = Params3F2(d - a, d - b, c, d, d + e - a - b)
    try:
        check_lower(params.lower, termination_index(params.upper))
    except LowerPoleError as exc:
        raise PoleError(exc.argument, f"transformed lower parameter {exc.argument!r} is a pole") from exc
    return Transformed3F2(prefactor, params, "kummer")


def euler_second_map(p: Params2F1) -> Transformed2F1:
    """2F1(a, b; c; x) = (1-x)^(c-a-b) 2F1(c-a, c-b; c; x)."""
    a, b, c = p.as_tuple()
    if is_nonpositive_integer(c):
        raise LowerPoleError(c, int(-float(c)) + 1)
    return Transformed2F1(c - a - b, Params2F1(c - a, c - b, c))


def gauss_sum(p: Params2F1) -> float:
    """Closed form of 2F1(a, b; c; 1) = G(c) G(c-a-b) / (G(c-a) G(c-b))."""
    a, b, c = p.as_tuple()
    m = excess_2f1(p)
    _require(m > 0, "c-a-b > 0", f"c-a-b = {m:.15g}")
    return _no_poles(GammaRatio((c, m), (c - a, c - b))).evaluate()


def saalschutz_params(n: int, a, b, c) -> Params3F2:
    """The balanced terminating set (-n, a, b; c, 1+a+b-c-n)."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    return Params3F2(Fraction(-n), a, b, c, 1 + a + b - c - n)


def saalschutz_sum(n: int, a, b, c) -> Fraction:
    """Exact right-hand side (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    den = pochhammer_rational(c, n) * pochhammer_rational(c - a - b, n)
    if den == 0:
        raise ZeroDenominatorError(
            f"(c)_n (c-a-b)_n vanishes for n = {n}, a = {a}, b = {b}, c = {c}",
            condition="(c)_n (c-a-b)_n != 0",
        )
    return pochhammer_rational(c - a, n) * pochhammer_rational(c - b, n) / den


def canonical_3f2(p: Params3F2) -> tuple:
    """Sorted (upper, lower) lists; equal for parameter sets defining the same series."""
    return tuple(sorted(p.upper)), tuple(sorted(p.lower))


def same_series(p: Params3F2, q: Params3F2) -> bool:
    return canonical_3f2(p) == canonical_3f2(q)


def candidate_excess(p: Params3F2, name: str) -> float:
    """Excess of the transformed series, from the exact algebraic identities."""
    if name == "identity":
        return excess_3f2(p)
    if name == "kummer":
        return p.e - p.c
    if name == "thomae":
        return p.a
    raise ValueError(f"unknown representation {name!r}")


_MAPS = {"identity": identity_map, "kummer": kummer_map, "thomae": thomae_map}


def representation_candidates(p: Params3F2) -> list[Transformed3F2]:
    out = []
    for name in REPRESENTATIONS:
        try:
            out.append(_MAPS[name](p))
        except PreconditionError:
            continue
    return out


def choose_representation(p: Params3F2) -> Transformed3F2:
    """Pick the valid representation with the largest excess (fastest term decay).

    Ties resolve in the order identity, kummer, thomae.
    """
    best, best_excess = None, None
    for cand in representation_candidates(p):
        x = candidate_excess(p, cand.name)
        if best is None or x > best_excess + 1e-12:
            best, best_excess = cand, x
    if best is None:
        raise NoValidRepresentationError(
            f"no valid representation: excess {excess_3f2(p):.15g} and neither map applies",
            condition="excess > 0 or a > 0 or e-c > 0",
        )
    return best
