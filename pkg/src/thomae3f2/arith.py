"""Signed log-gamma, rising factorials and symbolic gamma ratios.

Gamma values are handled as (log|v|, sign) pairs so that the six-gamma
prefactors of the two-term transformations never overflow.  Exact rational
work uses :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import PoleError

Rational = Fraction


def is_nonpositive_integer(x) -> bool:
    if isinstance(x, Fraction):
        return x <= 0 and x.denominator == 1
    x = float(x)
    return x <= 0 and x.is_integer()


@dataclass(frozen=True)
class SignedLogValue:
    """A real number stored as ``sign * exp(log_magnitude + log_residual)``.

    ``sign == 0`` flags an exact zero; ``log_magnitude`` is then meaningless.
    ``log_residual`` is a tiny correction holding the rounding error of
    ``log_magnitude``; near |log| ~ 700 that error alone would cost ~1e-13
    relative accuracy on the way back.
    """

    log_magnitude: float
    sign: int
    log_residual: float = 0.0

    @classmethod
    def from_float(cls, v: float) -> "SignedLogValue":
        if v == 0:
            return cls(-math.inf, 0)
        lm = math.log(abs(v))
        # exp(lm) is reproducible, so the ratio to it recovers the lost bits
        return cls(lm, 1 if v > 0 else -1, math.log1p(abs(v) / math.exp(lm) - 1.0))

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def value(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_magnitude) * math.exp(self.log_residual)

    def __mul__(self, other: "SignedLogValue") -> "SignedLogValue":
        if self.sign == 0 or other.sign == 0:
            return SignedLogValue(-math.inf, 0)
        return SignedLogValue(
            self.log_magnitude + other.log_magnitude,
            self.sign * other.sign,
            self.log_residual + other.log_residual,
        )

    def __truediv__(self, other: "SignedLogValue") -> "SignedLogValue":
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero SignedLogValue")
        if self.sign == 0:
            return self
        return SignedLogValue(
            self.log_magnitude - other.log_magnitude,
            self.sign * other.sign,
            self.log_residual - other.log_residual,
        )

    def __float__(self) -> float:
        return self.value()


def log_gamma_signed(x) -> SignedLogValue:
    """Return ``ln|Gamma(x)|`` together with the sign of ``Gamma(x)``.

    Raises PoleError for x in {0, -1, -2, ...}.
    """
    if is_nonpositive_integer(x):
        raise PoleError(x)
    x = float(x)
    # Gamma is negative on (-1, 0), (-3, -2), ...: odd floor.
    sign = 1 if x > 0 or math.floor(x) % 2 == 0 else -1
    return SignedLogValue(math.lgamma(x), sign)


def reciprocal_gamma(x) -> float:
    """1/Gamma(x), which is entire: zero at the poles of Gamma."""
    if is_nonpositive_integer(x):
        return 0.0
    lg = log_gamma_signed(x)
    return lg.sign * math.exp(-lg.log_magnitude)


def pochhammer(x: float, n: int) -> float:
    """Rising factorial x(x+1)...(x+n-1); 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return math.prod(x + k for k in range(n)) if n else 1.0


def pochhammer_rational(x: Fraction, n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be non-negative")
    x = Fraction(x)
    out = Fraction(1)
    for k in range(n):
        out *= x + k
    return out


@dataclass(frozen=True)
class GammaRatio:
    """``prod Gamma(numerator_args) / prod Gamma(denominator_args)``, held symbolically."""

    numerator_args: tuple[float, ...] = ()
    denominator_args: tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "numerator_args", tuple(self.numerator_args))
        object.__setattr__(self, "denominator_args", tuple(self.denominator_args))

    def poles(self) -> list:
        return [x for x in self.numerator_args + self.denominator_args if is_nonpositive_integer(x)]

    def log_value(self) -> SignedLogValue:
        for x in self.numerator_args + self.denominator_args:
            if is_nonpositive_integer(x):
                raise PoleError(x)
        num = [log_gamma_signed(x) for x in self.numerator_args]
        den = [log_gamma_signed(x) for x in self.denominator_args]
        # fsum is correctly rounded, so the result does not depend on argument order
        log_mag = math.fsum([v.log_magnitude for v in num] + [-v.log_magnitude for v in den])
        sign = math.prod(v.sign for v in num + den)
        return SignedLogValue(log_mag, sign)

    def evaluate(self) -> float:
        return self.log_value().value()

    def __mul__(self, other: "GammaRatio") -> "GammaRatio":
        return GammaRatio(
            self.numerator_args + other.numerator_args,
            self.denominator_args + other.denominator_args,
        )

    def inverse(self) -> "GammaRatio":
        return GammaRatio(self.denominator_args, self.numerator_args)

    def __str__(self) -> str:
        def fmt(args: Iterable[float]) -> str:
            return " ".join(f"G({x:.15g})" for x in args) or "1"

        return f"{fmt(self.numerator_args)} / {fmt(self.denominator_args)}"


def gamma_ratio_eval(r: GammaRatio) -> float:
    """Evaluate a :class:`GammaRatio` in log space and exponentiate once."""
    return r.evaluate()
