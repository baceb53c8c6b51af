"""Exception types shared across the package."""

from __future__ import annotations


class PreconditionError(ValueError):
    """An input violates a stated validity condition.

    ``condition`` holds a short machine-readable description of the failed
    inequality (e.g. ``"d-a > 0"``), ``stage`` optionally names where it failed.
    """

    def __init__(self, message: str, condition: str | None = None, stage: str | None = None):
        super().__init__(message)
        self.condition = condition
        self.stage = stage


class PoleError(PreconditionError):
    """Gamma (or a Pochhammer denominator) evaluated at 0, -1, -2, ..."""

    def __init__(self, argument, message: str | None = None):
        super().__init__(message or f"gamma pole at argument {argument!r}", condition="pole")
        self.argument = argument


class LowerPoleError(PoleError):
    """A lower parameter is a non-positive integer reached before termination."""

    def __init__(self, argument, index: int):
        super().__init__(
            argument,
            f"lower parameter {argument!r} makes the denominator vanish at term index {index}",
        )
        self.index = index


class DomainError(PreconditionError):
    pass


class DivergenceError(DomainError):
    pass


class SlowConvergenceError(DivergenceError):
    """Positive but tiny parametric excess; rewrite with a transformation first."""


class NoValidRepresentationError(PreconditionError):
    pass


class ZeroDenominatorError(PreconditionError, ZeroDivisionError):
    pass


class MaxTermsExceeded(ArithmeticError):
    """Raised by :meth:`SeriesResult.check` when the term budget ran out.

    The best estimate is still available as ``result``.
    """

    def __init__(self, result):
        super().__init__(
            f"series not converged after {result.terms_used} terms "
            f"(tail bound {result.tail_bound:.3g})"
        )
        self.result = result


class AccuracyNotReached(ArithmeticError):
    def __init__(self, estimate: float, error: float, message: str | None = None):
        super().__init__(message or f"quadrature error estimate {error:.3g} above target")
        self.estimate = estimate
        self.error = error
