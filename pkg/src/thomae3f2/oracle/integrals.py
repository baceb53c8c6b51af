"""Integrals of x^(alpha-1) (1-x)^(beta-1) 2F1(a, b; c; x) over (0, 1)."""

from __future__ import annotations

from ..arith import GammaRatio
from ..errors import AccuracyNotReached, PreconditionError
from ..series import DEFAULT_TOL, Params3F2, Tolerance, excess_3f2, termination_index
from .kernel import hyp2f1_parts, min_power
from .quadrature import DEFAULT_QUAD, QuadratureConfig, QuadResult, integrate_power_kernel


def kernel_integral(alpha, beta, a, b, c, target: float = 1e-12, max_levels: int = 10,
                    max_terms: int = DEFAULT_TOL.max_terms) -> QuadResult:
    """Quadrature of x^(alpha-1) (1-x)^(beta-1) 2F1(a, b; c; x) dx on (0, 1).

    Convergent iff alpha > 0 and beta + min(0, c - a - b) > 0 (for a
    non-terminating 2F1); violations raise PreconditionError.
    """
    low = min_power(a, b, c)
    if not alpha > 0:
        raise PreconditionError(f"x exponent {alpha:.15g} must be > 0", condition="alpha > 0")
    if not beta + low > 0:
        raise PreconditionError(
            f"1-x exponent {beta + low:.15g} must be > 0", condition="beta + min(0, c-a-b) > 0"
        )

    def parts(x, z, log_z):
        return hyp2f1_parts(a, b, c, x, z, log_z, max_terms)

    return integrate_power_kernel(alpha, beta, parts, low, target, max_levels)


def euler_integral_3f2(p: Params3F2, cfg: QuadratureConfig = DEFAULT_QUAD,
                       tol: Tolerance = DEFAULT_TOL, full_output: bool = False):
    """3F2(a, b, c; d, e; 1) from its Euler integral.

    Normalises the integral of x^(c-1) (1-x)^(e-c-1) 2F1(a, b; d; x) by
    G(e) / (G(c) G(e-c)).  ``tol.max_terms`` caps the kernel series.
    """
    a, b, c, d, e = p.as_tuple()
    s = excess_3f2(p)
    checks = [(c > 0, "c > 0", c), (e - c > 0, "e-c > 0", e - c)]
    if termination_index((a, b)) is None:
        # a polynomial kernel needs no excess
        checks.append((s > 0, "d+e-a-b-c > 0", s))
    for ok, cond, val in checks:
        if not ok:
            raise PreconditionError(f"precondition {cond} violated (value {val:.15g})", condition=cond)
    norm = GammaRatio((e,), (c, e - c)).evaluate()
    res = kernel_integral(c, e - c, a, b, d, cfg.target_abs_error / abs(norm), cfg.max_levels,
                          tol.max_terms).scaled(norm)
    if not res.converged:
        raise AccuracyNotReached(res.value, res.error)
    return (res.value, res) if full_output else res.value
