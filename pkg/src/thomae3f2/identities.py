"""Both-sides checks of the classical identities, each side by its own route."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import gamma_ratio_eval
from .series import DEFAULT_TOL, Params2F1, Params3F2, Tolerance, sum_2f1, sum_3f2_terminating_exact, sum_3f2_unit
from .transforms import euler_second_map, gauss_sum, kummer_map, saalschutz_params, saalschutz_sum, thomae_map

IDENTITIES = ("thomae", "kummer", "gauss", "saalschutz", "euler2")
# relative agreement required of the two sides
PASS_RTOL = {"thomae": 1e-9, "kummer": 1e-9, "gauss": 1e-10, "euler2": 1e-10, "saalschutz": 0.0}


@dataclass
class IdentityCheck:
    identity: str
    inputs: dict
    lhs: float | Fraction
    rhs: float | Fraction
    discrepancy: float
    passed: bool
    diagnostics: dict = field(default_factory=dict)


def rel_discrepancy(lhs: float, rhs: float) -> float:
    scale = max(abs(lhs), abs(rhs))
    return abs(lhs - rhs) / scale if scale > 0 else 0.0


def _float_check(name, inputs, lhs, rhs, diagnostics) -> IdentityCheck:
    disc = rel_discrepancy(lhs, rhs)
    return IdentityCheck(name, inputs, lhs, rhs, disc, disc < PASS_RTOL[name], diagnostics)


def _p3(p: Params3F2) -> dict:
    return {"params": [float(x) for x in p.as_tuple()]}


def _two_sided_3f2(name, p: Params3F2, mapped, tol: Tolerance, tail_correction: bool) -> IdentityCheck:
    left = sum_3f2_unit(p, tol, tail_correction)
    pre = gamma_ratio_eval(mapped.prefactor)
    right = sum_3f2_unit(mapped.params, tol, tail_correction)
    diag = {
        "lhs_terms_used": left.terms_used,
        "rhs_terms_used": right.terms_used,
        "lhs_tail_bound": left.tail_bound,
        "rhs_tail_bound": right.tail_bound,
        "converged": left.converged and right.converged,
    }
    chk = _float_check(name, _p3(p), left.value, pre * right.value, diag)
    chk.passed = chk.passed and diag["converged"]
    return chk


def check_thomae(p: Params3F2, tol: Tolerance = DEFAULT_TOL, tail_correction: bool = True) -> IdentityCheck:
    return _two_sided_3f2("thomae", p, thomae_map(p), tol, tail_correction)


def check_kummer(p: Params3F2, tol: Tolerance = DEFAULT_TOL, tail_correction: bool = True) -> IdentityCheck:
    return _two_sided_3f2("kummer", p, kummer_map(p), tol, tail_correction)


def check_gauss(p: Params2F1, tol: Tolerance = DEFAULT_TOL, tail_correction: bool = True) -> IdentityCheck:
    closed = gauss_sum(p)
    series = sum_2f1(p, 1.0, tol, tail_correction)
    diag = {"terms_used": series.terms_used, "tail_bound": series.tail_bound, "converged": series.converged}
    chk = _float_check("gauss", {"params": [float(x) for x in p.as_tuple()]}, series.value, closed, diag)
    chk.passed = chk.passed and series.converged
    return chk


def check_euler2(p: Params2F1, x: float, tol: Tolerance = DEFAULT_TOL) -> IdentityCheck:
    left = sum_2f1(p, x, tol)
    right = euler_second_map(p).evaluate(x, tol)
    diag = {"terms_used": left.terms_used, "tail_bound": left.tail_bound, "converged": left.converged}
    inputs = {"params": [float(v) for v in p.as_tuple()], "x": float(x)}
    chk = _float_check("euler2", inputs, left.value, right, diag)
    chk.passed = chk.passed and left.converged
    return chk


def check_saalschutz(n: int, a, b, c) -> IdentityCheck:
    """Exact rational comparison; discrepancy is |lhs - rhs| as a float."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    rhs = saalschutz_sum(n, a, b, c)
    lhs = sum_3f2_terminating_exact(saalschutz_params(n, a, b, c), n)
    inputs = {"n": n, "a": str(a), "b": str(b), "c": str(c)}
    return IdentityCheck("saalschutz", inputs, lhs, rhs, float(abs(lhs - rhs)), lhs == rhs, {"exact": True})
