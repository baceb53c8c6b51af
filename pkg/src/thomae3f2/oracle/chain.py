"""Stage-by-stage numerical certification of the Thomae derivation.

Starting from the Euler integral of 3F2(a, b, c; d, e; 1), the derivation
passes through eight equal quantities.  Each is computed here by its own
route (series, quadrature of the displayed kernel, or a transformation
map) and the spread of the eight values is compared with a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..arith import GammaRatio, gamma_ratio_eval
from ..errors import AccuracyNotReached, PoleError, PreconditionError, SlowConvergenceError
from ..series import DEFAULT_TOL, Params3F2, Tolerance, excess_3f2, sum_3f2_unit
from ..transforms import kummer_map, same_series, thomae_map
from .integrals import kernel_integral
from .quadrature import DEFAULT_QUAD, QuadratureConfig

STAGES = (
    "lhs-series",
    "integral-form",
    "euler-transformed-integral",
    "termwise-sum",
    "kummer-form-series",
    "second-integral",
    "euler-again-integral",
    "thomae-form-series",
)
DEFAULT_CHAIN_TOL = 1e-8


@dataclass
class ProofChainReport:
    params: Params3F2
    stage_values: list[tuple[str, float]]
    max_pairwise_discrepancy: float
    passed: bool
    tolerance: float
    reorder_ok: bool
    diagnostics: dict = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    def value(self, stage: str) -> float:
        return dict(self.stage_values)[stage]


def _preconditions(p: Params3F2) -> None:
    a, b, c, d, e = p.as_tuple()
    s = excess_3f2(p)
    checks = [
        ("lhs-series", s > 0, "d+e-a-b-c > 0", s),
        ("integral-form", c > 0, "c > 0", c),
        ("integral-form", e - c > 0, "e-c > 0", e - c),
        ("second-integral", a > 0, "a > 0", a),
        ("second-integral", d - a > 0, "d-a > 0", d - a),
    ]
    for stage, ok, cond, val in checks:
        if not ok:
            raise PreconditionError(
                f"stage {stage}: precondition {cond} violated (value {val:.15g})",
                condition=cond,
                stage=stage,
            )


def prove_chain(p: Params3F2, cfg: QuadratureConfig = DEFAULT_QUAD, tol: Tolerance = DEFAULT_TOL,
                chain_tol: float = DEFAULT_CHAIN_TOL) -> ProofChainReport:
    """Compute all eight stages independently and compare them.

    Every stage is normalised to equal 3F2(p; 1) and gets an absolute error
    budget of ``chain_tol / 8``.  A stage whose quadrature misses its budget
    contributes its best estimate and marks the report as failed.
    """
    _preconditions(p)
    a, b, c, d, e = p.as_tuple()
    s = excess_3f2(p)
    budget = chain_tol / len(STAGES)
    diagnostics: dict[str, dict] = {}
    failures: list[str] = []

    def series_stage(name, prefactor: GammaRatio, params: Params3F2) -> float:
        pre = gamma_ratio_eval(prefactor)
        stol = Tolerance(rel=tol.rel, abs=budget / max(abs(pre), 1e-300), max_terms=tol.max_terms)
        res = sum_3f2_unit(params, stol, tail_correction=True)
        diagnostics[name] = {"terms_used": res.terms_used, "tail_bound": abs(pre) * res.tail_bound}
        if not res.converged:
            failures.append(f"{name}: series not converged")
        return pre * res.value

    def integral_stage(name, prefactor: GammaRatio, alpha, beta, ka, kb, kc) -> float:
        pre = gamma_ratio_eval(prefactor)
        target = min(cfg.target_abs_error, budget) / abs(pre)
        res = kernel_integral(alpha, beta, ka, kb, kc, target, cfg.max_levels, tol.max_terms)
        diagnostics[name] = {"quad_error": abs(pre) * res.error, "levels": res.levels, "nodes": res.nodes}
        if not res.converged:
            failures.append(f"{name}: quadrature error {abs(pre) * res.error:.3g} above budget")
        return pre * res.value

    def run(name, fn):
        try:
            return fn()
        except (PoleError, SlowConvergenceError) as exc:
            raise PreconditionError(f"stage {name}: {exc}", condition=exc.condition, stage=name) from exc
        except AccuracyNotReached as exc:
            failures.append(f"{name}: {exc}")
            return exc.estimate

    euler_norm = GammaRatio((e,), (c, e - c))
    second_norm = GammaRatio((d, e, s), (a, d - a, e - c, d + e - a - b))
    values = {}
    values["lhs-series"] = run("lhs-series", lambda: series_stage("lhs-series", GammaRatio(), p))
    values["integral-form"] = run(
        "integral-form", lambda: integral_stage("integral-form", euler_norm, c, e - c, a, b, d)
    )
    values["euler-transformed-integral"] = run(
        "euler-transformed-integral",
        lambda: integral_stage("euler-transformed-integral", euler_norm, c, s, d - a, d - b, d),
    )
    # beta integrals taken term by term: G(e)/(G(c)G(e-c)) * B(c, s) times the Kummer-form series
    termwise = euler_norm * GammaRatio((c, s), (c + s,))
    values["termwise-sum"] = run(
        "termwise-sum",
        lambda: series_stage("termwise-sum", termwise, Params3F2(d - a, d - b, c, d, d + e - a - b)),
    )

    def kummer_stage():
        k = kummer_map(p)
        return series_stage("kummer-form-series", k.prefactor, k.params)

    values["kummer-form-series"] = run("kummer-form-series", kummer_stage)
    # the reordering step is a permutation of the upper and lower lists
    reorder_ok = same_series(
        Params3F2(d - a, d - b, c, d, d + e - a - b), Params3F2(d - b, c, d - a, d + e - a - b, d)
    )
    values["second-integral"] = run(
        "second-integral",
        lambda: integral_stage("second-integral", second_norm, d - a, a, d - b, c, d + e - a - b),
    )
    values["euler-again-integral"] = run(
        "euler-again-integral",
        lambda: integral_stage("euler-again-integral", second_norm, d - a, e - c, e - a, s, d + e - a - b),
    )

    def thomae_stage():
        t = thomae_map(p)
        return series_stage("thomae-form-series", t.prefactor, t.params)

    values["thomae-form-series"] = run("thomae-form-series", thomae_stage)

    stage_values = [(name, float(values[name])) for name in STAGES]
    vals = [v for _, v in stage_values]
    spread = max(vals) - min(vals)
    passed = spread <= chain_tol and not failures and reorder_ok
    return ProofChainReport(p, stage_values, spread, passed, chain_tol, reorder_ok, diagnostics, failures)
