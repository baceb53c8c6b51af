"""Execution of a :class:`JobSpec`, shared by the command line and batch mode."""

from __future__ import annotations

import time
from fractions import Fraction

from .errors import AccuracyNotReached, MaxTermsExceeded, PreconditionError
from .identities import (
    IDENTITIES,
    PASS_RTOL,
    check_euler2,
    check_gauss,
    check_kummer,
    check_saalschutz,
    check_thomae,
)
from .oracle import QuadratureConfig, beta_closed_form, prove_chain
from .oracle.quadrature import DEFAULT_QUAD
from .records import JobSpec, ResultRecord
from .sampling import sample
from .series import DEFAULT_TOL, Params2F1, Params3F2, Tolerance, excess_3f2, sum_2f1, sum_3f2_unit
from .transforms import (
    choose_representation,
    euler_second_map,
    gauss_sum,
    identity_map,
    kummer_map,
    saalschutz_sum,
    thomae_map,
)

DEFAULT_SEED = 0


class InputError(ValueError):
    """Malformed or missing job fields."""


def parse_number(text) -> Fraction:
    """Accept ints, floats, and strings such as ``"0.5"`` or ``"1/2"``."""
    if isinstance(text, bool):
        raise InputError(f"not a number: {text!r}")
    try:
        if isinstance(text, float):
            return Fraction(text)
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a number: {text!r}") from exc


def parse_params(raw, count: int | tuple[int, ...]) -> list[float]:
    if raw is None:
        raise InputError("missing params")
    items = raw.split(",") if isinstance(raw, str) else list(raw)
    counts = (count,) if isinstance(count, int) else count
    if len(items) not in counts:
        want = " or ".join(str(k) for k in counts)
        raise InputError(f"expected {want} comma-separated parameters, got {len(items)}")
    return [float(parse_number(v)) for v in items]


def _tolerance(job: JobSpec) -> Tolerance:
    return Tolerance(
        rel=DEFAULT_TOL.rel if job.tol_rel is None else job.tol_rel,
        abs=DEFAULT_TOL.abs if job.tol_abs is None else job.tol_abs,
        max_terms=DEFAULT_TOL.max_terms if job.max_terms is None else job.max_terms,
    )


def _quad(job: JobSpec) -> QuadratureConfig:
    if job.quad_error is None:
        return DEFAULT_QUAD
    return QuadratureConfig(target_abs_error=job.quad_error, max_levels=DEFAULT_QUAD.max_levels)


def _series_diag(res) -> dict:
    return {
        "terms_used": res.terms_used,
        "tail_bound": res.tail_bound,
        "converged": res.converged,
        "terminated_exactly": res.terminated_exactly,
        "tail_corrected": res.tail_corrected,
    }


def _eval(job: JobSpec, rec: ResultRecord) -> None:
    tol = _tolerance(job)
    p = parse_params(job.params, (3, 5))
    rec.inputs = {"params": p}
    if len(p) == 3:
        x = 1.0 if job.x is None else float(job.x)
        rec.inputs["x"] = x
        res = sum_2f1(Params2F1(*p), x, tol, job.tail_correction)
        rec.value = res.value
        rec.diagnostics = _series_diag(res)
        rec.passed = res.converged
        return
    params = Params3F2(*p)
    rep = choose_representation(params) if job.auto_transform else identity_map(params)
    res = sum_3f2_unit(rep.params, tol, job.tail_correction)
    rec.value = rep.prefactor.evaluate() * res.value
    rec.diagnostics = {"representation": rep.name, "excess": excess_3f2(rep.params), **_series_diag(res)}
    rec.passed = res.converged


def _transform(job: JobSpec, rec: ResultRecord) -> None:
    name = job.identity or "auto"
    if name == "euler2":
        p = parse_params(job.params, 3)
        rec.inputs = {"identity": name, "params": p}
        t = euler_second_map(Params2F1(*p))
        rec.values = {"power_exponent": t.power_exponent, "params": list(t.params.as_tuple())}
        if job.x is not None:
            rec.inputs["x"] = float(job.x)
            rec.value = t.evaluate(float(job.x), _tolerance(job))
        rec.passed = True
        return
    maps = {"thomae": thomae_map, "kummer": kummer_map, "identity": identity_map, "auto": choose_representation}
    if name not in maps:
        raise InputError(f"unknown transformation {name!r}; expected thomae, kummer, euler2, identity or auto")
    p = parse_params(job.params, 5)
    rec.inputs = {"identity": name, "params": p}
    t = maps[name](Params3F2(*p))
    res = sum_3f2_unit(t.params, _tolerance(job), job.tail_correction)
    pre = t.prefactor.evaluate()
    rec.value = pre * res.value
    rec.values = {
        "representation": t.name,
        "params": list(t.params.as_tuple()),
        "prefactor": str(t.prefactor),
        "prefactor_value": pre,
        "excess": t.excess,
    }
    rec.diagnostics = _series_diag(res)
    rec.passed = res.converged


def _case(chk) -> dict:
    return {
        "inputs": chk.inputs,
        "lhs": chk.lhs,
        "rhs": chk.rhs,
        "discrepancy": chk.discrepancy,
        "passed": chk.passed,
    }


def _verify(job: JobSpec, rec: ResultRecord) -> None:
    name = job.identity
    if name not in IDENTITIES:
        raise InputError(f"unknown identity {name!r}; expected one of {', '.join(IDENTITIES)}")
    tol = _tolerance(job)
    rec.inputs = {"identity": name}
    x = 0.5 if job.x is None else float(job.x)
    if job.random is not None:
        if job.random < 0:
            raise InputError("random count must be >= 0")
        seed = DEFAULT_SEED if job.seed is None else job.seed
        rec.inputs.update(random=job.random, seed=seed)
        if name == "euler2":
            rec.inputs["x"] = x
        cases = sample(name, job.random, seed)
        if name == "saalschutz":
            # each sampled (a, b, c) is checked for every n up to the sampling limit
            from .sampling import SAAL_MAX_N

            n = SAAL_MAX_N if job.n is None else job.n
            rec.inputs["n"] = n
            checks = [check_saalschutz(k, *abc) for abc in cases for k in range(n + 1)]
        else:
            checks = [_check_one(name, c, tol, x, job.tail_correction) for c in cases]
    elif name == "saalschutz":
        if None in (job.n, job.a, job.b, job.c):
            raise InputError("saalschutz needs n, a, b and c")
        checks = [check_saalschutz(int(job.n), parse_number(job.a), parse_number(job.b), parse_number(job.c))]
    else:
        p = parse_params(job.params, 5 if name in ("thomae", "kummer") else 3)
        params = Params3F2(*p) if len(p) == 5 else Params2F1(*p)
        checks = [_check_one(name, params, tol, x, job.tail_correction)]
    rec.values = {
        "tolerance": PASS_RTOL[name],
        "max_discrepancy": max((c.discrepancy for c in checks), default=0.0),
        "cases": [_case(c) for c in checks],
    }
    if len(checks) == 1:
        rec.value = float(checks[0].discrepancy)
        rec.diagnostics = checks[0].diagnostics
    rec.passed = all(c.passed for c in checks)


def _check_one(name, params, tol, x, tail_correction):
    if name == "thomae":
        return check_thomae(params, tol, tail_correction)
    if name == "kummer":
        return check_kummer(params, tol, tail_correction)
    if name == "gauss":
        return check_gauss(params, tol, tail_correction)
    return check_euler2(params, x, tol)


def _prove(job: JobSpec, rec: ResultRecord) -> None:
    p = parse_params(job.params, 5)
    rec.inputs = {"params": p}
    report = prove_chain(Params3F2(*p), _quad(job), _tolerance(job))
    rec.stage_values = [[label, v] for label, v in report.stage_values]
    rec.value = report.max_pairwise_discrepancy
    rec.values = {
        "max_pairwise_discrepancy": report.max_pairwise_discrepancy,
        "tolerance": report.tolerance,
        "reorder_ok": report.reorder_ok,
        "lhs_minus_rhs": report.stage_values[0][1] - report.stage_values[-1][1],
    }
    rec.diagnostics = {"stages": report.diagnostics, "failures": report.failures}
    rec.passed = report.passed


def _closed_form(job: JobSpec, rec: ResultRecord) -> None:
    name = job.identity
    if name == "gauss":
        p = parse_params(job.params, 3)
        rec.inputs = {"identity": name, "params": p}
        rec.value = gauss_sum(Params2F1(*p))
    elif name == "saalschutz":
        if None in (job.n, job.a, job.b, job.c):
            raise InputError("saalschutz needs n, a, b and c")
        a, b, c = parse_number(job.a), parse_number(job.b), parse_number(job.c)
        rec.inputs = {"identity": name, "n": int(job.n), "a": str(a), "b": str(b), "c": str(c)}
        exact = saalschutz_sum(int(job.n), a, b, c)
        rec.value = float(exact)
        rec.values = {"exact": str(exact)}
    elif name == "beta":
        p = parse_params(job.params, 2)
        if not (p[0] > 0 and p[1] > 0):
            raise PreconditionError("beta closed form needs alpha > 0 and beta > 0", condition="alpha, beta > 0")
        rec.inputs = {"identity": name, "params": p}
        rec.value = beta_closed_form(*p)
    else:
        raise InputError(f"unknown closed form {name!r}; expected gauss, saalschutz or beta")
    rec.passed = True


_RUNNERS = {
    "eval": _eval,
    "transform": _transform,
    "verify": _verify,
    "prove": _prove,
    "closed-form": _closed_form,
}


def error_record(command: str, exc: BaseException, inputs: dict | None = None) -> ResultRecord:
    input_error = isinstance(exc, (ValueError, TypeError)) and not isinstance(exc, ArithmeticError)
    err = {"kind": type(exc).__name__, "message": str(exc), "input_error": input_error}
    for attr in ("condition", "stage"):
        if getattr(exc, attr, None) is not None:
            err[attr] = getattr(exc, attr)
    return ResultRecord(command=command, inputs=inputs or {}, error=err, passed=False)


def run_job(job: JobSpec) -> ResultRecord:
    """Run one job; failures are captured in the record rather than raised."""
    start = time.perf_counter()
    rec = ResultRecord(command=job.command)
    try:
        _RUNNERS[job.command](job, rec)
    except (PreconditionError, InputError, ValueError, TypeError, AccuracyNotReached, MaxTermsExceeded) as exc:
        rec = error_record(job.command, exc, rec.inputs)
    rec.wall_time_ms = (time.perf_counter() - start) * 1000.0
    return rec.normalized()
