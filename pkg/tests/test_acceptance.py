"""Acceptance gate: the nine release criteria at their stated tolerances.

Each test records one PASS/FAIL line; the lines are printed in the pytest
terminal summary and also when this file is run directly.
"""

import math
import time

import pytest

from thomae3f2.identities import check_euler2, check_gauss, check_kummer, check_saalschutz, check_thomae
from thomae3f2.oracle import QuadratureConfig, beta_closed_form, beta_integral, euler_integral_3f2, prove_chain
from thomae3f2.sampling import EULER_X, rng, sample_beta, sample_chain, sample_euler2, sample_gauss, \
    sample_integral, sample_kummer, sample_saalschutz, sample_thomae
from thomae3f2.series import Params3F2, Tolerance, sum_3f2_unit

SEED = 20240601
RESULTS: dict[int, str] = {}


def record(number: int, title: str, ok: bool, detail: str) -> None:
    RESULTS[number] = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}"
    print(RESULTS[number])
    assert ok, RESULTS[number]


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_1_gauss_summation():
    def run():
        g = rng(SEED)
        return [check_gauss(sample_gauss(g)) for _ in range(100)]

    checks, secs = timed(run)
    worst = max(c.discrepancy for c in checks)
    ok = all(c.discrepancy < 1e-10 and c.passed for c in checks) and secs < 5
    record(1, "Gauss summation", ok, f"100 sets, max rel err {worst:.2e} (< 1e-10), {secs:.2f}s (< 5s)")


def test_2_saalschutz_exact():
    def run():
        g = rng(SEED)
        triples = [sample_saalschutz(g) for _ in range(100)]
        return [check_saalschutz(n, *abc) for abc in triples for n in range(21)]

    checks, secs = timed(run)
    exact = all(c.lhs == c.rhs for c in checks)
    record(2, "Saalschutz exact", exact and secs < 10,
           f"{len(checks)} (n, a, b, c) cases, all exact: {exact}, {secs:.2f}s (< 10s)")


def test_3_thomae_identity():
    def run():
        g = rng(SEED)
        return [check_thomae(sample_thomae(g)) for _ in range(100)]

    checks, secs = timed(run)
    worst = max(c.discrepancy for c in checks)
    ok = all(c.discrepancy < 1e-9 and c.passed for c in checks) and secs < 30
    record(3, "Thomae identity", ok, f"100 sets, max rel err {worst:.2e} (< 1e-9), {secs:.2f}s (< 30s)")


def test_4_kummer_identity():
    def run():
        g = rng(SEED)
        return [check_kummer(sample_kummer(g)) for _ in range(100)]

    checks, secs = timed(run)
    worst = max(c.discrepancy for c in checks)
    ok = all(c.discrepancy < 1e-9 and c.passed for c in checks) and secs < 30
    record(4, "Kummer identity", ok, f"100 sets, max rel err {worst:.2e} (< 1e-9), {secs:.2f}s (< 30s)")


def test_5_euler_transformation():
    g = rng(SEED)
    sets = [sample_euler2(g) for _ in range(50)]
    checks = [check_euler2(p, x) for p in sets for x in EULER_X]
    worst = max(c.discrepancy for c in checks)
    ok = len(checks) == 250 and all(c.discrepancy < 1e-10 and c.passed for c in checks)
    record(5, "Euler transformation", ok, f"50 sets x 5 x-values, max rel err {worst:.2e} (< 1e-10)")


def test_6_integral_representation():
    def run():
        g = rng(SEED)
        out = []
        for _ in range(50):
            p = sample_integral(g)
            quad = euler_integral_3f2(p)
            series = sum_3f2_unit(p, tail_correction=True).value
            out.append(abs(quad - series))
        return out

    diffs, secs = timed(run)
    worst = max(diffs)
    record(6, "Integral representation", worst < 1e-8 and secs < 60,
           f"50 sets, max abs diff {worst:.2e} (< 1e-8), {secs:.2f}s (< 60s)")


def test_7_proof_chain():
    g = rng(SEED)
    sets = [Params3F2(0.5, 0.6, 0.7, 2.0, 2.5)] + [sample_chain(g) for _ in range(20)]
    reports = [prove_chain(p, chain_tol=1e-8) for p in sets]
    worst = max(r.max_pairwise_discrepancy for r in reports)
    ends = max(abs(r.value("lhs-series") - r.value("thomae-form-series")) for r in reports)
    ok = all(r.passed for r in reports) and worst <= 1e-8 and ends <= 1e-8
    record(7, "Proof chain", ok,
           f"reference + 20 sets, max pairwise spread {worst:.2e}, |LHS - Thomae form| {ends:.2e} (<= 1e-8)")


def test_8_zeta2_spot_check():
    target = math.pi**2 / 6
    plain = sum_3f2_unit(Params3F2(1, 1, 1, 2, 2), Tolerance(rel=1e-15, abs=8e-7, max_terms=2_000_000))
    corrected = sum_3f2_unit(Params3F2(1, 1, 1, 2, 2), tail_correction=True)
    e_plain, e_corr = abs(plain.value - target), abs(corrected.value - target)
    ok = (plain.converged and plain.terms_used <= 2_000_000 and not plain.tail_corrected and e_plain < 1e-6
          and corrected.tail_corrected and e_corr < 1e-10)
    record(8, "zeta(2) spot check", ok,
           f"plain err {e_plain:.3e} in {plain.terms_used} terms (< 1e-6, <= 2e6 terms); "
           f"tail-corrected err {e_corr:.2e} (< 1e-10)")


def test_9_beta_integral():
    g = rng(SEED)
    pairs = [(0.5, 0.5)] + [sample_beta(g) for _ in range(50)]
    cfg = QuadratureConfig(target_abs_error=1e-12)
    diffs = [abs(beta_integral(a, b, cfg) - beta_closed_form(a, b)) for a, b in pairs]
    stress = abs(beta_integral(0.5, 0.5, cfg) - math.pi)
    worst = max(diffs)
    record(9, "Beta integral", worst < 1e-10 and stress < 1e-10,
           f"50 sets + (0.5, 0.5), max abs err {worst:.2e}, pi case {stress:.2e} (< 1e-10)")


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    failed = 0
    for fn in tests:
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
