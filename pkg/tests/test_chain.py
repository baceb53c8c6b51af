import math

import pytest

from thomae3f2.arith import gamma_ratio_eval
from thomae3f2.errors import PreconditionError
from thomae3f2.oracle import STAGES, QuadratureConfig, prove_chain
from thomae3f2.sampling import rng, sample_chain
from thomae3f2.series import Params3F2, sum_3f2_unit
from thomae3f2.transforms import thomae_map

REF = Params3F2(0.5, 0.6, 0.7, 2.0, 2.5)


def test_stage_order_fixed():
    assert STAGES == (
        "lhs-series",
        "integral-form",
        "euler-transformed-integral",
        "termwise-sum",
        "kummer-form-series",
        "second-integral",
        "euler-again-integral",
        "thomae-form-series",
    )
    report = prove_chain(REF)
    assert [label for label, _ in report.stage_values] == list(STAGES)


def test_reference_point_passes():
    report = prove_chain(REF)
    assert report.passed and report.reorder_ok and not report.failures
    vals = [v for _, v in report.stage_values]
    assert max(vals) - min(vals) == report.max_pairwise_discrepancy <= 1e-8


def test_zeta2_point():
    report = prove_chain(Params3F2(1, 1, 1, 2, 2))
    assert report.passed
    for _, v in report.stage_values:
        assert abs(v - math.pi**2 / 6) < 1e-6


def test_second_integral_precondition():
    with pytest.raises(PreconditionError) as info:
        prove_chain(Params3F2(2, 0.3, 0.4, 1.5, 2.2))
    assert info.value.stage == "second-integral"
    assert info.value.condition == "d-a > 0"


@pytest.mark.parametrize(
    "p,stage",
    [
        ((1, 1, 1, 1.5, 1.5), "lhs-series"),
        ((0.5, 0.6, -0.7, 2.0, 2.5), "integral-form"),
        ((0.5, 0.6, 2.7, 2.0, 2.5), "integral-form"),
        ((-0.5, 0.6, 0.7, 2.0, 2.5), "second-integral"),
    ],
)
def test_first_failing_stage_is_named(p, stage):
    with pytest.raises(PreconditionError) as info:
        prove_chain(Params3F2(*p))
    assert info.value.stage == stage


def test_thomae_stage_is_same_code_path():
    report = prove_chain(REF)
    t = thomae_map(REF)
    direct = gamma_ratio_eval(t.prefactor) * sum_3f2_unit(t.params, tail_correction=True).value
    assert report.value("thomae-form-series") == direct


def test_pass_flag_tracks_tolerance():
    report = prove_chain(REF, chain_tol=1e-18)
    assert report.passed is (report.max_pairwise_discrepancy <= 1e-18 and not report.failures)


def test_quadrature_shortfall_marks_failure():
    report = prove_chain(REF, QuadratureConfig(target_abs_error=1e-15, max_levels=1))
    assert not report.passed
    assert report.failures
    assert len(report.stage_values) == 8


def test_random_chain_sets():
    g = rng(3)
    for _ in range(20):
        report = prove_chain(sample_chain(g))
        assert report.passed, (report.params, report.failures)
        vals = [v for _, v in report.stage_values]
        for x, y in zip(vals, vals[1:]):
            assert abs(x - y) <= report.tolerance
