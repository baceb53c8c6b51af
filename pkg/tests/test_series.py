import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thomae3f2.arith import GammaRatio, gamma_ratio_eval
from thomae3f2.errors import (
    DivergenceError,
    DomainError,
    LowerPoleError,
    MaxTermsExceeded,
    PreconditionError,
    SlowConvergenceError,
)
from thomae3f2.sampling import rng, sample_gauss
from thomae3f2.series import (
    Params2F1,
    Params3F2,
    Tolerance,
    excess_2f1,
    excess_3f2,
    regime_index,
    sum_2f1,
    sum_3f2_terminating_exact,
    sum_3f2_unit,
)


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def mp_3f2(p):
    # an explicit term cap: the default unit-argument path can stall for negative a
    with mpmath.workdps(30):
        return float(mpmath.hyper(p.upper, p.lower, 1, maxterms=10**5))


@pytest.mark.parametrize(
    "p,want", [((1, 1, 1, 2, 2), 1), ((0.5, 0.6, 0.7, 2.0, 2.5), 2.7), ((0.3, 0.4, 0.9, 0.7, 0.9), 0)]
)
def test_excess_3f2(p, want):
    assert excess_3f2(Params3F2(*p)) == pytest.approx(want, abs=1e-15)


@pytest.mark.parametrize("p,want", [((1, 1, 3), 1), ((0.5, 0.5, 1), 0), ((2, 3, 7), 2)])
def test_excess_2f1(p, want):
    assert excess_2f1(Params2F1(*p)) == want


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Tolerance(rel=1e-16)
    with pytest.raises(ValueError):
        Tolerance(abs=-1.0)
    with pytest.raises(ValueError):
        Tolerance(max_terms=0)


def test_2f1_zero_upper():
    r = sum_2f1(Params2F1(3.7, 0, 2), 0.7)
    assert r.value == 1.0 and r.terminated_exactly and r.tail_bound == 0.0


def test_2f1_log_case():
    r = sum_2f1(Params2F1(1, 1, 2), 0.5)
    assert r.converged
    assert rel(r.value, 2 * math.log(2)) < 1e-12
    assert abs(r.value - 1.3862943611) < 1e-10


def test_2f1_terminating_at_one():
    r = sum_2f1(Params2F1(-2, 3, 4), 1.0)
    assert r.terminated_exactly
    assert r.value == pytest.approx(0.1, abs=1e-15)


def test_2f1_domain():
    with pytest.raises(DomainError):
        sum_2f1(Params2F1(1, 1, 2), 1.5)
    with pytest.raises(DivergenceError):
        sum_2f1(Params2F1(1, 1, 2), 1.0)
    with pytest.raises(LowerPoleError):
        sum_2f1(Params2F1(1, 1, -2), 0.5)


@given(
    st.floats(min_value=-3, max_value=3),
    st.floats(min_value=-3, max_value=3),
    st.floats(min_value=0.2, max_value=5),
    st.floats(min_value=0.0, max_value=0.95),
)
def test_2f1_matches_mpmath(a, b, c, x):
    r = sum_2f1(Params2F1(a, b, c), x)
    ref = float(mpmath.hyp2f1(a, b, c, x))
    assert r.converged
    scale = float(mpmath.hyp2f1(abs(a), abs(b), c, x))  # bounds the sum of |terms|
    assert abs(r.value - ref) <= 1e-12 * scale + 1e-13


def test_3f2_zero_upper():
    assert sum_3f2_unit(Params3F2(0, 5, 0.7, 2, 2.5)).value == 1.0


def test_3f2_zeta2_tail_corrected():
    r = sum_3f2_unit(Params3F2(1, 1, 1, 2, 2), tail_correction=True)
    assert r.converged and r.tail_corrected
    assert abs(r.value - math.pi**2 / 6) < 1e-12


def test_3f2_zeta2_plain_budget():
    r = sum_3f2_unit(Params3F2(1, 1, 1, 2, 2), Tolerance(rel=1e-15, max_terms=1000))
    assert not r.converged and r.terms_used == 1000
    with pytest.raises(MaxTermsExceeded) as info:
        r.check()
    assert info.value.result is r


def test_3f2_terminating_float():
    r = sum_3f2_unit(Params3F2(-1, 1, 1, 3, 2))
    assert r.terminated_exactly
    assert r.value == pytest.approx(5 / 6, rel=1e-15)


def test_3f2_divergent_and_slow():
    with pytest.raises(DivergenceError):
        sum_3f2_unit(Params3F2(1, 1, 1, 1.5, 1.5))
    with pytest.raises(SlowConvergenceError):
        sum_3f2_unit(Params3F2(1, 1, 1, 2, 1.01))


def test_3f2_lower_pole():
    with pytest.raises(LowerPoleError) as info:
        sum_3f2_unit(Params3F2(1, 1, 1, 0, 4))
    assert info.value.index == 1


def test_exact_examples():
    assert sum_3f2_terminating_exact(Params3F2(0, 3, 4, 5, 6), 0) == 1
    assert sum_3f2_terminating_exact(Params3F2(-1, 1, 1, 3, -1), 1) == Fraction(4, 3)
    with pytest.raises(LowerPoleError) as info:
        sum_3f2_terminating_exact(Params3F2(-1, 1, 1, 3, 0), 1)
    assert info.value.index == 1
    with pytest.raises(PreconditionError):
        sum_3f2_terminating_exact(Params3F2(1, 1, 1, 3, 2), 2)


def test_exact_is_exact_at_n20():
    a, b, c = Fraction(1, 3), Fraction(-5, 7), Fraction(9, 4)
    p = Params3F2(Fraction(-20), a, b, c, 1 + a + b - c - 20)
    got = sum_3f2_terminating_exact(p, 20)
    assert isinstance(got, Fraction)
    with mpmath.workdps(60):
        ref = mpmath.hyp3f2(-20, mpmath.mpf(1) / 3, mpmath.mpf(-5) / 7, mpmath.mpf(9) / 4, 1 + a + b - c - 20, 1)
        assert abs(mpmath.mpf(got.numerator) / got.denominator - ref) < mpmath.mpf(10) ** -40 * abs(ref)


def test_gauss_random_100():
    g = rng(2024)
    for _ in range(100):
        p = sample_gauss(g)
        r = sum_2f1(p, 1.0, tail_correction=True)
        closed = gamma_ratio_eval(GammaRatio((p.c, excess_2f1(p)), (p.c - p.a, p.c - p.b)))
        assert rel(r.value, closed) < 1e-10


small_q = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@given(st.integers(min_value=0, max_value=12), small_q, small_q, small_q, small_q)
def test_float_path_agrees_with_exact(n, a, b, d, e):
    p = Params3F2(Fraction(-n), a, b, d, e)
    try:
        exact = sum_3f2_terminating_exact(p, n)
    except LowerPoleError:
        with pytest.raises(LowerPoleError):
            sum_3f2_unit(p)
        return
    got = sum_3f2_unit(p).value
    scale = float(sum(abs(x) for x in _terms(p, n)))
    assert abs(got - float(exact)) <= 1e-12 * max(abs(float(exact)), scale)


def _terms(p, n):
    t = Fraction(1)
    yield t
    for k in range(n):
        num = math.prod(u + k for u in p.upper)
        if num == 0:
            return
        t = t * num / (math.prod(v + k for v in p.lower) * (k + 1))
        yield t


@given(
    st.floats(min_value=0.1, max_value=3),
    st.floats(min_value=0.1, max_value=3),
    st.floats(min_value=0.1, max_value=3),
    st.floats(min_value=1.0, max_value=3),
    st.floats(min_value=0.0, max_value=1.0),
)
def test_monotone_regime(a, b, c, s, split):
    # s >= 1 with positive parameters: terms strictly decrease beyond regime_index
    total = a + b + c + s
    d = 0.2 + split * (total - 0.4)
    e = total - d
    n0 = regime_index((a, b, c), (d, e), unit=True)
    t = 1.0
    prev = None
    for n in range(n0 + 200):
        if n >= n0 and prev is not None:
            assert t < prev
        prev = t
        t *= (n + a) * (n + b) * (n + c) / ((n + d) * (n + e) * (n + 1))


def _convergent_set(draw, min_excess=1.0):
    a = draw(st.floats(min_value=-2.5, max_value=3))
    b = draw(st.floats(min_value=0.1, max_value=3))
    c = draw(st.floats(min_value=0.1, max_value=3))
    s = draw(st.floats(min_value=min_excess, max_value=4))
    d = draw(st.floats(min_value=0.3, max_value=4))
    return Params3F2(a, b, c, d, a + b + c + s - d)


@settings(max_examples=25)
@given(st.data())
def test_tail_bound_sound(data):
    p = _convergent_set(data.draw, min_excess=1.5)
    if p.e <= 0.1 or abs(p.a - round(p.a)) < 1e-3:
        return
    r = sum_3f2_unit(p, Tolerance(rel=1e-7))
    assert r.converged
    ref = mp_3f2(p)
    assert abs(r.value - ref) <= 2 * r.tail_bound + 1e-13 * r.terms_used * abs(ref)


@settings(max_examples=25)
@given(st.data())
def test_tail_corrected_matches_mpmath(data):
    p = _convergent_set(data.draw)
    if p.e <= 0.1 or abs(p.a - round(p.a)) < 1e-3:
        return
    r = sum_3f2_unit(p, tail_correction=True)
    assert r.converged
    assert abs(r.value - mp_3f2(p)) <= 1e-11 * max(1.0, abs(mp_3f2(p)))


def test_converged_implies_bound_below_tolerance():
    tol = Tolerance(rel=1e-10)
    r = sum_3f2_unit(Params3F2(0.5, 0.6, 0.7, 2.0, 2.5), tol)
    assert r.converged and r.tail_bound <= tol.rel * abs(r.value)
