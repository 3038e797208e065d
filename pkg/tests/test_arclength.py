import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate as sp_integrate

from spiralsearch import (
    QuadratureSettings,
    SpiralSpec,
    arclength_between,
    arclength_integrand,
    eval_radius,
    tail_arclength,
)
from spiralsearch.arclength import tail_arclength_with_error

from .conftest import ALL_SPECS


def log_arc(kappa, C, lo, hi):
    return math.sqrt(1 + kappa**2) / kappa * C * (math.exp(kappa * hi) - math.exp(kappa * lo))


def arch_arc(kappa, lo, hi):
    F = lambda t: 0.5 * (t * math.sqrt(1 + t * t) + math.asinh(t))
    return kappa * (F(hi) - F(lo))


def test_integrand_examples():
    k, C, t = 0.4, 2.0, 1.3
    assert arclength_integrand(SpiralSpec.logarithmic(k, C), t) == pytest.approx(
        math.sqrt(1 + k * k) * C * math.exp(k * t), rel=1e-15
    )
    assert arclength_integrand(SpiralSpec.archimedean(1), 1e-300) == pytest.approx(1.0)
    for b in (0.5, 1.0, 2.0):
        t = 2.2
        expected = t ** (b - 1) * math.exp(t) * math.sqrt(t * t + (b + t) ** 2)
        assert arclength_integrand(SpiralSpec.power_exp(b), t) == pytest.approx(expected, rel=1e-14)


def test_integrand_dominates(any_spec):
    from spiralsearch import eval_derivative

    for t in np.linspace(-4, 6, 41) + 0.013:
        s = arclength_integrand(any_spec, t)
        assert s >= eval_radius(any_spec, t)
        assert s >= abs(eval_derivative(any_spec, t))


def test_empty_interval(any_spec):
    assert arclength_between(any_spec, 1.5, 1.5) == 0.0


def test_bad_interval():
    with pytest.raises(ValueError):
        arclength_between(SpiralSpec.archimedean(1), 2.0, 1.0)
    with pytest.raises(ValueError):
        arclength_between(SpiralSpec.archimedean(1), -math.inf, 1.0)


@pytest.mark.parametrize("lo, hi", [(-3, 2), (0, 10), (-40, -20), (5, 25)])
def test_log_closed_form(lo, hi):
    k = 0.31
    got = arclength_between(SpiralSpec.logarithmic(k, 1.7), lo, hi)
    assert got == pytest.approx(log_arc(k, 1.7, lo, hi), rel=1e-10)


@pytest.mark.parametrize("T", [1, 10])
def test_arch_closed_form(T):
    got = arclength_between(SpiralSpec.archimedean(1), 0, T)
    assert got == pytest.approx(0.5 * (T * math.sqrt(1 + T * T) + math.asinh(T)), rel=1e-10)


def test_arch_negative_part_is_free():
    spec = SpiralSpec.archimedean(2)
    assert arclength_between(spec, -5, 3) == pytest.approx(arch_arc(2, 0, 3), rel=1e-12)
    assert arclength_between(spec, -5, -1) == 0.0


@pytest.mark.parametrize("name", ["sexp_half", "pexp_half"])
def test_singular_families_match_scipy(name):
    spec = ALL_SPECS[name]
    for lo, hi in [(-1.0, 1.0), (0.0, 0.5), (-2.0, 3.0), (1e-8, 1e-3)]:
        pieces = [p for p in (lo, 0.0, hi) if lo <= p <= hi]
        ref = sum(
            sp_integrate.quad(lambda t: arclength_integrand(spec, t) if t != 0 else 0.0, a, b,
                              epsabs=1e-13, epsrel=1e-12, limit=500)[0]
            for a, b in zip(pieces, pieces[1:])
            if a < b
        )
        assert arclength_between(spec, lo, hi) == pytest.approx(ref, rel=1e-8)


@settings(max_examples=40, deadline=None)
@given(
    name=st.sampled_from(sorted(ALL_SPECS)),
    lo=st.floats(-6, 5),
    w1=st.floats(0.01, 3),
    w2=st.floats(0.01, 3),
)
def test_additivity_and_lower_bounds(name, lo, w1, w2):
    spec = ALL_SPECS[name]
    mid, hi = lo + w1, lo + w1 + w2
    whole = arclength_between(spec, lo, hi)
    parts = arclength_between(spec, lo, mid) + arclength_between(spec, mid, hi)
    assert whole == pytest.approx(parts, rel=2e-10, abs=2e-12)
    f_lo, f_hi = eval_radius(spec, lo), eval_radius(spec, hi)
    chord = math.hypot(f_hi * math.cos(hi) - f_lo * math.cos(lo), f_hi * math.sin(hi) - f_lo * math.sin(lo))
    slack = 1e-10 * max(1.0, whole)
    assert whole >= f_hi - f_lo - slack
    assert whole >= chord - slack


def test_tail_log():
    spec = SpiralSpec.logarithmic(0.25)
    assert tail_arclength(spec, 0.0) == pytest.approx(math.sqrt(1.0625) / 0.25, rel=1e-15)
    assert tail_arclength(spec, 0.0) == pytest.approx(4.123105626, abs=1e-9)
    assert tail_arclength(spec, 0.0) == pytest.approx(arclength_between(spec, -200.0, 0.0), rel=1e-10)


def test_tail_floor_families():
    assert tail_arclength(SpiralSpec.archimedean(1), 0.0) == 0.0
    assert tail_arclength(SpiralSpec.archimedean(1), -3.0) == 0.0
    assert tail_arclength(SpiralSpec.power_exp(1), 2.0) == pytest.approx(
        arclength_between(SpiralSpec.power_exp(1), 0.0, 2.0), rel=1e-15
    )


def test_tail_sexp_a1_is_log():
    assert tail_arclength(SpiralSpec.stretched_exp(1), 0.0) == pytest.approx(math.sqrt(2), rel=1e-12)
    assert tail_arclength(SpiralSpec.stretched_exp(1), 2.5) == pytest.approx(
        tail_arclength(SpiralSpec.logarithmic(1.0), 2.5), rel=1e-10
    )


@pytest.mark.parametrize("a", [0.5, 2.0, 3.0])
def test_tail_sexp_against_scipy(a):
    spec = SpiralSpec.stretched_exp(a)
    ref = sp_integrate.quad(lambda t: arclength_integrand(spec, t) if t != 0 else 0.0, -np.inf, 0.0,
                            epsabs=1e-14, epsrel=1e-12, limit=500)[0]
    ref += sp_integrate.quad(lambda t: arclength_integrand(spec, t) if t != 0 else 0.0, 0.0, 1.0,
                             epsabs=1e-14, epsrel=1e-12, limit=500)[0]
    assert tail_arclength(spec, 1.0) == pytest.approx(ref, rel=1e-8)


@pytest.mark.parametrize("a", [0.5, 2.0])
def test_tail_convergence(a):
    spec = SpiralSpec.stretched_exp(a)
    eps = 1e-8
    prev, bound = tail_arclength_with_error(spec, 0.5, QuadratureSettings(tail_epsilon=eps))
    assert 0 < bound <= eps * prev
    finer, _ = tail_arclength_with_error(spec, 0.5, QuadratureSettings(tail_epsilon=eps / 2))
    assert abs(finer - prev) < bound


def test_tail_far_left():
    value = tail_arclength(SpiralSpec.stretched_exp(2.0), -40.0)
    assert 0.0 <= value < 1e-300


def test_settings_validation():
    with pytest.raises(ValueError):
        QuadratureSettings(max_depth=5)
    with pytest.raises(ValueError):
        QuadratureSettings(rel_tol=0)
