import cmath

import mpmath
import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.exceptions import BranchError, DivergenceError
from src.models import BilateralParams, SeriesStatus, SummationMethod
from src.series import (
    bilateral_h_star,
    bilateral_ode_residual,
    bilateral_series,
    dougall_closed_form,
    finite_extent,
    minus_z_power,
    three_term_residual,
)


def _mp_h_star(upper, lower, z, terms=20000):
    """Brute-force symmetric partial sum for absolutely convergent parameters."""
    sign = (-1) ** len(upper)
    with mpmath.workdps(30):
        total = mpmath.mpc(0)
        for n in range(-terms, terms + 1):
            term = mpmath.mpc(sign * z) ** n
            for a in upper:
                term *= mpmath.rgamma(1 - mpmath.mpc(a) - n)
            for b in lower:
                term *= mpmath.rgamma(mpmath.mpc(b) + n)
            total += term
        return complex(total)


def test_dougall_example():
    a1, a2, b1, b2 = 0.1, 0.2j, 1.3, 1.4 - 0.2j
    series = bilateral_h_star(BilateralParams(upper=[a1, a2], lower=[b1, b2], z=1))
    assert series.status == SeriesStatus.converged
    assert_allclose(series.value, dougall_closed_form(a1, a2, b1, b2), rtol=1e-10)


def test_dougall_draws(rng):
    for _ in range(20):
        a1 = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))
        a2 = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))
        b1 = complex(rng.uniform(0.6, 1.6), rng.uniform(-0.5, 0.5))
        b2 = complex(rng.uniform(1.2, 2.7) + (a1 + a2 - b1).real, rng.uniform(-0.5, 0.5))
        value = bilateral_h_star(BilateralParams(upper=[a1, a2], lower=[b1, b2], z=1)).value
        assert_allclose(value, dougall_closed_form(a1, a2, b1, b2), rtol=1e-10)


def test_dougall_divergence():
    with pytest.raises(DivergenceError):
        dougall_closed_form(0.5, 0.5, 1.0, 0.9)


def test_divergent_kappa():
    with pytest.raises(DivergenceError):
        bilateral_h_star(BilateralParams(upper=[0.5, 0.6], lower=[0.4, 0.3], z=cmath.exp(1j)))


@pytest.mark.slow
def test_unit_circle_against_brute_force():
    upper, lower = [0.2 + 0.1j, -0.3], [1.4, 1.2 - 0.2j]
    z = cmath.exp(2j)
    value = bilateral_h_star(BilateralParams(upper=upper, lower=lower, z=z)).value
    assert_allclose(value, _mp_h_star(upper, lower, z), rtol=1e-9)


def test_regularized_regime_matches_cesaro():
    params = BilateralParams(upper=[0.3, 0.1 + 0.2j], lower=[0.6, 0.5 - 0.1j], z=cmath.exp(2j))
    euler = bilateral_h_star(params)
    cesaro = bilateral_h_star(params, SummationMethod.cesaro)
    assert euler.status == SeriesStatus.regularized
    assert_allclose(euler.value, cesaro.value, rtol=1e-3)


def test_b2_equal_one_reduces_to_2f1():
    # with b2 = 1 the terms n <= -1 vanish and the series is 2F1(a1, a2; b1; z) / Gamma[1-a1, 1-a2, b1]
    a1, a2, b1 = 0.3 + 0.1j, -0.2, 1.7
    z = cmath.exp(2j)
    value = bilateral_h_star(BilateralParams(upper=[a1, a2], lower=[b1, 1.0], z=z)).value
    expected = complex(mpmath.hyp2f1(a1, a2, b1, z) * mpmath.rgamma(1 - a1) * mpmath.rgamma(1 - a2)
                       * mpmath.rgamma(b1))
    assert_allclose(value, expected, rtol=1e-9)


def test_finite_extent():
    assert finite_extent([-2.0 + 0j, 0.5], [0.7, 3.0 + 0j]) == (3, 2)
    assert finite_extent([0.5, 0.2], [0.7, 0.3]) == (None, None)


def test_finite_series_is_exact():
    upper, lower = [-2.0 + 0j, 0.5], [0.7, 3.0 + 0j]
    values, _, terms, status = bilateral_series(upper, lower, np.array([cmath.exp(1j)]))
    assert status == SeriesStatus.converged
    assert terms == 5
    assert_allclose(values[0], _mp_h_star(upper, lower, cmath.exp(1j), terms=10), rtol=1e-13)


def test_three_term_dependence():
    residual, scale = three_term_residual(0.2, -0.1 + 0.3j, 1.2, 1.1 - 0.2j, cmath.exp(2j), 0.1, -0.2 + 0.1j, 0.25)
    assert residual < 1e-9 * scale


def test_minus_z_power_branch():
    with pytest.raises(BranchError):
        minus_z_power(1.0, 0.3)
    assert_allclose(minus_z_power(-1.0, 0.7), 1.0)


def test_ode_residual():
    params = BilateralParams(upper=[0.2 + 0.1j, -0.3], lower=[1.1, 0.9 - 0.2j], z=cmath.exp(2j))
    assert bilateral_ode_residual(params) < 1e-6


def test_params_validation():
    with pytest.raises(ValueError):
        BilateralParams(upper=[0.1, 0.2], lower=[0.3], z=1)
    with pytest.raises(ValueError):
        BilateralParams(upper=[0.1, 0.2], lower=[0.3, 0.4], z=1.1)
