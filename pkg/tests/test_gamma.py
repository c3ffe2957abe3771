import cmath
import math

import mpmath
import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.exceptions import PoleError, RangeError
from src.models import GammaRatioSpec
from src.special import (
    complex_gamma,
    gamma_product_ratio,
    gamma_ratio,
    half_power,
    log_gamma,
    pochhammer,
    reciprocal_gamma,
    weight_powers,
)


@pytest.mark.parametrize("z", [0.5, 1.0, 3.7, 0.3 + 0.4j, -2.5 + 1.1j, 10 - 7j, -14.3 + 0.2j, 40 + 30j])
def test_gamma_matches_mpmath(z):
    expected = complex(mpmath.gamma(mpmath.mpc(z)))
    assert_allclose(complex_gamma(z), expected, rtol=1e-12)


def test_gamma_half():
    assert_allclose(complex_gamma(0.5), math.sqrt(math.pi), rtol=1e-14)


@pytest.mark.parametrize("z", [0, -1, -7])
def test_gamma_poles(z):
    with pytest.raises(PoleError):
        complex_gamma(z)


def test_gamma_range():
    with pytest.raises(RangeError):
        complex_gamma(250.0)


def test_log_gamma_large_argument():
    z = 150 + 20j
    expected = complex(mpmath.loggamma(mpmath.mpc(z)))
    value = log_gamma(z)
    assert abs(value.real - expected.real) < 1e-10 * abs(expected.real)
    assert abs(cmath.exp(1j * (value.imag - expected.imag)) - 1) < 1e-9


def test_reciprocal_gamma_zeros_and_identity(rng):
    for n in range(0, 6):
        assert reciprocal_gamma(-n) == 0
    z = rng.uniform(-10, 10, 20) + 1j * rng.uniform(-10, 10, 20)
    for value in z:
        assert abs(complex_gamma(value) * reciprocal_gamma(value) - 1) < 1e-12


def test_reciprocal_gamma_near_pole():
    z = -3 + 1e-9
    expected = complex(mpmath.rgamma(mpmath.mpf(z)))
    assert_allclose(reciprocal_gamma(z), expected, rtol=1e-5)


def test_reciprocal_gamma_array():
    z = np.array([0.5, -1.0, 2.0 + 1j])
    assert_allclose(reciprocal_gamma(z), [1 / math.sqrt(math.pi), 0.0, 1 / complex(mpmath.gamma(2 + 1j))],
                    rtol=1e-12, atol=1e-300)


def test_gamma_ratio_denominator_pole_is_zero():
    assert gamma_ratio(GammaRatioSpec(numerators=[1.5], denominators=[-2.0])) == 0


def test_gamma_ratio_numerator_pole_raises():
    with pytest.raises(PoleError):
        gamma_product_ratio([-3.0], [1.0])


def test_gamma_ratio_log_space():
    value = gamma_product_ratio([120.5 + 3j], [119.5 + 3j])
    assert_allclose(value, 119.5 + 3j, rtol=1e-10)


def test_gamma_ratio_empty():
    assert gamma_product_ratio() == 1


@pytest.mark.parametrize("a,n", [(0.3 + 0.2j, 4), (2.5, -3), (-1.5 + 1j, -5), (1.0, 0)])
def test_pochhammer_matches_gamma_quotient(a, n):
    expected = complex(mpmath.rf(mpmath.mpc(a), n))
    assert_allclose(pochhammer(a, n), expected, rtol=1e-13)


def test_pochhammer_negative_pole():
    with pytest.raises(PoleError):
        pochhammer(2.0, -3)


def test_half_power_branches():
    x = np.array([-3.0, 0.0, 2.5])
    tau = 0.3 - 0.8j
    assert_allclose(half_power(x, tau, "plus") * half_power(x, -tau, "plus"), 1.0, rtol=1e-13)
    assert_allclose(half_power(x, tau, "minus"), np.conj(half_power(x, np.conj(tau), "plus")), rtol=1e-13)
    assert_allclose(weight_powers(x, tau, 0.0), half_power(x, tau, "plus"), rtol=1e-13)
