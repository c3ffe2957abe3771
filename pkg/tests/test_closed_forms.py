import pytest
from numpy.testing import assert_allclose

from src.exceptions import DivergenceError
from src.transform import (
    beta_integral,
    beta_integral_quadrature,
    closed_form_transform_power,
    transform_power_p_reduced,
    transform_power_q_reduced,
    truncated_power_quadrature,
)

SIGMA, T = 0.4j, 0.1


@pytest.mark.parametrize("mu, nu", [(1.5, 1.5), (1.3 + 0.4j, 1.8 - 0.7j), (2.0 - 1.0j, 1.25)])
def test_beta_integral(mu, nu):
    assert_allclose(beta_integral_quadrature(mu, nu), beta_integral(mu, nu), rtol=1e-9)


def test_beta_integral_diverges():
    with pytest.raises(DivergenceError):
        beta_integral(0.5, 0.5)


def test_q_reduced(params):
    p = 2.2 + 0.1j
    q = -params.mu.conjugate() / 2
    assert_allclose(closed_form_transform_power(params, p, q, SIGMA, T),
                    transform_power_q_reduced(params, p, SIGMA, T), rtol=1e-9)


def test_p_reduced(params):
    q = 2.2 - 0.1j
    p = params.mu / 2
    assert_allclose(closed_form_transform_power(params, p, q, SIGMA, T),
                    transform_power_p_reduced(params, q, SIGMA, T), rtol=1e-9)


def test_slow_decay_is_rejected(params):
    with pytest.raises(DivergenceError):
        truncated_power_quadrature(params, 0.2, 0.2, SIGMA, T)


@pytest.mark.slow
def test_quadrature_against_series(params):
    expected = closed_form_transform_power(params, 1.4, 1.6, SIGMA, T)
    value, _ = truncated_power_quadrature(params, 1.4, 1.6, SIGMA, T, cutoff=200.0)
    assert_allclose(value, expected, rtol=1e-5)
