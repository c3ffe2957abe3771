import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.eigenfunctions import (
    delta11_from_asymptotics,
    delta_determinant,
    gram_from_asymptotics,
    gram_matrix_delta,
    phi_gram_from_delta,
    phi_gram_matrix,
    phi_inner_product_expansion,
    scattering_matrix,
    spectral_density_r,
    spectral_matrix_xi,
    theta_asymptotic_coeffs,
    v_sigma_inner_product,
)
from src.exceptions import DegenerateError
from src.models import Params
from src.transform import Basis, inverse_integrand, preset, sample_transform

SIGMAS = [0.15j, 0.8j, 2.5j]


@pytest.mark.parametrize("sigma", SIGMAS)
def test_delta_is_hermitian_with_closed_determinant(params, sigma):
    delta = gram_matrix_delta(params, sigma)
    assert delta.hermitian_defect() <= 1e-10 * np.max(np.abs(delta.to_array()))
    assert_allclose(delta.det(), delta_determinant(params, sigma), rtol=1e-10)


@pytest.mark.parametrize("sigma", SIGMAS)
def test_delta_from_leading_coefficients(params, sigma):
    delta = gram_matrix_delta(params, sigma).to_array()
    assert_allclose(gram_from_asymptotics(params, sigma).to_array(), delta, rtol=1e-10, atol=1e-10 * np.max(np.abs(delta)))
    assert_allclose(delta11_from_asymptotics(params, sigma), delta[0, 0], rtol=1e-10)


@pytest.mark.parametrize("sigma", SIGMAS)
def test_xi_inverts_delta(params, sigma):
    product = spectral_matrix_xi(params, sigma).to_array() @ gram_matrix_delta(params, sigma).to_array()
    assert_allclose(product, np.eye(2), atol=1e-10)


@pytest.mark.parametrize("sigma", SIGMAS)
def test_r_inverts_phi_gram(params, sigma):
    t, s = 0.1, 0.37 + 0.2j
    product = spectral_density_r(params, sigma, t, s).to_array() @ phi_gram_matrix(params, sigma, t, s).to_array()
    assert_allclose(product, np.eye(2), atol=1e-10)


def test_phi_gram_two_paths(params):
    t, s = 0.1 - 0.2j, 0.6 + 0.1j
    closed = phi_gram_matrix(params, 0.9j, t, s).to_array()
    assembled = phi_gram_from_delta(params, 0.9j, t, s).to_array()
    assert_allclose(assembled, closed, rtol=1e-10, atol=1e-10 * np.max(np.abs(closed)))


def test_trigonometric_expansion(params):
    lhs, rhs = phi_inner_product_expansion(params, 0.7j, 0.2 + 0.1j, -0.3 + 0.4j)
    assert_allclose(lhs, rhs, rtol=1e-12)


def test_integer_label_difference(params):
    with pytest.raises(DegenerateError):
        spectral_density_r(params, 0.7j, 0.1, 1.1)


def test_zero_parameters_are_degenerate():
    with pytest.raises(DegenerateError):
        gram_matrix_delta(Params(alpha=0.0, beta=0.0), 0.7j)


@pytest.mark.parametrize("sigma", SIGMAS)
def test_scattering_matrix_unitary_and_symmetric(params, sigma):
    matrix = scattering_matrix(params, sigma)
    array = matrix.to_array()
    assert_allclose(array.conj().T @ array, np.eye(2), atol=1e-10)
    assert abs(matrix.m12 - matrix.m21) <= 1e-14 * abs(matrix.m12)


def test_theta_basis_is_orthonormal(params):
    rows = theta_asymptotic_coeffs(params, 1.1j)
    gram = np.array([[v_sigma_inner_product(u, v) for v in rows] for u in rows])
    assert_allclose(gram, np.eye(2), atol=1e-10)


@pytest.mark.slow
def test_literal_and_theta_integrands_agree(params):
    sample = sample_transform(params, preset('smooth_bump'), nu_max=2.0)
    x = np.linspace(-1.0, 1.0, 5)
    literal = inverse_integrand(params, sample, x, Basis.phi)
    stable = inverse_integrand(params, sample, x, Basis.theta)
    assert_allclose(literal, stable, rtol=0, atol=1e-8 * np.max(np.abs(stable)))
