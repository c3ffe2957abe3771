import mpmath
import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.eigenfunctions import (
    EigenfunctionFactory,
    apply_D,
    derivative,
    ode_oracle,
    psi1,
    psi1_alternate,
    psi2,
    psi_difference_residual,
    schrodinger_residual,
    theta_basis,
    theta_basis_stable,
)
from src.eigenfunctions.phi import phi
from src.exceptions import DegenerateError, PoleError, RangeError
from src.models import Params, PhiMethod, SpectralPoint

SIGMA = 0.1 + 0.8j


def _mp_psi1(params, sigma, x):
    mu = mpmath.mpc(params.alpha, params.beta)
    p = mpmath.mpf(0.5) + 1j * mpmath.mpf(x)
    q = mpmath.mpf(0.5) - 1j * mpmath.mpf(x)
    prefactor = mpmath.power(p, mu / 2) * mpmath.power(q, -mu / 2 - mpmath.mpf(0.5) - sigma)
    return complex(prefactor * mpmath.hyp2f1(0.5 + params.alpha + sigma, 0.5 + 1j * params.beta + sigma,
                                             1 + mu, -p / q))


@pytest.mark.parametrize("x", [-4.0, -0.3, 0.0, 0.7, 25.0])
def test_psi1_matches_mpmath(params, x):
    assert_allclose(psi1(params, SIGMA, x), _mp_psi1(params, SIGMA, x), rtol=1e-10)


def test_psi2_is_mirrored_psi1(params):
    mirrored = Params.model_construct(alpha=-params.alpha, beta=-params.beta)
    for x in (-1.0, 0.5, 2.0):
        assert_allclose(psi2(params, SIGMA, x), _mp_psi1(mirrored, SIGMA, x), rtol=1e-10)


def test_array_shape_is_kept(params):
    x = np.linspace(-1.0, 1.0, 6).reshape(2, 3)
    assert psi1(params, SIGMA, x).shape == (2, 3)


@pytest.mark.parametrize("kind", ['phi', 'psi1', 'psi2', 'theta1', 'theta2'])
def test_d_residual(params, kind):
    function = EigenfunctionFactory.create_eigenfunction(kind, params, SIGMA, t=0.1 + 0.05j)
    for x in (-2.5, -0.4, 0.3, 1.7):
        value = function(x)
        assert abs(apply_D(params, function, x) - SIGMA ** 2 * value) <= 1e-6 * max(abs(value), abs(SIGMA ** 2 * value))


def test_ode_oracle_carries_psi1(params):
    f0 = psi1(params, SIGMA, 0.0)
    f0prime = derivative(lambda y: psi1(params, SIGMA, y), 0.0)
    for x1 in (0.5, 1.0, 2.0):
        value, _ = ode_oracle(params, SIGMA, 0.0, f0, f0prime, x1)
        assert_allclose(value, psi1(params, SIGMA, x1), rtol=1e-8)


def test_alternate_form(params):
    x = np.linspace(-0.45, 0.45, 7)
    assert_allclose(psi1_alternate(params, SIGMA, x), psi1(params, SIGMA, x), rtol=1e-10)


def test_alternate_form_range(params):
    with pytest.raises(RangeError):
        psi1_alternate(params, SIGMA, 0.5)


def test_phi_paths_agree(params):
    point = SpectralPoint(sigma=0.6j, t=0.1 - 0.1j)
    x = np.linspace(-2.0, 2.0, 9)
    direct = phi(params, point, x, PhiMethod.direct)
    connection = phi(params, point, x, PhiMethod.connection)
    assert_allclose(direct, connection, rtol=1e-8, atol=1e-8 * np.max(np.abs(connection)))


def test_psi_difference_relation(params):
    assert psi_difference_residual(params, SIGMA, 0.8) < 1e-9


def test_schrodinger_reduction(params):
    for y in (-1.5, 0.0, 0.9):
        assert schrodinger_residual(params, SIGMA, lambda x: psi1(params, SIGMA, x), y) < 1e-6


def test_sigma_exclusion(params):
    with pytest.raises(PoleError):
        EigenfunctionFactory.create_eigenfunction('psi1', params, 0.5)


def test_degenerate_parameters():
    with pytest.raises(DegenerateError):
        theta_basis(Params(alpha=0.0, beta=0.0), 0.7j, 0.3)


def test_real_line_only(params):
    with pytest.raises(RangeError):
        psi1(params, SIGMA, np.array([0.1, np.nan]))


def test_factory_errors(params):
    with pytest.raises(ValueError, match="Unsupported eigenfunction type: airy"):
        EigenfunctionFactory.create_eigenfunction('airy', params, SIGMA)
    with pytest.raises(ValueError):
        EigenfunctionFactory.create_eigenfunction('phi', params)
    with pytest.raises(ValueError):
        EigenfunctionFactory.create_eigenfunction('romanovski', params)
    assert 'romanovski' in EigenfunctionFactory.get_supported_types()


def test_jost_theta_matches_closed_form(params):
    x = np.linspace(-3.0, 3.0, 13)
    for nu in (0.4, 1.3):
        stable = theta_basis_stable(params, [nu], x)
        closed = theta_basis(params, 1j * nu, x)
        for a, b in zip(stable, closed):
            assert_allclose(a[0], b, rtol=0, atol=1e-7 * np.max(np.abs(b)))
