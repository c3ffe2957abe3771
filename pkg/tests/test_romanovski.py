import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.eigenfunctions import (
    Phi,
    Romanovski,
    apply_D,
    discrete_indices,
    romanovski_gram,
    romanovski_norm_sq,
    romanovski_phi_prefactor,
    romanovski_printed_norm,
    romanovski_theta,
)
from src.exceptions import RangeError
from src.transform import discrete_coefficient


def test_indices(discrete_params, params):
    assert list(discrete_indices(discrete_params)) == [0, 1]
    assert list(discrete_indices(params)) == []


def test_index_out_of_range(discrete_params):
    with pytest.raises(RangeError):
        Romanovski(discrete_params, 2)


def test_orthogonality(discrete_params):
    scale = math.sqrt(romanovski_norm_sq(discrete_params, 0) * romanovski_norm_sq(discrete_params, 1))
    assert abs(romanovski_gram(discrete_params, 0, 1)) <= 1e-8 * scale


@pytest.mark.parametrize("k", [0, 1])
def test_norm(discrete_params, k):
    assert_allclose(romanovski_gram(discrete_params, k, k), romanovski_norm_sq(discrete_params, k), rtol=1e-8)


@pytest.mark.parametrize("k", [0, 1])
def test_printed_norm_differs_by_constant(discrete_params, k):
    ratio = romanovski_printed_norm(discrete_params, k) / romanovski_norm_sq(discrete_params, k)
    assert_allclose(ratio, -1.0 / (2.0 * math.pi), rtol=1e-12)


@pytest.mark.parametrize("k", [0, 1])
def test_eigenvalue(discrete_params, k):
    function = Romanovski(discrete_params, k)
    assert_allclose(function.sigma, discrete_params.alpha - 0.5 - k)
    for x in (-2.0, 0.3, 1.4):
        value = function(x)
        residual = apply_D(discrete_params, function, x) - function.sigma ** 2 * value
        assert abs(residual) <= 1e-6 * max(abs(value), abs(function.sigma ** 2 * value))


@pytest.mark.parametrize("k", [0, 1])
def test_phi_prefactor(discrete_params, k):
    x = np.linspace(-3.0, 3.0, 7)
    kernel = Phi(discrete_params, discrete_params.alpha - 0.5 - k, -discrete_params.mu / 2)
    assert_allclose(romanovski_theta(discrete_params, k, x),
                    romanovski_phi_prefactor(discrete_params, k) * kernel(x), rtol=1e-8)


def test_discrete_coefficient_of_theta0(discrete_params):
    def theta0(x):
        return romanovski_theta(discrete_params, 0, x)

    assert abs(discrete_coefficient(discrete_params, theta0, (-50.0, 50.0), 0) - 1.0) < 1e-3
    assert abs(discrete_coefficient(discrete_params, theta0, (-50.0, 50.0), 1)) < 1e-3
