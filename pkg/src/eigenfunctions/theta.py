"""
Scattering basis theta_1, theta_2 written through Psi_1 and Psi_2.

    theta_1 = -(e^{3 pi i/4} / 2 pi) (m(alpha, beta, sigma) M(alpha, beta, sigma) Psi_1
                                      + m(-alpha, -beta, sigma) M(-alpha, -beta, sigma) Psi_2)
    theta_2 =  (e^{pi i/4} / 2 pi)   (m(-alpha, -beta, -sigma) M(alpha, beta, sigma) Psi_1
                                      + m(alpha, beta, -sigma) M(-alpha, -beta, sigma) Psi_2)

with m(alpha, beta, sigma) = exp{(pi/2)(-i alpha + beta + i sigma)} and
M(alpha, beta, sigma) = Gamma[-alpha - i beta, 1/2 + alpha - sigma, 1/2 + i beta - sigma / -2 sigma].
"""
import cmath
import logging
import math
from typing import Tuple

import numpy as np

from src.models import Params
from src.special import gamma_product_ratio

from .base import Eigenfunction, Points, as_points, check_nondegenerate, check_sigma
from .psi import _psi1_values
from .spectral import psi_asymptotic_coeffs

logger = logging.getLogger(__name__)


def _m(alpha: float, beta: float, sigma: complex) -> complex:
    return cmath.exp(0.5 * math.pi * (-1j * alpha + beta + 1j * sigma))


def _big_m(alpha: float, beta: float, sigma: complex) -> complex:
    mu = complex(alpha, beta)
    return gamma_product_ratio([-mu, 0.5 + alpha - sigma, 0.5 + 1j * beta - sigma], [-2 * sigma])


def theta_coefficients(params: Params, sigma: complex) -> np.ndarray:
    """
    2x2 array T with (theta_1, theta_2) = T (Psi_1, Psi_2).

    Raises:
        DegenerateError: (alpha, beta) = (0, 0)
        PoleError: 2 sigma near an integer or alpha + i beta at a Gamma pole
    """
    check_nondegenerate(params)
    sigma = check_sigma(sigma)
    a, b = params.alpha, params.beta
    big_plus = _big_m(a, b, sigma)
    big_minus = _big_m(-a, -b, sigma)
    first = -cmath.exp(0.75j * math.pi) / (2 * math.pi)
    second = cmath.exp(0.25j * math.pi) / (2 * math.pi)
    return np.array([
        [first * _m(a, b, sigma) * big_plus, first * _m(-a, -b, sigma) * big_minus],
        [second * _m(-a, -b, -sigma) * big_plus, second * _m(a, b, -sigma) * big_minus],
    ], dtype=complex)


def theta_asymptotic_coeffs(params: Params, sigma: complex) -> np.ndarray:
    """
    Leading coefficients of theta_1 and theta_2, one row each, in the order of
    psi_asymptotic_coeffs: (r_minus, r_plus, l_minus, l_plus).
    """
    transform = theta_coefficients(params, sigma)
    psi = np.vstack([psi_asymptotic_coeffs(params, sigma), psi_asymptotic_coeffs(params.mirrored(), sigma)])
    return transform @ psi


def _theta_values(params: Params, sigma: complex, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    transform = theta_coefficients(params, sigma)
    psi_1 = _psi1_values(params, sigma, x)
    psi_2 = _psi1_values(params.mirrored(), sigma, x)
    return transform[0, 0] * psi_1 + transform[0, 1] * psi_2, transform[1, 0] * psi_1 + transform[1, 1] * psi_2


def theta_basis(params: Params, sigma: complex, x: Points):
    """
    Evaluate (theta_1, theta_2) from their Psi expansions.

    For sigma = i nu with large nu both terms of each combination are of size
    exp(pi nu / 2) while theta_2 stays of order one, so this form is meant for
    moderate nu; jost.theta_basis_stable covers the whole spectral range.

    Returns:
        (theta_1, theta_2), complex values or arrays shaped like x
    """
    points, scalar = as_points(x)
    first, second = _theta_values(params, complex(sigma), points)
    if scalar:
        return complex(first[0]), complex(second[0])
    return first.reshape(np.shape(x)), second.reshape(np.shape(x))


class Theta1(Eigenfunction):
    """theta_1: incoming from the left, transmitted to the right."""

    kind = "theta1"
    row = 0

    def __init__(self, params: Params, sigma: complex):
        check_nondegenerate(params)
        super().__init__(params, check_sigma(sigma))

    def _evaluate(self, x: np.ndarray) -> np.ndarray:
        return _theta_values(self.params, self.sigma, x)[self.row]


class Theta2(Theta1):
    """theta_2: incoming from the right."""

    kind = "theta2"
    row = 1
