"""
Discrete spectrum for alpha > 1/2: the Romanovski functions

    Theta^k(x) = (1/2 + ix)^(-mu/2) (1/2 - ix)^(-conj(mu)/2) 2F1(-k, k - 2 alpha + 1; 1 - mu; 1/2 + ix)

for integers 0 <= k < alpha - 1/2, eigenfunctions of D with sigma = alpha - 1/2 - k.
"""
import logging
import math

import numpy as np
from scipy.special import roots_jacobi

from src.exceptions import RangeError
from src.models import Params
from src.series import hyp2f1_array
from src.special import gamma_product_ratio
from src.utils.constants import ROMANOVSKI_JACOBI_ORDER

from .base import Eigenfunction, Points, as_points

logger = logging.getLogger(__name__)


def discrete_indices(params: Params) -> range:
    """All k with 0 <= k < alpha - 1/2."""
    return range(max(0, math.ceil(params.alpha - 0.5)))


def check_index(params: Params, k: int) -> int:
    """
    Raises:
        RangeError: k outside 0 <= k < alpha - 1/2
    """
    k = int(k)
    if k < 0 or k >= params.alpha - 0.5:
        raise RangeError(f"k = {k} is outside 0 <= k < alpha - 1/2 = {params.alpha - 0.5}",
                         {"k": k, "alpha": params.alpha})
    return k


def discrete_sigma(params: Params, k: int) -> float:
    return params.alpha - 0.5 - check_index(params, k)


def _romanovski_values(params: Params, k: int, x: np.ndarray) -> np.ndarray:
    mu = params.mu
    p = 0.5 + 1j * x
    q = 0.5 - 1j * x
    weight = np.exp(-0.5 * mu * np.log(p) - 0.5 * mu.conjugate() * np.log(q))
    values, _, _ = hyp2f1_array(-k, k - 2 * params.alpha + 1, 1 - mu, p, one_minus_z=q)
    return weight * values


def romanovski_theta(params: Params, k: int, x: Points):
    """
    Evaluate Theta^k(x).

    Args:
        params: Parameters with alpha > 1/2
        k: Index, 0 <= k < alpha - 1/2
        x: Real point or array of points

    Raises:
        RangeError: k out of range
        ParameterPole: 1 - alpha - i beta is a nonpositive integer
    """
    k = check_index(params, k)
    points, scalar = as_points(x)
    values = _romanovski_values(params, k, points)
    if scalar:
        return complex(values[0])
    return values.reshape(np.shape(x))


def romanovski_norm_sq(params: Params, k: int) -> float:
    """
    ||Theta^k||^2 = 2 pi k! Gamma(2 alpha - k) / ((2 alpha - 2k - 1) Gamma(mu) Gamma(conj mu)).
    """
    k = check_index(params, k)
    mu = params.mu
    value = 2 * math.pi * math.factorial(k) * gamma_product_ratio([2 * params.alpha - k], [mu, mu.conjugate()])
    return float((value / (2 * params.alpha - 2 * k - 1)).real)


def romanovski_printed_norm(params: Params, k: int) -> float:
    """
    The norm expression k! Gamma(2 alpha - k) / ((2k - 2 alpha + 1) Gamma(mu) Gamma(conj mu)).

    It equals -1/(2 pi) times romanovski_norm_sq and is kept for comparison only.
    """
    k = check_index(params, k)
    mu = params.mu
    value = math.factorial(k) * gamma_product_ratio([2 * params.alpha - k], [mu, mu.conjugate()])
    return float((value / (2 * k - 2 * params.alpha + 1)).real)


def romanovski_phi_prefactor(params: Params, k: int) -> complex:
    """c with Theta^k = c Phi(alpha - 1/2 - k, -mu/2; .), c = k! Gamma(1 - conj mu + k) Gamma(1 - mu)."""
    k = check_index(params, k)
    mu = params.mu
    return math.factorial(k) * gamma_product_ratio([1 - mu.conjugate() + k, 1 - mu])


class Romanovski(Eigenfunction):
    """Theta^k, a square-integrable eigenfunction with sigma = alpha - 1/2 - k."""

    kind = "romanovski"

    def __init__(self, params: Params, k: int):
        self.k = check_index(params, k)
        super().__init__(params, discrete_sigma(params, self.k))

    @property
    def norm_sq(self) -> float:
        return romanovski_norm_sq(self.params, self.k)

    def _evaluate(self, x: np.ndarray) -> np.ndarray:
        return _romanovski_values(self.params, self.k, x)


def romanovski_coefficients(params: Params, k: int) -> np.ndarray:
    """Coefficients c_j of (1/2 + ix)^j in 2F1(-k, k - 2 alpha + 1; 1 - mu; 1/2 + ix)."""
    k = check_index(params, k)
    mu = params.mu
    coefficients = [1.0 + 0j]
    for j in range(k):
        coefficients.append(coefficients[-1] * (j - k) * (k - 2 * params.alpha + 1 + j) / ((1 - mu + j) * (j + 1)))
    return np.array(coefficients, dtype=complex)


def romanovski_gram(params: Params, k: int, l: int, order: int = ROMANOVSKI_JACOBI_ORDER) -> complex:
    """
    <Theta^k, Theta^l> by Gauss-Jacobi quadrature.

    With x = tan(theta)/2 the weight becomes (2 cos theta)^(2 alpha) e^(2 beta theta)
    and (1/2 + ix)^j (1/2 - ix)^m = e^(i(j - m) theta) (2 cos theta)^(-j - m), so
    every monomial pair is a Jacobi-weighted integral over theta = pi u / 2.
    """
    first = romanovski_coefficients(params, k)
    second = romanovski_coefficients(params, l)
    total = 0j
    for j, c in enumerate(first):
        for m, d in enumerate(second):
            exponent = 2 * params.alpha - 2 - j - m
            u, w = roots_jacobi(order, exponent, exponent)
            theta = 0.5 * math.pi * u
            smooth = (2.0 * np.cos(theta) / (1.0 - u * u)) ** exponent
            values = 2.0 * np.exp((2.0 * params.beta + 1j * (j - m)) * theta) * smooth
            total += c * d.conjugate() * 0.5 * math.pi * complex(w @ values)
    return total
