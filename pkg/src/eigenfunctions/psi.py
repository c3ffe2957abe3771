"""
The hypergeometric solutions Psi_1 and Psi_2.

Psi_1(sigma; x) = (1/2 + ix)^(mu/2) (1/2 - ix)^(-mu/2 - 1/2 - sigma)
                  2F1(1/2 + alpha + sigma, 1/2 + i beta + sigma; 1 + mu; -(1/2 + ix)/(1/2 - ix))

with mu = alpha + i beta. Psi_2 is Psi_1 at (-alpha, -beta).
"""
import logging

import numpy as np

from src.exceptions import RangeError
from src.models import Params
from src.series import hyp2f1_array

from .base import Eigenfunction, Points, as_points, check_sigma

logger = logging.getLogger(__name__)


def _psi1_values(params: Params, sigma: complex, x: np.ndarray) -> np.ndarray:
    a, b = params.alpha, params.beta
    mu = complex(a, b)
    p = 0.5 + 1j * x
    q = 0.5 - 1j * x
    log_p, log_q = np.log(p), np.log(q)
    prefactor = np.exp(0.5 * mu * log_p - (0.5 * mu + 0.5 + sigma) * log_q)
    values, errors, terms = hyp2f1_array(0.5 + a + sigma, 0.5 + 1j * b + sigma, 1 + mu, -p / q, one_minus_z=1.0 / q)
    logger.debug("Psi_1 at %d points used %d series terms", x.size, terms)
    return prefactor * values


def _psi1_alternate_values(params: Params, sigma: complex, x: np.ndarray) -> np.ndarray:
    a, b = params.alpha, params.beta
    mu = complex(a, b)
    p = 0.5 + 1j * x
    q = 0.5 - 1j * x
    prefactor = np.exp(0.5 * mu * np.log(p) + 0.5 * mu.conjugate() * np.log(q))
    values, _, _ = hyp2f1_array(0.5 + a + sigma, 0.5 + a - sigma, 1 + mu, p, one_minus_z=q)
    return prefactor * values


def _shaped(values: np.ndarray, x: Points, scalar: bool):
    if scalar:
        return complex(values[0])
    return values.reshape(np.shape(x))


def psi1(params: Params, sigma: complex, x: Points):
    """
    Evaluate Psi_1(sigma; x).

    Args:
        params: Operator parameters; mirrored parameters give Psi_2
        sigma: Spectral parameter
        x: Real point or array of points

    Returns:
        Complex value or array shaped like x

    Raises:
        ParameterPole: 1 + alpha + i beta is a nonpositive integer
    """
    points, scalar = as_points(x)
    return _shaped(_psi1_values(params, complex(sigma), points), x, scalar)


def psi2(params: Params, sigma: complex, x: Points):
    """Psi_2(sigma; x) = Psi_1 at (-alpha, -beta)."""
    return psi1(params.mirrored(), sigma, x)


def psi1_alternate(params: Params, sigma: complex, x: Points):
    """
    Psi_1 through the Pfaff-transformed form with argument 1/2 + ix,
    (1/2 + ix)^(mu/2) (1/2 - ix)^(conj(mu)/2) 2F1(1/2 + alpha + sigma, 1/2 + alpha - sigma; 1 + mu; 1/2 + ix).

    Raises:
        RangeError: |x| >= 1/2, outside the disc where this form is used for cross-checks
    """
    points, scalar = as_points(x)
    if np.any(np.abs(points) >= 0.5):
        raise RangeError("the alternate form is restricted to |x| < 1/2", {"x": float(np.max(np.abs(points)))})
    return _shaped(_psi1_alternate_values(params, complex(sigma), points), x, scalar)


def psi_difference_residual(params: Params, sigma: complex, x: float) -> float:
    """
    Relative residual of the difference relation in sigma satisfied by Psi_1,

        -(1/2 + ix) Psi_1(sigma) = k_- Psi_1(sigma - 1) - (k_- + k_+) Psi_1(sigma) + k_+ Psi_1(sigma + 1)

    with k_- = (1/2 + alpha - sigma)(1/2 + i beta - sigma) / (-2 sigma (1 - 2 sigma)) and
    k_+ = (1/2 + alpha + sigma)(1/2 + i beta + sigma) / (2 sigma (1 + 2 sigma)).
    """
    sigma = check_sigma(sigma)
    a, b = params.alpha, params.beta
    k_minus = (0.5 + a - sigma) * (0.5 + 1j * b - sigma) / (-2 * sigma * (1 - 2 * sigma))
    k_plus = (0.5 + a + sigma) * (0.5 + 1j * b + sigma) / (2 * sigma * (1 + 2 * sigma))
    down, mid, up = (psi1(params, sigma + shift, x) for shift in (-1.0, 0.0, 1.0))
    lhs = -(0.5 + 1j * x) * mid
    rhs = k_minus * down - (k_minus + k_plus) * mid + k_plus * up
    scale = max(abs(lhs), abs(k_minus * down), abs(k_plus * up), 1e-300)
    return abs(lhs - rhs) / scale


class Psi1(Eigenfunction):
    """Psi_1, the solution with pure power behaviour at x = i/2."""

    kind = "psi1"

    def __init__(self, params: Params, sigma: complex):
        super().__init__(params, check_sigma(sigma))

    def _evaluate(self, x: np.ndarray) -> np.ndarray:
        return _psi1_values(self.params, self.sigma, x)


class Psi2(Psi1):
    """Psi_2, the mirror image of Psi_1."""

    kind = "psi2"

    def _evaluate(self, x: np.ndarray) -> np.ndarray:
        return _psi1_values(self.params.mirrored(), self.sigma, x)
