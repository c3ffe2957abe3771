"""
The kernel Phi(sigma, t; x) of the index transform.

    Phi(sigma, t; x) = (1/2 + ix)^t (1/2 - ix)^(-1/2 - t - sigma)
        2H2*[(1 - conj mu)/2 + sigma + t, (1 + conj mu)/2 + sigma + t;
             1 - mu/2 + t, 1 + mu/2 + t; -(1/2 + ix)/(1/2 - ix)]

The bilateral series has convergence exponent 2 Re sigma - 1, so it is summed
directly for Re sigma < 1/2; everywhere else Phi is formed from Psi_1 and
Psi_2 through the connection relation.
"""
import logging
from typing import Tuple

import numpy as np

from src.exceptions import DivergenceError
from src.models import Params, PhiMethod, SpectralPoint
from src.series import bilateral_series, bilateral_term_estimate, finite_extent
from src.utils.constants import PHI_DIRECT_TERM_BUDGET

from .base import Eigenfunction, Points, as_points, check_sigma
from .psi import _psi1_values
from .spectral import phi_connection_vector

logger = logging.getLogger(__name__)

_SNAP_TOL = 1e-12


def _snap(value: complex) -> complex:
    # rounding in sigma + t must not hide a terminating series
    nearest = complex(round(value.real), 0.0)
    return nearest if abs(value - nearest) < _SNAP_TOL else value


def bilateral_parameters(params: Params, sigma: complex, t: complex) -> Tuple[list, list]:
    """Upper and lower parameters of the 2H2* series defining Phi(sigma, t)."""
    mu = params.mu
    mu_bar = mu.conjugate()
    upper = [(1 - mu_bar) / 2 + sigma + t, (1 + mu_bar) / 2 + sigma + t]
    lower = [1 - mu / 2 + t, 1 + mu / 2 + t]
    return [_snap(a) for a in upper], [_snap(b) for b in lower]


def _phi_direct(params: Params, sigma: complex, t: complex, x: np.ndarray) -> np.ndarray:
    upper, lower = bilateral_parameters(params, sigma, t)
    p = 0.5 + 1j * x
    q = 0.5 - 1j * x
    values, _, terms, status = bilateral_series(upper, lower, -p / q)
    logger.debug("Phi direct: %d terms, status %s", terms, status.value)
    return np.exp(t * np.log(p) - (0.5 + t + sigma) * np.log(q)) * values


def _phi_connection(params: Params, sigma: complex, t: complex, x: np.ndarray) -> np.ndarray:
    sigma = check_sigma(sigma)
    c1, c2 = phi_connection_vector(params, sigma, t)
    return c1 * _psi1_values(params, sigma, x) + c2 * _psi1_values(params.mirrored(), sigma, x)


def choose_method(params: Params, sigma: complex, t: complex, x: np.ndarray) -> PhiMethod:
    """
    Direct summation when the series is finite, or convergent and within the
    term budget; the connection relation otherwise.
    """
    upper, lower = bilateral_parameters(params, sigma, t)
    kappa = 2.0 * sigma.real - 1.0
    u = -(0.5 + 1j * x) / (0.5 - 1j * x)
    estimate = bilateral_term_estimate(upper, lower, u)
    finite = all(v is not None for v in finite_extent(upper, lower))
    if finite or (kappa < 0.0 and estimate <= PHI_DIRECT_TERM_BUDGET):
        return PhiMethod.direct
    return PhiMethod.connection


def phi(params: Params, pt: SpectralPoint, x: Points, method: PhiMethod = PhiMethod.auto):
    """
    Evaluate Phi(sigma, t; x).

    Args:
        params: Operator parameters
        pt: Spectral point (sigma, t)
        x: Real point or array of points
        method: auto, direct (2H2* summation) or connection (Psi_1, Psi_2)

    Returns:
        Complex value or array shaped like x

    Raises:
        DivergenceError: direct path with 2 Re sigma - 1 >= 0
        DegenerateError: connection path with alpha + i beta an integer
        PoleError: connection path with 2 sigma near an integer
    """
    points, scalar = as_points(x)
    sigma, t = complex(pt.sigma), complex(pt.t)
    if method == PhiMethod.auto:
        method = choose_method(params, sigma, t, points)
    if method == PhiMethod.direct:
        values = _phi_direct(params, sigma, t, points)
    else:
        values = _phi_connection(params, sigma, t, points)
    if scalar:
        return complex(values[0])
    return values.reshape(np.shape(x))


class Phi(Eigenfunction):
    """Phi(sigma, t; .) as an eigenfunction object."""

    kind = "phi"

    def __init__(self, params: Params, sigma: complex, t: complex = 0j, method: PhiMethod = PhiMethod.auto):
        super().__init__(params, sigma)
        self.t = complex(t)
        self.method = method

    @property
    def point(self) -> SpectralPoint:
        return SpectralPoint(sigma=self.sigma, t=self.t)

    def _evaluate(self, x: np.ndarray) -> np.ndarray:
        try:
            return np.atleast_1d(phi(self.params, self.point, x, self.method))
        except DivergenceError:
            if self.method != PhiMethod.auto:
                raise
            return _phi_connection(self.params, self.sigma, self.t, x)
