"""
Jost solutions normalized at x = +infinity and the stable theta basis.

    J_-(sigma; x) = e^{-i pi/4} gamma(alpha, beta, sigma)^{-1} (1/2 + ix)^(mu/2) (1/2 - ix)^(-mu/2 - 1/2 - sigma)
                    2F1(1/2 + alpha + sigma, 1/2 + i beta + sigma; 1 + 2 sigma; 1/(1/2 - ix))

behaves like x^(-1/2-sigma) (1 + O(1/x)), and J_+(sigma) = J_-(-sigma). For
sigma = i nu both are of order one on the whole line, unlike Psi_1 and Psi_2
which grow like exp(pi nu / 2) and become nearly parallel. The series is
summed where |1/(1/2 - ix)| is small, and the solutions are carried to the
requested points by DOP853 on the first-order system of D psi = sigma^2 psi,
vectorized over a chunk of nu values.

Then theta_1 = B J_+ and theta_2 = C J_+ + J_- with B, C from the scattering matrix.
"""
import cmath
import logging
import math
from typing import Tuple

import numpy as np
from scipy.integrate import solve_ivp

from src import settings
from src.exceptions import StepFailure
from src.models import Params
from src.series import hyp2f1_array
from src.utils.constants import JOST_CHUNK, JOST_START_FACTOR, JOST_START_MIN

from .base import check_nondegenerate, check_sigma
from .operator import first_order_system
from .spectral import phase, psi_asymptotic_coeffs, scattering_matrix

logger = logging.getLogger(__name__)


def jost_initial_data(params: Params, sigma: complex, x0: float) -> Tuple[complex, complex]:
    """
    J_-(sigma; x0) and its derivative from the 2F1 representation.

    J_+ is obtained by passing -sigma.
    """
    sigma = check_sigma(sigma)
    a, b = params.alpha, params.beta
    mu = complex(a, b)
    p = 0.5 + 1j * x0
    q = 0.5 - 1j * x0
    w = 1.0 / q
    upper_a, upper_b, lower_c = 0.5 + a + sigma, 0.5 + 1j * b + sigma, 1 + 2 * sigma
    value, _, _ = hyp2f1_array(upper_a, upper_b, lower_c, [w])
    shifted, _, _ = hyp2f1_array(upper_a + 1, upper_b + 1, lower_c + 1, [w])
    norm = cmath.exp(-0.25j * math.pi) / phase(a, b, sigma)
    prefactor = norm * cmath.exp(0.5 * mu * cmath.log(p) - (0.5 * mu + 0.5 + sigma) * cmath.log(q))
    log_derivative = 0.5j * mu / p + 1j * (0.5 * mu + 0.5 + sigma) / q
    f = complex(value[0])
    f_prime = upper_a * upper_b / lower_c * complex(shifted[0]) * 1j / (q * q)
    return prefactor * f, prefactor * (log_derivative * f + f_prime)


def _start_point(nu_max: float, x_max: float) -> float:
    return max(JOST_START_MIN, JOST_START_FACTOR * nu_max, x_max)


def _jost_chunk(params: Params, nu: np.ndarray, x_desc: np.ndarray) -> np.ndarray:
    """Values of (J_+, J_-) for one chunk, shape (2, len(nu), len(x_desc))."""
    n = nu.size
    sigma = 1j * nu
    x0 = _start_point(float(np.max(nu)), float(x_desc[0]))
    y1 = np.zeros(2 * n, dtype=complex)
    y2 = np.zeros(2 * n, dtype=complex)
    for i, s in enumerate(sigma):
        for block, sign in ((0, -1.0), (1, 1.0)):
            value, slope = jost_initial_data(params, sign * s, x0)
            y1[block * n + i] = value
            y2[block * n + i] = (0.25 + x0 * x0) * slope
    sigma_squared = np.concatenate([sigma * sigma, sigma * sigma])
    solution = solve_ivp(first_order_system(params, sigma_squared), (x0, float(x_desc[-1]) - 1e-12),
                         np.concatenate([y1, y2]), method="DOP853", t_eval=x_desc,
                         rtol=settings.ODE_RTOL, atol=settings.ODE_ATOL)
    if not solution.success:
        raise StepFailure(f"Jost integration failed: {solution.message}", {"nu_max": float(np.max(nu))})
    logger.debug("Jost chunk nu <= %.3g: start %.3g, %d evaluations", float(np.max(nu)), x0, solution.nfev)
    values = solution.y[:2 * n, :]
    return values.reshape(2, n, x_desc.size)


def jost_solutions(params: Params, nu, x) -> Tuple[np.ndarray, np.ndarray]:
    """
    J_+(i nu; x) and J_-(i nu; x) on a grid.

    Args:
        params: Operator parameters
        nu: 1-d array of positive spectral values
        x: 1-d array of real points

    Returns:
        (J_plus, J_minus), each of shape (len(nu), len(x))

    Raises:
        StepFailure: the integrator could not reach the tolerance
    """
    nu = np.atleast_1d(np.asarray(nu, dtype=float))
    x = np.atleast_1d(np.asarray(x, dtype=float))
    ascending = np.unique(x)
    x_desc = ascending[::-1]
    position = ascending.size - 1 - np.searchsorted(ascending, x)
    nu_order = np.argsort(nu)
    j_plus = np.zeros((nu.size, x.size), dtype=complex)
    j_minus = np.zeros((nu.size, x.size), dtype=complex)
    for start in range(0, nu.size, JOST_CHUNK):
        block = nu_order[start:start + JOST_CHUNK]
        values = _jost_chunk(params, nu[block], x_desc)
        j_plus[block] = values[0][:, position]
        j_minus[block] = values[1][:, position]
    return j_plus, j_minus


def jost_psi_coefficients(params: Params, sigma: complex) -> np.ndarray:
    """2x2 array K with (Psi_1, Psi_2) = K (J_+, J_-)."""
    rows = []
    for p in (params, params.mirrored()):
        r_minus, r_plus, _, _ = psi_asymptotic_coeffs(p, sigma)
        rows.append([r_plus, r_minus])
    return np.array(rows, dtype=complex)


def jost_theta_coefficients(params: Params, sigma: complex) -> np.ndarray:
    """2x2 array with (theta_1, theta_2) = T (J_+, J_-)."""
    check_nondegenerate(params)
    scattering = scattering_matrix(params, sigma)
    return np.array([[scattering.m12, 0.0], [scattering.m22, 1.0]], dtype=complex)


def theta_basis_stable(params: Params, nu, x) -> Tuple[np.ndarray, np.ndarray]:
    """
    theta_1(i nu; x) and theta_2(i nu; x) on a grid through the Jost solutions.

    Returns:
        (theta_1, theta_2), each of shape (len(nu), len(x))
    """
    nu = np.atleast_1d(np.asarray(nu, dtype=float))
    j_plus, j_minus = jost_solutions(params, nu, x)
    first = np.zeros_like(j_plus)
    second = np.zeros_like(j_plus)
    for i, v in enumerate(nu):
        t = jost_theta_coefficients(params, 1j * v)
        first[i] = t[0, 0] * j_plus[i]
        second[i] = t[1, 0] * j_plus[i] + j_minus[i]
    return first, second
