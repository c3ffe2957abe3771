"""
The difference operator Z, the image of multiplication by ix under J.

Kernel level, with sigma unconjugated:

    -ix Phi(sigma, t; x) = c_-(sigma) Phi(sigma - 1) - c_0(sigma) Phi(sigma) + c_+(sigma) Phi(sigma + 1)

Transform level, with coefficients evaluated at conj(sigma):

    Z F(sigma, t) = c_-(conj sigma) F(sigma - 1, t) + c_0(conj sigma) F(sigma, t) + c_+(conj sigma) F(sigma + 1, t)

where

    c_-(w) = (1/2 + alpha - w)(1/2 - alpha - w)(1/2 + i beta - w)(1/2 - i beta - w) / ((-2w)(1 - 2w))
    c_0(w) = 2 i alpha beta / ((2w - 1)(2w + 1))
    c_+(w) = 1 / (2w (1 + 2w))
"""
import logging
from typing import Callable, Tuple

import numpy as np

from src.eigenfunctions import Phi
from src.eigenfunctions.base import Points, as_points
from src.exceptions import PoleError
from src.models import Params
from src.utils.constants import DIFFERENCE_POLE_TOL

logger = logging.getLogger(__name__)


def difference_coefficients(params: Params, w: complex) -> Tuple[complex, complex, complex]:
    """
    (c_-(w), c_0(w), c_+(w)).

    Raises:
        PoleError: 2w in {0, 1, -1}
    """
    w = complex(w)
    for pole in (0.0, 1.0, -1.0):
        if abs(2.0 * w - pole) < DIFFERENCE_POLE_TOL:
            raise PoleError(f"difference coefficients have a pole at 2 sigma = {pole:g}", {"sigma": w})
    a, b = params.alpha, params.beta
    lower = (0.5 + a - w) * (0.5 - a - w) * (0.5 + 1j * b - w) * (0.5 - 1j * b - w) / ((-2.0 * w) * (1.0 - 2.0 * w))
    middle = 2j * a * b / ((2.0 * w - 1.0) * (2.0 * w + 1.0))
    upper = 1.0 / (2.0 * w * (1.0 + 2.0 * w))
    return lower, middle, upper


def kernel_difference(params: Params, sigma: complex, t: complex, x: Points):
    """
    Both sides of the kernel identity.

    Returns:
        (-ix Phi(sigma, t; x), three-term combination), each shaped like x

    Raises:
        PoleError: 2 sigma in {0, 1, -1}
    """
    sigma = complex(sigma)
    c_minus, c_zero, c_plus = difference_coefficients(params, sigma)
    points, scalar = as_points(x)
    centre = Phi(params, sigma, t)(points)
    lhs = -1j * points * centre
    rhs = (c_minus * Phi(params, sigma - 1.0, t)(points) - c_zero * centre
           + c_plus * Phi(params, sigma + 1.0, t)(points))
    if scalar:
        return complex(lhs[0]), complex(rhs[0])
    return lhs.reshape(np.shape(x)), rhs.reshape(np.shape(x))


def difference_operator_z(params: Params, F: Callable[[complex, complex], complex], sigma: complex, t: complex) -> complex:
    """
    Apply Z to a function F(sigma, t) at one point.

    Args:
        params: Operator parameters
        F: Callable (sigma, t) -> complex, typically a forward transform
        sigma: Spectral parameter; F is read at sigma - 1, sigma and sigma + 1
        t: Label, passed through unchanged

    Raises:
        PoleError: 2 conj(sigma) in {0, 1, -1}
    """
    sigma = complex(sigma)
    c_minus, c_zero, c_plus = difference_coefficients(params, sigma.conjugate())
    value = c_minus * F(sigma - 1.0, t) + c_zero * F(sigma, t) + c_plus * F(sigma + 1.0, t)
    logger.debug("Z F at sigma=%s, t=%s: %s", sigma, t, value)
    return complex(value)
