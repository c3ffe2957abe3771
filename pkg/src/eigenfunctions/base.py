"""
Base eigenfunction class with shared validation for all eigenfunction families.
"""
import logging
from abc import ABC, abstractmethod
from typing import Tuple, Union

import numpy as np

from src import settings
from src.exceptions import DegenerateError, PoleError, RangeError
from src.models import Params

logger = logging.getLogger(__name__)

Points = Union[float, np.ndarray]


def check_nondegenerate(params: Params) -> None:
    """
    Raises:
        DegenerateError: (alpha, beta) = (0, 0), where Psi_1 and Psi_2 coincide
    """
    if params.alpha == 0.0 and params.beta == 0.0:
        raise DegenerateError("(alpha, beta) = (0, 0) is the logarithmic case", {"alpha": 0.0, "beta": 0.0})


def check_sigma(sigma: complex) -> complex:
    """
    Reject sigma with 2 sigma within SIGMA_EXCLUSION of an integer.

    Raises:
        PoleError: Gamma(+-2 sigma) is singular or the solutions are logarithmic
    """
    sigma = complex(sigma)
    two_sigma = 2.0 * sigma
    if abs(two_sigma - round(two_sigma.real)) < settings.SIGMA_EXCLUSION:
        raise PoleError(f"2 sigma = {two_sigma} is too close to an integer", {"sigma": sigma})
    return sigma


def as_points(x: Points) -> Tuple[np.ndarray, bool]:
    """Real evaluation points as a 1-d array plus a flag telling whether x was a scalar."""
    scalar = np.ndim(x) == 0
    points = np.atleast_1d(np.asarray(x))
    if np.iscomplexobj(points):
        if np.any(points.imag != 0):
            raise RangeError("eigenfunctions are evaluated on the real line only", {})
        points = points.real
    points = points.astype(float)
    if not np.all(np.isfinite(points)):
        raise RangeError("non-finite evaluation point", {})
    return points, scalar


class Eigenfunction(ABC):
    """
    Abstract base class for solutions of D psi = sigma^2 psi.

    Subclasses implement _evaluate on a validated 1-d array of real points.
    """

    kind = "eigenfunction"

    def __init__(self, params: Params, sigma: complex):
        """
        Initialize the eigenfunction.

        Args:
            params: Parameters (alpha, beta) of the operator
            sigma: Spectral parameter; the eigenvalue is sigma^2
        """
        self.params = params
        self.sigma = complex(sigma)

    @property
    def eigenvalue(self) -> complex:
        return self.sigma * self.sigma

    def evaluate(self, x: Points):
        """
        Evaluate the eigenfunction.

        Args:
            x: Real point or array of real points

        Returns:
            Complex value, or an array with the shape of x
        """
        points, scalar = as_points(x)
        if points.size == 0:
            return np.zeros(0, dtype=complex)
        values = np.asarray(self._evaluate(points), dtype=complex)
        if scalar:
            return complex(values[0])
        return values.reshape(np.shape(x))

    def __call__(self, x: Points):
        return self.evaluate(x)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(alpha={self.params.alpha}, beta={self.params.beta}, sigma={self.sigma})"

    @abstractmethod
    def _evaluate(self, x: np.ndarray) -> np.ndarray:
        """
        Evaluate on validated points.

        Args:
            x: 1-d array of finite real points

        Returns:
            Complex array of the same length
        """
