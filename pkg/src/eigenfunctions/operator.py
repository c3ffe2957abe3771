"""
The operator D = d/dx (1/4 + x^2) d/dx + potential, its finite-difference
application and an ODE oracle for D psi = sigma^2 psi.
"""
import logging
from typing import Callable, Tuple

import numpy as np
from scipy.integrate import solve_ivp

from src import settings
from src.exceptions import StepFailure
from src.models import Params

logger = logging.getLogger(__name__)

# fourth-order central stencils on x + h * (-2, -1, 0, 1, 2)
_FIRST = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
_SECOND = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0
_OFFSETS = np.arange(-2, 3)


def potential(params: Params, x):
    """(alpha + i beta)^2 / (4(1/2 + ix)) + (alpha - i beta)^2 / (4(1/2 - ix)) + 1/4."""
    mu = complex(params.alpha, params.beta)
    x = np.asarray(x, dtype=float)
    value = mu * mu / (4.0 * (0.5 + 1j * x)) + mu.conjugate() ** 2 / (4.0 * (0.5 - 1j * x)) + 0.25
    if np.ndim(value) == 0:
        return complex(value)
    return value


def _stencil(f: Callable, x: float, h: float) -> np.ndarray:
    return np.array([complex(f(x + k * h)) for k in _OFFSETS])


def derivative(f: Callable, x: float, h: float = None) -> complex:
    """Fourth-order central first derivative of f at x."""
    h = settings.FD_STEP if h is None else h
    return complex(_FIRST @ _stencil(f, x, h) / h)


def apply_D(params: Params, f: Callable, x: float, h: float = None) -> complex:
    """
    Apply D to f at x.

    The derivative part (1/4 + x^2) f'' + 2x f' uses fourth-order central
    differences with step h; the potential is evaluated exactly.

    Args:
        params: Operator parameters
        f: Callable returning a complex value at a real point
        x: Evaluation point
        h: Step, settings.FD_STEP by default

    Returns:
        (D f)(x)
    """
    h = settings.FD_STEP if h is None else h
    values = _stencil(f, x, h)
    first = _FIRST @ values / h
    second = _SECOND @ values / (h * h)
    return complex((0.25 + x * x) * second + 2.0 * x * first + potential(params, x) * values[2])


def first_order_system(params: Params, sigma_squared) -> Callable:
    """
    Right-hand side of y1' = y2 / (1/4 + x^2), y2' = (sigma^2 - V(x)) y1.

    sigma_squared may be an array; the state then stacks all y1 blocks
    before all y2 blocks.
    """
    sigma_squared = np.asarray(sigma_squared, dtype=complex)

    def rhs(x: float, y: np.ndarray) -> np.ndarray:
        n = y.size // 2
        y1, y2 = y[:n], y[n:]
        return np.concatenate([y2 / (0.25 + x * x), (sigma_squared - potential(params, x)) * y1])

    return rhs


def ode_oracle(params: Params, sigma: complex, x0: float, f0: complex, f0prime: complex,
               x1: float) -> Tuple[complex, complex]:
    """
    Integrate D psi = sigma^2 psi from x0 to x1 with DOP853.

    Args:
        params: Operator parameters
        sigma: Spectral parameter
        x0: Start point
        f0, f0prime: psi(x0) and psi'(x0)
        x1: End point

    Returns:
        (psi(x1), psi'(x1))

    Raises:
        StepFailure: the integrator did not reach x1 within tolerance
    """
    if x0 == x1:
        return complex(f0), complex(f0prime)
    sigma = complex(sigma)
    y0 = np.array([f0, (0.25 + x0 * x0) * f0prime], dtype=complex)
    solution = solve_ivp(first_order_system(params, sigma * sigma), (x0, x1), y0, method="DOP853",
                         rtol=settings.ODE_RTOL, atol=settings.ODE_ATOL)
    if not solution.success:
        raise StepFailure(f"DOP853 failed between {x0} and {x1}: {solution.message}",
                          {"x0": x0, "x1": x1, "sigma": sigma})
    logger.debug("ODE oracle: %d steps, %d evaluations", solution.t.size, solution.nfev)
    y1, y2 = solution.y[:, -1]
    return complex(y1), complex(y2 / (0.25 + x1 * x1))


def schrodinger_reduction(f: Callable, y: float) -> complex:
    """S f(y) = f(sinh(y)/2) (cosh(y)/2)^(1/2)."""
    return complex(f(0.5 * np.sinh(y))) * np.sqrt(0.5 * np.cosh(y))


def schrodinger_potential(params: Params, y):
    """q(y) = -(-1 + 4 alpha^2 - 4 beta^2 + 8 alpha beta sinh y) / cosh^2 y."""
    a, b = params.alpha, params.beta
    y = np.asarray(y, dtype=float)
    value = -(-1.0 + 4 * a * a - 4 * b * b + 8 * a * b * np.sinh(y)) / np.cosh(y) ** 2
    if np.ndim(value) == 0:
        return float(value)
    return value


def schrodinger_residual(params: Params, sigma: complex, f: Callable, y: float, h: float = None) -> float:
    """Relative residual of g'' - q g = sigma^2 g for g = S f."""
    h = settings.FD_STEP if h is None else h
    values = np.array([schrodinger_reduction(f, y + k * h) for k in _OFFSETS])
    second = _SECOND @ values / (h * h)
    g = values[2]
    sigma = complex(sigma)
    lhs = second - schrodinger_potential(params, y) * g
    return float(abs(lhs - sigma * sigma * g) / max(abs(sigma * sigma * g), abs(second), 1e-300))
