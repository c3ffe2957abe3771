"""
Gauss-Legendre panels for the spectral grid and adaptive Gauss-Kronrod
quadrature for everything else.
"""
import logging
from functools import lru_cache
from typing import Callable, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.integrate import quad_vec

from src import settings
from src.exceptions import QuadratureFailure
from src.utils.constants import GAUSS_KRONROD_NODES, GAUSS_LEGENDRE_ORDER, QUAD_VEC_PANELS

logger = logging.getLogger(__name__)


@lru_cache(maxsize=8)
def _rule(order: int) -> Tuple[np.ndarray, np.ndarray]:
    return leggauss(order)


def composite_rule(a: float, b: float, panels: int, order: int = GAUSS_LEGENDRE_ORDER) -> Tuple[np.ndarray, np.ndarray]:
    """
    Nodes and weights of the composite Gauss-Legendre rule with equal panels.

    Returns:
        (nodes, weights), each of length panels * order, nodes increasing
    """
    nodes, weights = _rule(order)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    x = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (half[:, None] * weights[None, :]).ravel()
    return x, w


def adaptive_integrate(func: Callable, a: float, b: float, tol: float = None,
                       max_evals: int = None) -> Tuple[complex, float, int]:
    """
    Integrate a vectorized complex function over [a, b] with scipy's quad_vec.

    [a, b] is cut into QUAD_VEC_PANELS equal panels that are integrated together
    as the components of one vector-valued integrand in the local coordinate
    u in [0, 1], so every call of func sees one point per panel. Real and
    imaginary parts are separate components.

    Args:
        func: Callable mapping an array of points to an array of values
        a, b: Interval
        tol: Absolute tolerance, settings.QUAD_ABS_TOL by default
        max_evals: Budget of points passed to func, settings.QUAD_MAX_EVALS by default

    Returns:
        (integral, error estimate, points evaluated)

    Raises:
        QuadratureFailure: the budget is exhausted or the integrand is not finite
    """
    tol = settings.QUAD_ABS_TOL if tol is None else tol
    max_evals = settings.QUAD_MAX_EVALS if max_evals is None else max_evals
    if a == b:
        return 0j, 0.0, 0
    width = (b - a) / QUAD_VEC_PANELS
    offsets = a + width * np.arange(QUAD_VEC_PANELS)

    def panels(u):
        values = width * np.asarray(func(offsets + width * u), dtype=complex)
        return np.concatenate([values.real, values.imag])

    limit = max(1, max_evals // (GAUSS_KRONROD_NODES * QUAD_VEC_PANELS))
    result, error, info = quad_vec(panels, 0.0, 1.0, epsabs=tol / QUAD_VEC_PANELS, epsrel=0.0,
                                   limit=limit, quadrature='gk21', full_output=True)
    evaluations = int(info.neval) * QUAD_VEC_PANELS
    context = {"a": a, "b": b, "evaluations": evaluations, "status": int(info.status)}
    if info.status == 2:
        logger.warning("adaptive quadrature on [%g, %g] stopped at roundoff: %s", a, b, info.message)
    elif not info.success:
        raise QuadratureFailure(f"adaptive quadrature on [{a:g}, {b:g}] failed: {info.message}", context)
    if evaluations > max_evals:
        raise QuadratureFailure(f"adaptive quadrature exceeded {max_evals} evaluations", context)
    total = complex(np.sum(result[:QUAD_VEC_PANELS]), np.sum(result[QUAD_VEC_PANELS:]))
    logger.debug("adaptive quadrature on [%g, %g]: %d evaluations, error %.3g", a, b, evaluations, error)
    return total, float(QUAD_VEC_PANELS * error), evaluations
