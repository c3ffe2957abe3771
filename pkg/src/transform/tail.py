"""
Truncation tail of the inversion integral for test functions with slope jumps.

Under x = sinh(y)/2 the operator D acts on g(y) = f(x) (1/4 + x^2)^(1/4) as
d^2/dy^2 plus a bounded potential, so at large nu the inversion integral is a
Fourier integral in y cut off at |nu| = nu_max. A jump B in g' at y_j leaves
the truncated reconstruction short of g by

    -(B / pi) * integral from nu_max to infinity of cos(nu (y - y_j)) / nu^2 d nu

to leading order in 1/nu_max. With B = [f'](x_j) (1/4 + x_j^2)^(3/4) for
continuous f, this is the O(1/nu_max) error that a fixed cutoff leaves at the
kinks of a piecewise-linear f.
"""
import logging
import math
from typing import List, Sequence, Tuple

import numpy as np
from numpy.polynomial import Polynomial
from scipy.special import sici

from src.models import TestFunction

logger = logging.getLogger(__name__)

_JUMP_FLOOR = 1e-14


def slope_jumps(f: TestFunction) -> List[Tuple[float, complex]]:
    """
    Jumps f'(x_j+) - f'(x_j-) at the breakpoints of f.

    Returns:
        (x_j, jump) for every breakpoint with a nonzero jump, x_j increasing
    """
    jumps = {}
    for piece in f.pieces:
        derivative = Polynomial(np.asarray(piece.coefficients, dtype=complex)).deriv()
        jumps[piece.a] = jumps.get(piece.a, 0j) + complex(derivative(piece.a))
        jumps[piece.b] = jumps.get(piece.b, 0j) - complex(derivative(piece.b))
    return [(x, jump) for x, jump in sorted(jumps.items()) if abs(jump) > _JUMP_FLOOR]


def cosine_tail(nu_max: float, d) -> np.ndarray:
    """
    Integral from nu_max to infinity of cos(nu d) / nu^2 d nu,
    equal to cos(nu_max d) / nu_max - |d| (pi/2 - Si(nu_max |d|)).
    """
    d = np.abs(np.asarray(d, dtype=float))
    si, _ = sici(nu_max * d)
    return np.cos(nu_max * d) / nu_max - d * (0.5 * math.pi - si)


def truncation_tail(jumps: Sequence[Tuple[float, complex]], nu_max: float, x) -> np.ndarray:
    """
    Leading-order part of f(x) missing from a reconstruction cut off at nu_max.

    Args:
        jumps: Output of slope_jumps
        nu_max: Spectral cutoff of the reconstruction
        x: Real points

    Returns:
        Complex array shaped like x, to be added to the truncated reconstruction
    """
    x = np.asarray(x, dtype=float)
    y = np.arcsinh(2.0 * x)
    missing = np.zeros(x.shape, dtype=complex)
    for xj, jump in jumps:
        scaled = complex(jump) * (0.25 + xj * xj) ** 0.75
        missing -= scaled / math.pi * cosine_tail(nu_max, y - math.asinh(2.0 * xj))
    return missing / (0.25 + x * x) ** 0.25
