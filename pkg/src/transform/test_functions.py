"""
Piecewise-polynomial test functions with exact L2 algebra.

A TestFunction is the sum of its pieces, each piece being a polynomial on the
half-open interval [a, b); pieces may overlap.
"""
import logging
from typing import Callable, Dict, List

import numpy as np
from numpy.polynomial import Polynomial

from src.models import PolynomialPiece, TestFunction

logger = logging.getLogger(__name__)


def _polynomial(piece: PolynomialPiece) -> Polynomial:
    return Polynomial(np.asarray(piece.coefficients, dtype=complex))


def _piece(a: float, b: float, poly: Polynomial) -> PolynomialPiece:
    return PolynomialPiece(a=a, b=b, coefficients=[complex(c) for c in poly.coef])


def hat() -> TestFunction:
    """1 - |x| on [-1, 1]."""
    return TestFunction(name="hat", pieces=[
        _piece(-1.0, 0.0, Polynomial([1.0, 1.0])),
        _piece(0.0, 1.0, Polynomial([1.0, -1.0])),
    ])


def bump() -> TestFunction:
    """(1 - x^2)^2 on [-1, 1], continuously differentiable."""
    return TestFunction(name="bump", pieces=[_piece(-1.0, 1.0, Polynomial([1.0, 0.0, -1.0]) ** 2)])


def shifted_cubic() -> TestFunction:
    """(1 - (x - 1/2)^2)^3 on [-1/2, 3/2], twice continuously differentiable."""
    inner = Polynomial([1.0, 0.0, -1.0])(Polynomial([-0.5, 1.0]))
    return TestFunction(name="shifted_cubic", pieces=[_piece(-0.5, 1.5, inner ** 3)])


def smooth_bump() -> TestFunction:
    """(1 - x^2)^3 on [-1, 1], twice continuously differentiable."""
    return TestFunction(name="smooth_bump", pieces=[_piece(-1.0, 1.0, Polynomial([1.0, 0.0, -1.0]) ** 3)])


PRESETS: Dict[str, Callable[[], TestFunction]] = {
    'hat': hat,
    'bump': bump,
    'shifted_cubic': shifted_cubic,
    'smooth_bump': smooth_bump,
}


def preset(name: str) -> TestFunction:
    """
    Raises:
        ValueError: unknown preset name
    """
    if name not in PRESETS:
        raise ValueError(f"Unsupported test function: {name}. Supported types: {', '.join(PRESETS)}")
    return PRESETS[name]()


def evaluate(f: TestFunction, x):
    """Pointwise value of f; zero outside the support."""
    points = np.asarray(x, dtype=float)
    values = np.zeros(points.shape, dtype=complex)
    for piece in f.pieces:
        inside = (points >= piece.a) & (points < piece.b)
        if np.any(inside):
            values[inside] += _polynomial(piece)(points[inside])
    if values.ndim == 0:
        return complex(values)
    return values


def callable_of(f: TestFunction) -> Callable:
    return lambda x: evaluate(f, x)


def add(f: TestFunction, g: TestFunction, scale: complex = 1.0) -> TestFunction:
    """f + scale * g."""
    scaled = [_piece(p.a, p.b, complex(scale) * _polynomial(p)) for p in g.pieces]
    return TestFunction(name=f"{f.name}+{g.name}", pieces=list(f.pieces) + scaled)


def times_ix(f: TestFunction) -> TestFunction:
    """The function ix f(x)."""
    factor = Polynomial([0.0, 1j])
    return TestFunction(name=f"ix*{f.name}", pieces=[_piece(p.a, p.b, factor * _polynomial(p)) for p in f.pieces])


def inner_product(f: TestFunction, g: TestFunction) -> complex:
    """Exact integral of f conj(g) over the real line."""
    total = 0j
    for p in f.pieces:
        for q in g.pieces:
            a, b = max(p.a, q.a), min(p.b, q.b)
            if a >= b:
                continue
            conj_q = Polynomial(np.conj(np.asarray(q.coefficients, dtype=complex)))
            antiderivative = (_polynomial(p) * conj_q).integ()
            total += complex(antiderivative(b) - antiderivative(a))
    return total


def norm_sq(f: TestFunction) -> float:
    return float(inner_product(f, f).real)


def piece_intervals(f: TestFunction) -> List[tuple]:
    """Maximal intervals between consecutive breakpoints that carry at least one piece."""
    points = f.breakpoints
    intervals = []
    for a, b in zip(points[:-1], points[1:]):
        if any(p.a <= a and b <= p.b for p in f.pieces):
            intervals.append((a, b))
    return intervals
