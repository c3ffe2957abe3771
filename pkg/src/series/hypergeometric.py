"""
Gauss hypergeometric function 2F1(a, b; c; z) on the cut plane.

Evaluation regions, in order of preference:
- terminating parameters: finite polynomial, any z
- |z| <= R: Taylor series at the origin
- |1 - z| <= R: the z -> 1 - z connection formula
- |z / (z - 1)| <= R: Pfaff transformation
- anything else: Taylor continuation of the hypergeometric ODE along the ray
  from an anchor point of modulus 0.6

R is settings.HYP2F1_RADIUS (0.75). Every routine is vectorized over z.
"""
import logging
from typing import Tuple

import numpy as np
from numpy.polynomial import polynomial as npoly

from src import settings
from src.exceptions import DegenerateError, LogarithmicCase, ParameterPole, RangeError
from src.models import SeriesStatus, SeriesValue
from src.special.gamma import gamma_product_ratio
from src.utils.constants import (
    HYP2F1_MAX_TERMS,
    TAYLOR_ANCHOR_RADIUS,
    TAYLOR_MAX_TERMS,
    TAYLOR_STEP_FRACTION,
)
from src.utils.helpers import is_nonpositive_integer

logger = logging.getLogger(__name__)

_EPS = np.finfo(float).eps
_INTEGER_TOL = 1e-10


def _is_terminating(a: complex, b: complex) -> bool:
    return is_nonpositive_integer(a) or is_nonpositive_integer(b)


def _series_coefficients(a: complex, b: complex, c: complex, rho: float) -> Tuple[np.ndarray, float, bool]:
    """
    Taylor coefficients of 2F1 at the origin, enough for |z| <= rho.

    Returns:
        (coefficients, size of the first neglected term at rho, truncated flag)
    """
    coefficients = [1.0 + 0j]
    coefficient = 1.0 + 0j
    largest = 1.0
    quiet = 0
    last = 0.0
    for n in range(HYP2F1_MAX_TERMS):
        coefficient = coefficient * (a + n) * (b + n) / ((c + n) * (n + 1))
        if coefficient == 0:
            return np.array(coefficients), 0.0, False
        coefficients.append(coefficient)
        last = abs(coefficient) * rho ** (n + 1)
        largest = max(largest, last)
        quiet = quiet + 1 if last <= 0.1 * settings.SERIES_TOL * largest else 0
        if quiet >= 3:
            return np.array(coefficients), last, False
    logger.warning("2F1 series truncated at %d terms (a=%s, b=%s, c=%s, rho=%.3g)",
                   HYP2F1_MAX_TERMS, a, b, c, rho)
    return np.array(coefficients), last, True


def _direct(a: complex, b: complex, c: complex, z: np.ndarray) -> Tuple[np.ndarray, np.ndarray, int]:
    """Series at the origin; returns values, error estimates and terms used."""
    if z.size == 0:
        return np.zeros(0, dtype=complex), np.zeros(0), 0
    rho = float(np.max(np.abs(z)))
    coefficients, tail, _ = _series_coefficients(a, b, c, rho)
    values = npoly.polyval(z, coefficients)
    rounding = 4.0 * _EPS * npoly.polyval(np.abs(z), np.abs(coefficients)) * len(coefficients) ** 0.5
    return values, rounding + tail, len(coefficients)


def _connection(a, b, c, z, w) -> Tuple[np.ndarray, np.ndarray, int]:
    """z -> 1 - z connection formula, w = 1 - z."""
    s = c - a - b
    if abs(s.imag) < _INTEGER_TOL and abs(s.real - round(s.real)) < _INTEGER_TOL:
        raise LogarithmicCase(
            f"c - a - b = {s} is an integer; the 1 - z connection is logarithmic",
            {"a": a, "b": b, "c": c},
        )
    g1 = gamma_product_ratio([c, s], [c - a, c - b])
    g2 = gamma_product_ratio([c, -s], [a, b])
    f1, e1, n1 = _direct(a, b, 1.0 - s, w)
    f2, e2, n2 = _direct(c - a, c - b, 1.0 + s, w)
    power = np.exp(s * np.log(w))
    values = g1 * f1 + g2 * power * f2
    errors = abs(g1) * e1 + abs(g2) * np.abs(power) * e2
    errors = errors + 4.0 * _EPS * (np.abs(g1 * f1) + np.abs(g2 * power * f2))
    return values, errors, n1 + n2


def _pfaff(a, b, c, z, w) -> Tuple[np.ndarray, np.ndarray, int]:
    """Pfaff transformation F = (1 - z)^(-a) F(a, c - b; c; z / (z - 1))."""
    zeta = -z / w
    f, e, n = _direct(a, c - b, c, zeta)
    power = np.exp(-a * np.log(w))
    values = power * f
    return values, np.abs(power) * e + 4.0 * _EPS * np.abs(values), n


def _taylor_step(a, b, c, zc, f, df, h) -> Tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    """
    Advance (F, F') from centers zc by steps h with the local Taylor series of
    z(1-z)F'' + [c - (a+b+1)z]F' - abF = 0.
    """
    p0 = zc * (1.0 - zc)
    p1 = 1.0 - 2.0 * zc
    q0 = c - (a + b + 1.0) * zc
    q1 = -(a + b + 1.0)
    r = -a * b
    # g_n = f_n h^n
    g_prev = f.copy()
    g_curr = df * h
    value = g_prev + g_curr
    deriv_scaled = g_curr.copy()
    scale = np.maximum(np.abs(value), np.abs(f))
    quiet = np.zeros(f.shape, dtype=int)
    n = 0
    last = np.abs(g_curr)
    for n in range(TAYLOR_MAX_TERMS):
        g_next = -((p1 * n * (n + 1) + q0 * (n + 1)) * g_curr * h
                   + (-n * (n - 1) + q1 * n + r) * g_prev * h * h) / (p0 * (n + 1) * (n + 2))
        value = value + g_next
        deriv_scaled = deriv_scaled + (n + 2) * g_next
        last = np.abs(g_next)
        scale = np.maximum(scale, last)
        quiet = np.where(last <= 0.1 * settings.SERIES_TOL * scale, quiet + 1, 0)
        if np.all(quiet >= 3):
            break
        g_prev, g_curr = g_curr, g_next
    safe_h = np.where(h == 0, 1.0, h)
    deriv = np.where(h == 0, df, deriv_scaled / safe_h)
    return value, deriv, last + 8.0 * _EPS * scale, n + 2


def _continuation(a, b, c, z) -> Tuple[np.ndarray, np.ndarray, int]:
    """Analytic continuation along the ray from the origin to z."""
    direction = z / np.abs(z)
    zc = TAYLOR_ANCHOR_RADIUS * direction
    f, ef, n_f = _direct(a, b, c, zc)
    fp, efp, n_fp = _direct(a + 1.0, b + 1.0, c + 1.0, zc)
    df = a * b / c * fp
    errors = ef + abs(a * b / c) * efp
    terms = n_f + n_fp
    for _ in range(200):
        remaining = z - zc
        distance = np.abs(remaining)
        if np.all(distance <= 1e-15 * np.abs(z)):
            break
        radius = np.minimum(np.abs(zc), np.abs(1.0 - zc))
        reach = TAYLOR_STEP_FRACTION * radius
        step = np.where(distance <= reach, remaining,
                        remaining / np.where(distance == 0, 1.0, distance) * reach)
        step = np.where(distance <= 1e-15 * np.abs(z), 0.0, step)
        f_new, df, step_err, n = _taylor_step(a, b, c, zc, f, df, step)
        growth = np.where(np.abs(f) > 0, np.abs(f_new) / np.maximum(np.abs(f), 1e-300), 1.0)
        errors = errors * np.maximum(growth, 1.0) + step_err
        f = f_new
        zc = zc + step
        terms += n
    else:
        raise RangeError("2F1 continuation did not reach its target", {"a": a, "b": b, "c": c})
    return f, errors, terms


def hyp2f1_array(a: complex, b: complex, c: complex, z, one_minus_z=None) -> Tuple[np.ndarray, np.ndarray, int]:
    """
    Vectorized 2F1(a, b; c; z).

    Args:
        a, b, c: Parameters
        z: Array of arguments in the cut plane C minus [1, infinity)
        one_minus_z: Optional exactly known 1 - z, used by the connection
            and Pfaff paths to avoid cancellation near z = 1

    Returns:
        (values, absolute error estimates, total series terms used)

    Raises:
        ParameterPole: c is a nonpositive integer
        LogarithmicCase: integer c - a - b where the 1 - z path is needed
        RangeError: z on the branch cut [1, infinity)
    """
    a, b, c = complex(a), complex(b), complex(c)
    if is_nonpositive_integer(c):
        raise ParameterPole(f"c = {c} is a nonpositive integer", {"c": c})
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    w = 1.0 - z if one_minus_z is None else np.atleast_1d(np.asarray(one_minus_z, dtype=complex))
    values = np.zeros(z.shape, dtype=complex)
    errors = np.zeros(z.shape)
    if z.size == 0:
        return values, errors, 0

    if _is_terminating(a, b):
        coefficients, _, _ = _series_coefficients(a, b, c, 1.0)
        values = npoly.polyval(z, coefficients)
        errors = 4.0 * _EPS * npoly.polyval(np.abs(z), np.abs(coefficients)) * len(coefficients)
        return values, errors, len(coefficients)

    on_cut = (z.imag == 0.0) & (z.real >= 1.0)
    if np.any(on_cut):
        raise RangeError("2F1 requested on the branch cut [1, inf)", {"z": complex(z[on_cut][0])})

    radius = settings.HYP2F1_RADIUS
    abs_z = np.abs(z)
    abs_w = np.abs(w)
    direct = abs_z <= radius
    connection = ~direct & (abs_w <= radius)
    pfaff = ~direct & ~connection & (abs_z <= radius * abs_w)
    continued = ~direct & ~connection & ~pfaff

    terms = 0
    for mask, path in ((direct, None), (connection, _connection), (pfaff, _pfaff), (continued, None)):
        if not np.any(mask):
            continue
        if mask is direct:
            v, e, n = _direct(a, b, c, z[mask])
        elif mask is continued:
            v, e, n = _continuation(a, b, c, z[mask])
        else:
            v, e, n = path(a, b, c, z[mask], w[mask])
        values[mask] = v
        errors[mask] = e
        terms += n
    logger.debug("2F1 regions: direct=%d connection=%d pfaff=%d continued=%d",
                 int(direct.sum()), int(connection.sum()), int(pfaff.sum()), int(continued.sum()))
    return values, errors, terms


def gauss_2f1(a: complex, b: complex, c: complex, z: complex) -> SeriesValue:
    """
    Gauss hypergeometric function at a single point.

    Returns:
        SeriesValue; status is converged when the error estimate is within
        1e-11 of the value, truncated otherwise
    """
    values, errors, terms = hyp2f1_array(a, b, c, np.array([complex(z)]))
    value = complex(values[0])
    error = float(errors[0])
    status = SeriesStatus.converged if error <= 1e-11 * max(abs(value), 1e-300) else SeriesStatus.truncated
    return SeriesValue(value=value, abs_error_estimate=error, terms_used=terms, status=status)


def gauss_sum(a: complex, b: complex, c: complex) -> complex:
    """Gauss summation 2F1(a, b; c; 1) = Gamma[c, c-a-b / c-a, c-b], Re(c-a-b) > 0."""
    return gamma_product_ratio([c, c - a - b], [c - a, c - b])


def contiguous_step_2f1(p: complex, q: complex, r: complex, y: complex) -> float:
    """
    Residual of the contiguous relation
    -y F[p,q;r;y] = c_- F[p-1,q+1] - (c_- + c_+) F[p,q] + c_+ F[p+1,q-1].

    Raises:
        DegenerateError: p - q is 0 or +-1
    """
    p, q, r, y = complex(p), complex(q), complex(r), complex(y)
    d = p - q
    for bad in (0.0, 1.0, -1.0):
        if abs(d - bad) < 1e-14:
            raise DegenerateError(f"p - q = {d} makes the contiguous coefficients singular",
                                  {"p": p, "q": q})
    c_minus = q * (r - p) / ((q - p) * (1.0 + q - p))
    c_plus = p * (r - q) / ((p - q) * (1.0 + p - q))
    f_mid = gauss_2f1(p, q, r, y).value
    f_down = gauss_2f1(p - 1.0, q + 1.0, r, y).value
    f_up = gauss_2f1(p + 1.0, q - 1.0, r, y).value
    residual = -y * f_mid - (c_minus * f_down - (c_minus + c_plus) * f_mid + c_plus * f_up)
    return float(abs(residual))
