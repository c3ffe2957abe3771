"""
Gamma-regularized bilateral hypergeometric series on the unit circle.

    pHp*[a_1..a_p; b_1..b_p; z] = sum over n in Z of ((-1)^p z)^n / Gamma[1-a_j-n, b_j+n]

The terms of index +n and -n behave like n^s with s = sum(a) - sum(b), so
the series converges absolutely for kappa = Re s < -1 and conditionally on
|z| = 1, z != 1, for -1 <= kappa < 0. Symmetric partial sums are completed by
an Euler (summation by parts) transform of each one-sided tail, which also
assigns the Abel/Cesaro value in the conditional regime. At z = 1 the
partial sums are extrapolated with the known exponents s + 1 - k.
"""
import cmath
import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as npoly

from src import settings
from src.exceptions import BranchError, DivergenceError, PoleError
from src.models import BilateralParams, SeriesStatus, SeriesValue, SummationMethod
from src.special.gamma import gamma_product_ratio, reciprocal_gamma
from src.utils.constants import (
    BILATERAL_MIN_TERMS,
    BILATERAL_TAIL_SAFETY,
    CESARO_SPREAD_WINDOW,
    EULER_MAX_ORDER,
    RICHARDSON_BASE_TERMS,
    RICHARDSON_LEVELS,
)
from src.utils.helpers import is_nonpositive_integer

logger = logging.getLogger(__name__)

_EPS = np.finfo(float).eps
_DIRECT_CAP = 120


def _exact_integer(v: complex) -> bool:
    return v.imag == 0.0 and v.real == math.floor(v.real)


def finite_extent(upper: Sequence[complex], lower: Sequence[complex]) -> Tuple[Optional[int], Optional[int]]:
    """
    Number of structurally nonzero terms on each side.

    Returns:
        (count for n >= 0, count for n <= -1); None means the side is infinite
    """
    plus = [max(0, int(1 - a.real)) for a in upper if _exact_integer(a)]
    minus = [max(0, int(b.real) - 1) for b in lower if _exact_integer(b)]
    return (min(plus) if plus else None, min(minus) if minus else None)


def _amplitudes(upper: Sequence[complex], lower: Sequence[complex], count: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Coefficients f_plus(n) of z^n and f_minus(n) of z^-n for n = 0..count-1.

    Small indices are formed from reciprocal Gamma values; beyond them the
    consecutive ratios prod (a_j+n)/(b_j+n) and prod (n+1-b_j)/(n+1-a_j) are
    accumulated so the coefficients stay smooth in n.
    """
    p = len(upper)
    scale = max(abs(v.real) for v in list(upper) + list(lower))
    n_direct = max(1, min(count, 8 + int(math.ceil(scale)), _DIRECT_CAP))
    n = np.arange(n_direct, dtype=float)
    sign = np.where((p * np.arange(n_direct)) % 2 == 0, 1.0, -1.0)
    plus = sign.astype(complex)
    minus = sign.astype(complex)
    for a, b in zip(upper, lower):
        plus = plus * reciprocal_gamma(1.0 - a - n) * reciprocal_gamma(b + n)
        minus = minus * reciprocal_gamma(1.0 - a + n) * reciprocal_gamma(b - n)
    if count <= n_direct:
        return plus[:count], minus[:count]
    m = np.arange(n_direct - 1, count - 1, dtype=float)
    ratio_plus = np.ones(m.shape, dtype=complex)
    ratio_minus = np.ones(m.shape, dtype=complex)
    for a, b in zip(upper, lower):
        ratio_plus = ratio_plus * (a + m) / (b + m)
        ratio_minus = ratio_minus * (m + 1.0 - b) / (m + 1.0 - a)
    plus = np.concatenate([plus, plus[-1] * np.cumprod(ratio_plus)])
    minus = np.concatenate([minus, minus[-1] * np.cumprod(ratio_minus)])
    return plus, minus


def _euler_tail(g: np.ndarray, w: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    sum_{m >= 0} w^m g(m) as sum_k w^k / (1-w)^(k+1) * forward_difference^k g(0),
    stopped at the smallest term.
    """
    differences = [g[0]]
    d = g
    for _ in range(len(g) - 1):
        d = np.diff(d)
        differences.append(d[0])
    differences = np.asarray(differences)
    k = np.arange(len(differences))[:, None]
    one_minus = 1.0 - w
    terms = differences[:, None] * (w / one_minus)[None, :] ** k / one_minus[None, :]
    magnitudes = np.abs(terms)
    smallest = np.argmin(magnitudes, axis=0)
    keep = k <= smallest[None, :]
    total = np.sum(np.where(keep, terms, 0.0), axis=0)
    error = magnitudes[smallest, np.arange(w.size)]
    return total, error


def _truncation(exponent: complex, upper, lower, z: np.ndarray) -> int:
    distance = float(np.min(np.abs(1.0 - z)))
    scale = abs(exponent) + 2.0 + max(abs(v) for v in list(upper) + list(lower))
    wanted = BILATERAL_TAIL_SAFETY * scale / max(distance, 1e-300)
    cap = settings.SERIES_MAX_TERMS - EULER_MAX_ORDER - 2
    return int(min(max(BILATERAL_MIN_TERMS, math.ceil(wanted)), cap))


def bilateral_term_estimate(upper: Sequence[complex], lower: Sequence[complex], z) -> int:
    """
    Number of terms the Euler path would sum for these parameters and points.

    Finite series report their exact length.
    """
    upper = [complex(a) for a in upper]
    lower = [complex(b) for b in lower]
    count_plus, count_minus = finite_extent(upper, lower)
    if count_plus is not None and count_minus is not None:
        return count_plus + count_minus
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    exponent = complex(sum(upper) - sum(lower))
    return 2 * _truncation(exponent, upper, lower, z) + 1


def _sum_euler(upper, lower, z: np.ndarray, n_terms: Optional[int]) -> Tuple[np.ndarray, np.ndarray, int, bool]:
    exponent = complex(sum(upper) - sum(lower))
    n = n_terms if n_terms is not None else _truncation(exponent, upper, lower, z)
    capped = n_terms is None and n >= settings.SERIES_MAX_TERMS - EULER_MAX_ORDER - 2
    plus, minus = _amplitudes(upper, lower, n + 2 + EULER_MAX_ORDER)
    inverse = 1.0 / z
    head = npoly.polyval(z, plus[:n + 1]) + npoly.polyval(inverse, np.concatenate([[0.0], minus[1:n + 1]]))
    tail_plus, err_plus = _euler_tail(plus[n + 1:], z)
    tail_minus, err_minus = _euler_tail(minus[n + 1:], inverse)
    lead_plus = z ** (n + 1)
    lead_minus = inverse ** (n + 1)
    values = head + lead_plus * tail_plus + lead_minus * tail_minus
    rounding = 4.0 * _EPS * math.sqrt(n + 1) * (np.sum(np.abs(plus[:n + 1])) + np.sum(np.abs(minus[1:n + 1])))
    errors = err_plus + err_minus + rounding + 4.0 * _EPS * np.abs(values)
    logger.debug("bilateral Euler sum: N=%d, max error %.3g", n, float(np.max(errors)))
    return values, errors, 2 * n + 1, capped


def _sum_cesaro(upper, lower, z: np.ndarray) -> Tuple[np.ndarray, np.ndarray, int]:
    n = settings.SERIES_MAX_TERMS
    plus, minus = _amplitudes(upper, lower, n + 1)
    index = np.arange(n + 1)
    values = np.zeros(z.shape, dtype=complex)
    errors = np.zeros(z.shape)
    for i, zi in enumerate(z):
        terms = plus * zi ** index
        terms[1:] += minus[1:] * zi ** (-index[1:])
        partial = np.cumsum(terms)
        means = np.cumsum(partial) / (index + 1)
        values[i] = means[-1]
        errors[i] = float(np.max(np.abs(means[-CESARO_SPREAD_WINDOW:] - means[-1])))
    return values, errors, 2 * n + 1


def _sum_richardson(upper, lower) -> Tuple[complex, float, int]:
    """Symmetric partial sums at z = 1 extrapolated over doubling truncations."""
    exponent = complex(sum(upper) - sum(lower))
    sizes = [RICHARDSON_BASE_TERMS * 2 ** j for j in range(RICHARDSON_LEVELS + 1)]
    plus, minus = _amplitudes(upper, lower, sizes[-1] + 1)
    partial = np.cumsum(plus) + np.concatenate([[0.0], np.cumsum(minus[1:])])
    table: List[List[complex]] = []
    for j, size in enumerate(sizes):
        row = [complex(partial[size])]
        for m in range(1, j + 1):
            factor = cmath.exp((exponent + 1.0 - (m - 1)) * math.log(2.0))
            if abs(1.0 - factor) < 1e-12:
                row.append(row[m - 1])
                continue
            row.append((row[m - 1] - factor * table[j - 1][m - 1]) / (1.0 - factor))
        table.append(row)
    value = table[-1][-1]
    error = abs(value - table[-2][-2]) + 4.0 * _EPS * float(np.sum(np.abs(plus)) + np.sum(np.abs(minus)))
    logger.debug("bilateral Richardson at z=1: N=%d, error %.3g", sizes[-1], error)
    return value, error, 2 * sizes[-1] + 1


def _finite_sum(upper, lower, z: np.ndarray, count_plus: int, count_minus: int) -> np.ndarray:
    plus, minus = _amplitudes(upper, lower, max(count_plus, count_minus + 1, 1))
    values = npoly.polyval(z, plus[:count_plus]) if count_plus else np.zeros(z.shape, dtype=complex)
    if count_minus:
        values = values + npoly.polyval(1.0 / z, np.concatenate([[0.0], minus[1:count_minus + 1]]))
    return values


def bilateral_series(upper: Sequence[complex], lower: Sequence[complex], z,
                     method: SummationMethod = SummationMethod.euler,
                     n_terms: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray, int, SeriesStatus]:
    """
    Vectorized bilateral series over points z on the unit circle.

    Args:
        upper, lower: Parameter lists of equal length
        z: Array of points with |z| = 1
        method: euler (default) or cesaro
        n_terms: Fixed truncation for the Euler path; chosen from the
            distance of z to 1 when omitted

    Returns:
        (values, absolute error estimates, terms used, status)

    Raises:
        DivergenceError: kappa >= 0, or kappa >= -1 with z = 1
    """
    upper = [complex(a) for a in upper]
    lower = [complex(b) for b in lower]
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    kappa = float((sum(upper) - sum(lower)).real)
    count_plus, count_minus = finite_extent(upper, lower)
    if count_plus is not None and count_minus is not None:
        values = _finite_sum(upper, lower, z, count_plus, count_minus)
        errors = 8.0 * _EPS * np.maximum(np.abs(values), 1.0)
        return values, errors, count_plus + count_minus, SeriesStatus.converged

    at_one = np.abs(z - 1.0) <= BilateralParams.UNIT_CIRCLE_TOL
    if kappa >= 0.0:
        raise DivergenceError(f"bilateral series diverges for kappa = {kappa:.6g} >= 0",
                              {"upper": upper, "lower": lower})
    if np.any(at_one) and kappa >= -1.0:
        raise DivergenceError(f"bilateral series diverges at z = 1 for kappa = {kappa:.6g} >= -1",
                              {"upper": upper, "lower": lower})

    values = np.zeros(z.shape, dtype=complex)
    errors = np.zeros(z.shape)
    terms = 0
    capped = False
    if np.any(at_one):
        value, error, used = _sum_richardson(upper, lower)
        values[at_one] = value
        errors[at_one] = error
        terms = used
    rest = ~at_one
    if np.any(rest):
        if method == SummationMethod.cesaro:
            v, e, used = _sum_cesaro(upper, lower, z[rest])
        else:
            v, e, used, capped = _sum_euler(upper, lower, z[rest], n_terms)
        values[rest] = v
        errors[rest] = e
        terms = max(terms, used)

    converged = bool(np.all(errors <= 1e-10 * np.maximum(np.abs(values), 1.0)))
    if kappa >= -1.0:
        status = SeriesStatus.regularized
    elif converged and not capped:
        status = SeriesStatus.converged
    else:
        status = SeriesStatus.truncated
    if capped or not converged:
        logger.warning("bilateral series truncated: kappa=%.4g, max error %.3g", kappa, float(np.max(errors)))
    return values, errors, terms, status


def bilateral_h_star(params: BilateralParams, method: SummationMethod = SummationMethod.euler,
                     n_terms: Optional[int] = None) -> SeriesValue:
    """
    Regularized bilateral series pHp*[upper; lower; z] for p = 2 or 3.

    Args:
        params: Upper and lower parameters with z on the unit circle
        method: euler (default) or cesaro; z = 1 always extrapolates
        n_terms: Optional fixed truncation for the Euler path

    Returns:
        SeriesValue with status converged or truncated for kappa < -1 and
        regularized for -1 <= kappa < 0

    Raises:
        DivergenceError: kappa >= 0, or kappa >= -1 with z = 1
    """
    values, errors, terms, status = bilateral_series(params.upper, params.lower, [params.z], method, n_terms)
    return SeriesValue(value=complex(values[0]), abs_error_estimate=float(errors[0]),
                       terms_used=terms, status=status)


def dougall_closed_form(a1: complex, a2: complex, b1: complex, b2: complex) -> complex:
    """
    Dougall's sum of 2H2*[a1, a2; b1, b2; 1]:
    Gamma[b1+b2-a1-a2-1 / b1-a1, b1-a2, b2-a1, b2-a2].

    Raises:
        DivergenceError: Re(b1+b2-a1-a2) <= 1
        PoleError: b1+b2-a1-a2-1 is a nonpositive integer
    """
    excess = complex(b1 + b2 - a1 - a2)
    if excess.real <= 1.0:
        raise DivergenceError(f"Dougall sum needs Re(b1+b2-a1-a2) > 1, got {excess}",
                              {"a1": a1, "a2": a2, "b1": b1, "b2": b2})
    if is_nonpositive_integer(excess - 1.0):
        raise PoleError(f"Gamma({excess - 1.0}) has a pole", {"excess": excess})
    return gamma_product_ratio([excess - 1.0], [b1 - a1, b1 - a2, b2 - a1, b2 - a2])


def minus_z_power(z: complex, t: complex) -> complex:
    """(-z)^t = exp(t i (phi - pi)) for z = exp(i phi), phi in (0, 2 pi)."""
    z = complex(z)
    if abs(z - 1.0) <= BilateralParams.UNIT_CIRCLE_TOL:
        raise BranchError("(-z)^t is undefined at z = 1", {"z": z, "t": t})
    phi = cmath.phase(z) % (2.0 * math.pi)
    return cmath.exp(complex(t) * 1j * (phi - math.pi))


def shifted_solution_jt(a1: complex, a2: complex, b1: complex, b2: complex, t: complex, z: complex,
                        method: SummationMethod = SummationMethod.euler) -> SeriesValue:
    """
    J_t(z) = (-z)^t 2H2*[a1+t, a2+t; b1+t, b2+t; z].

    Every J_t solves the same hypergeometric ODE as J_0.

    Raises:
        BranchError: z = 1
        DivergenceError: as bilateral_h_star
    """
    factor = minus_z_power(z, t)
    params = BilateralParams(upper=[a1, a2], lower=[b1, b2], z=z).shifted(t)
    series = bilateral_h_star(params, method)
    return SeriesValue(value=factor * series.value,
                       abs_error_estimate=abs(factor) * series.abs_error_estimate,
                       terms_used=series.terms_used, status=series.status)


def three_term_residual(a1, a2, b1, b2, z, t1, t2, t3) -> Tuple[float, float]:
    """
    Residual of sin pi(t2-t3) J_t1 + sin pi(t3-t1) J_t2 + sin pi(t1-t2) J_t3.

    Returns:
        (absolute residual, max |J_t|)
    """
    values = [shifted_solution_jt(a1, a2, b1, b2, t, z).value for t in (t1, t2, t3)]
    weights = [cmath.sin(math.pi * (t2 - t3)), cmath.sin(math.pi * (t3 - t1)), cmath.sin(math.pi * (t1 - t2))]
    residual = sum(w * v for w, v in zip(weights, values))
    return abs(residual), max(abs(v) for v in values)


def bilateral_ode_residual(params: BilateralParams, h: float = 1e-3) -> float:
    """
    Relative residual of {z(theta+a1)(theta+a2) - (theta+b1-1)(theta+b2-1)} F = 0
    for p = 2, where theta = z d/dz = -i d/dphi along the unit circle.

    Derivatives in phi use fourth-order central differences with step h.
    """
    if params.p != 2:
        raise ValueError("the ODE residual is implemented for p = 2")
    phi = cmath.phase(params.z)
    nodes = np.exp(1j * (phi + h * np.arange(-2, 3)))
    values, _, _, _ = bilateral_series(params.upper, params.lower, nodes)
    f = values[2]
    d1 = (values[0] - 8.0 * values[1] + 8.0 * values[3] - values[4]) / (12.0 * h)
    d2 = (-values[0] + 16.0 * values[1] - 30.0 * values[2] + 16.0 * values[3] - values[4]) / (12.0 * h * h)
    theta1 = -1j * d1
    theta2 = -d2
    a1, a2 = params.upper
    b1, b2 = params.lower
    z = complex(nodes[2])
    upper_part = z * (theta2 + (a1 + a2) * theta1 + a1 * a2 * f)
    lower_part = theta2 + (b1 + b2 - 2.0) * theta1 + (b1 - 1.0) * (b2 - 1.0) * f
    scale = max(abs(upper_part), abs(lower_part), abs(f), 1e-300)
    return float(abs(upper_part - lower_part) / scale)
