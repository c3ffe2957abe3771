"""
Complex Gamma function, its reciprocal, Gamma ratios and Pochhammer symbols.

Gamma uses the Lanczos approximation (g = 7, nine coefficients) on the right
half plane and the reflection formula on the left.
"""
import cmath
import logging
import math
from typing import Iterable

import numpy as np
from scipy import special

from src.exceptions import PoleError, RangeError
from src.models import GammaRatioSpec
from src.utils.constants import (
    GAMMA_LOG_SPACE_THRESHOLD,
    GAMMA_MAX_ABS_ARG,
    LANCZOS_COEFFICIENTS,
    LANCZOS_G,
)

logger = logging.getLogger(__name__)

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)


def _is_pole(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def _check_finite(z: complex) -> complex:
    z = complex(z)
    if not cmath.isfinite(z):
        raise RangeError(f"non-finite argument {z!r}", {"z": z})
    return z


def _lanczos_sum(z: complex) -> complex:
    # z is the shifted argument (original minus one)
    x = LANCZOS_COEFFICIENTS[0]
    for i in range(1, len(LANCZOS_COEFFICIENTS)):
        x += LANCZOS_COEFFICIENTS[i] / (z + i)
    return x


def _log_gamma_right(z: complex) -> complex:
    # valid for Re z >= 1/2
    z = z - 1.0
    t = z + LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * cmath.log(t) - t + cmath.log(_lanczos_sum(z))


def _log_sin_pi(z: complex) -> complex:
    """A logarithm of sin(pi z), stable for large |Im z|."""
    if z.imag > 0.0:
        e = cmath.exp(2j * math.pi * z)
        return -1j * math.pi * z + cmath.log((e - 1.0) / 2j)
    if z.imag < 0.0:
        e = cmath.exp(-2j * math.pi * z)
        return 1j * math.pi * z + cmath.log((1.0 - e) / 2j)
    return cmath.log(complex(math.sin(math.pi * z.real)))


def _log_gamma(z: complex) -> complex:
    if z.real < 0.5:
        return _LOG_PI - _log_sin_pi(z) - _log_gamma_right(1.0 - z)
    return _log_gamma_right(z)


def log_gamma(z: complex) -> complex:
    """
    A logarithm of Gamma(z).

    The imaginary part is not reduced to the principal branch; only
    exp(log_gamma(z)) = Gamma(z) is guaranteed.

    Raises:
        PoleError: z is a nonpositive integer
        RangeError: |z| exceeds the validated range
    """
    z = _check_finite(z)
    if _is_pole(z):
        raise PoleError(f"Gamma has a pole at {z!r}", {"z": z})
    if abs(z) > GAMMA_MAX_ABS_ARG:
        raise RangeError(f"|z| = {abs(z):.3g} exceeds {GAMMA_MAX_ABS_ARG}", {"z": z})
    return _log_gamma(z)


def complex_gamma(z: complex) -> complex:
    """
    Gamma function of a complex argument.

    Args:
        z: Argument, not a nonpositive integer, |z| <= 200

    Returns:
        Gamma(z)

    Raises:
        PoleError: z is a nonpositive integer
        RangeError: |z| > 200 or the value overflows
    """
    z = _check_finite(z)
    if _is_pole(z):
        raise PoleError(f"Gamma has a pole at {z!r}", {"z": z})
    if abs(z) > GAMMA_MAX_ABS_ARG:
        raise RangeError(f"|z| = {abs(z):.3g} exceeds {GAMMA_MAX_ABS_ARG}", {"z": z})
    if z.real < 0.5:
        s = cmath.sin(math.pi * z)
        if abs(z) > GAMMA_LOG_SPACE_THRESHOLD:
            value = cmath.exp(_log_gamma(z))
        else:
            value = math.pi / (s * cmath.exp(_log_gamma_right(1.0 - z)))
    else:
        value = cmath.exp(_log_gamma_right(z))
    if not cmath.isfinite(value):
        raise RangeError(f"Gamma({z!r}) overflows", {"z": z})
    return value


def reciprocal_gamma(z):
    """
    1/Gamma(z), an entire function.

    Exactly zero at the nonpositive integers; near them the value is formed as
    sin(pi z) Gamma(1 - z) / pi so the zero is approached smoothly. Arrays are
    evaluated elementwise by scipy.special.rgamma.
    """
    if np.ndim(z) > 0:
        return special.rgamma(np.asarray(z, dtype=complex))
    z = complex(z)
    if _is_pole(z):
        return 0j
    if z.real < 0.5:
        if abs(z) > GAMMA_LOG_SPACE_THRESHOLD:
            return cmath.sin(math.pi * z) * cmath.exp(_log_gamma_right(1.0 - z) - _LOG_PI)
        return cmath.sin(math.pi * z) * cmath.exp(_log_gamma_right(1.0 - z)) / math.pi
    return cmath.exp(-_log_gamma_right(z))


def gamma_ratio(spec: GammaRatioSpec) -> complex:
    """
    Evaluate Gamma[a_1, ..., a_n / b_1, ..., b_m].

    Poles in the denominator give a factor zero. Large arguments are combined
    in log space so intermediate Gamma values cannot overflow.

    Raises:
        PoleError: a numerator argument is a nonpositive integer
    """
    numerators = [_check_finite(a) for a in spec.numerators]
    denominators = [_check_finite(b) for b in spec.denominators]
    for a in numerators:
        if _is_pole(a):
            raise PoleError(f"numerator Gamma({a!r}) has a pole", {"numerators": numerators})
    if any(_is_pole(b) for b in denominators):
        return 0j
    args = numerators + denominators
    if args and max(abs(a) for a in args) > GAMMA_LOG_SPACE_THRESHOLD:
        for a in args:
            if abs(a) > GAMMA_MAX_ABS_ARG:
                raise RangeError(f"|{a!r}| exceeds {GAMMA_MAX_ABS_ARG}", {"arg": a})
        log_value = sum(_log_gamma(a) for a in numerators) - sum(_log_gamma(b) for b in denominators)
        return cmath.exp(log_value)
    value = 1.0 + 0j
    for a in numerators:
        value *= complex_gamma(a)
    for b in denominators:
        value *= reciprocal_gamma(b)
    return value


def gamma_product_ratio(numerators: Iterable[complex] = (), denominators: Iterable[complex] = ()) -> complex:
    """Shorthand for gamma_ratio with plain argument lists."""
    return gamma_ratio(GammaRatioSpec(numerators=list(numerators), denominators=list(denominators)))


def pochhammer(a: complex, n: int) -> complex:
    """
    Pochhammer symbol (a)_n for a signed integer n.

    For n < 0 this is 1/((a-1)(a-2)...(a+n)), so (a)_n = Gamma(a+n)/Gamma(a).

    Raises:
        PoleError: a vanishing factor in the negative branch
    """
    a = _check_finite(a)
    n = int(n)
    value = 1.0 + 0j
    if n >= 0:
        for k in range(n):
            value *= a + k
        return value
    for k in range(1, -n + 1):
        factor = a - k
        if factor == 0:
            raise PoleError(f"(a)_{n} has a pole at a = {a!r}", {"a": a, "n": n})
        value /= factor
    return value
