"""
Branches of the power functions (1/2 + ix)^tau and (1/2 - ix)^tau.

Re(1/2 +- ix) = 1/2 > 0 on the real line, so the continuous branch fixed by
the value exp(tau ln 1/2) at x = 0 is the principal one.
"""
from typing import Union

import numpy as np

from src.models import Sign

ArrayLike = Union[float, np.ndarray]


def _sign_value(sign: Union[Sign, str]) -> float:
    if isinstance(sign, Sign):
        sign = sign.value
    if sign in ("plus", "+"):
        return 1.0
    if sign in ("minus", "-"):
        return -1.0
    raise ValueError(f"unknown sign {sign!r}")


def half_power(x: ArrayLike, tau: complex, sign: Union[Sign, str] = Sign.plus):
    """
    Evaluate (1/2 + ix)^tau (sign plus) or (1/2 - ix)^tau (sign minus).

    Args:
        x: Real point or array of points
        tau: Complex exponent
        sign: Sign.plus or Sign.minus

    Returns:
        Complex value with the shape of x
    """
    base = 0.5 + 1j * _sign_value(sign) * np.asarray(x, dtype=float)
    value = np.exp(complex(tau) * np.log(base))
    if np.ndim(value) == 0:
        return complex(value)
    return value


def weight_powers(x: ArrayLike, tau_plus: complex, tau_minus: complex):
    """(1/2 + ix)^tau_plus (1/2 - ix)^tau_minus, the prefactor of every eigenfunction."""
    x = np.asarray(x, dtype=float)
    log_p = np.log(0.5 + 1j * x)
    log_q = np.log(0.5 - 1j * x)
    value = np.exp(complex(tau_plus) * log_p + complex(tau_minus) * log_q)
    if np.ndim(value) == 0:
        return complex(value)
    return value
