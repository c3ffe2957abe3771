"""
Helper functions for the application.
"""
import math
from typing import Any, Dict, Iterable, Union

import numpy as np

from src.utils.constants import SIGNIFICANT_DIGITS


def parse_complex(text: Union[str, float, complex, Iterable]) -> complex:
    """Parse 'RE,IM', 'a+bj' or a number into a complex value."""
    if isinstance(text, (int, float, complex)):
        return complex(text)
    if not isinstance(text, str):
        if not isinstance(text, (list, tuple)) or len(text) != 2:
            raise ValueError(f"expected a (re, im) pair, got {text!r}")
        try:
            return complex(float(text[0]), float(text[1]))
        except TypeError as error:
            raise ValueError(f"expected a (re, im) pair of numbers, got {text!r}") from error
    value = text.strip().replace(" ", "")
    if "," in value:
        re_part, im_part = value.split(",", 1)
        return complex(float(re_part), float(im_part))
    return complex(value.replace("i", "j"))


def nearest_integer_distance(z: complex) -> float:
    """Distance from z to the nearest integer."""
    return abs(z - round(z.real))


def is_nonpositive_integer(z: complex, tol: float = 0.0) -> bool:
    """True when z lies within tol of {0, -1, -2, ...}."""
    if abs(z.imag) > tol or z.real > tol:
        return False
    return abs(z.real - round(z.real)) <= tol


def format_number(value: float) -> str:
    """Round-trippable decimal with 17 significant digits."""
    if math.isnan(value):
        return "nan"
    return f"{value:.{SIGNIFICANT_DIGITS}g}"


def complex_record(prefix: str, value: complex) -> Dict[str, float]:
    """Split a complex value into paired _re/_im fields."""
    value = complex(value)
    return {f"{prefix}_re": float(value.real), f"{prefix}_im": float(value.imag)}


def relative_error(a: Any, b: Any, floor: float = 1e-300) -> float:
    """Max relative deviation of a from b."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    return float(np.max(np.abs(a - b) / np.maximum(np.abs(b), floor)))


def as_complex_array(x: Any) -> np.ndarray:
    return np.atleast_1d(np.asarray(x, dtype=complex))


def as_real_array(x: Any) -> np.ndarray:
    return np.atleast_1d(np.asarray(x, dtype=float))
