"""
The forward transform J f(sigma, t) = integral of f(x) conj(Phi(sigma, t; x)) dx.
"""
import logging
import math
from functools import lru_cache
from typing import Callable, Tuple, Union

import numpy as np

from src import settings
from src.eigenfunctions import (
    Phi,
    Psi1,
    Psi2,
    Romanovski,
    discrete_indices,
    jost_psi_coefficients,
    jost_solutions,
    jost_theta_coefficients,
    phi_connection_vector,
)
from src.eigenfunctions.romanovski import check_index
from src.exceptions import ConfigError, DegenerateError
from src.models import Params, PhiMethod, TestFunction, TransformSample
from src.utils.constants import (
    DEFAULT_PANEL_WIDTH,
    DEFAULT_S,
    DEFAULT_SAMPLE_X_SCALE,
    DEFAULT_T,
    SAMPLE_X_PANEL_FACTOR,
    SAMPLE_X_PANEL_MAX,
)
from src.utils.helpers import nearest_integer_distance

from .quadrature import adaptive_integrate, composite_rule
from .tail import slope_jumps
from .test_functions import evaluate, piece_intervals

logger = logging.getLogger(__name__)

Label = Union[complex, Callable[[complex], complex]]


def pair_with(f: TestFunction, kernel: Callable, tol: float = None) -> complex:
    """
    Adaptive quadrature of f(x) conj(kernel(x)) over the support of f.

    Args:
        f: Test function
        kernel: Vectorized callable on real points
        tol: Absolute tolerance per support interval

    Raises:
        QuadratureFailure: the evaluation budget is exhausted
    """
    total = 0j
    for a, b in piece_intervals(f):
        value, _, _ = adaptive_integrate(lambda x: evaluate(f, x) * np.conj(kernel(x)), a, b, tol)
        total += value
    return total


def forward_transform(params: Params, f: TestFunction, sigma: complex, t: complex,
                      method: PhiMethod = PhiMethod.auto) -> complex:
    """
    Evaluate J f(sigma, t).

    Args:
        params: Operator parameters
        f: Compactly supported test function
        sigma: Spectral parameter, any complex value off the excluded set
        t: Kernel label
        method: Evaluation path of Phi

    Returns:
        Complex transform value

    Raises:
        QuadratureFailure: the tolerance is unreachable within the evaluation budget
    """
    if f.is_zero:
        return 0j
    kernel = Phi(params, sigma, t, method)
    return pair_with(f, kernel)


def psi_transform(params: Params, f: TestFunction, sigma: complex) -> np.ndarray:
    """(<f, Psi_1(sigma)>, <f, Psi_2(sigma)>)."""
    if f.is_zero:
        return np.zeros(2, dtype=complex)
    return np.array([pair_with(f, Psi1(params, sigma)), pair_with(f, Psi2(params, sigma))], dtype=complex)


def discrete_pairing(params: Params, f: TestFunction, k: int) -> complex:
    """
    <f, Theta^k>.

    Raises:
        RangeError: k outside 0 <= k < alpha - 1/2
    """
    check_index(params, k)
    if f.is_zero:
        return 0j
    return pair_with(f, Romanovski(params, k))


def discrete_coefficient(params: Params, func: Callable, interval: Tuple[float, float], k: int) -> complex:
    """
    <g, Theta^k> / ||Theta^k||^2 for a vectorized callable g restricted to an interval.

    Raises:
        RangeError: k outside 0 <= k < alpha - 1/2
    """
    theta = Romanovski(params, k)
    value, _, _ = adaptive_integrate(lambda x: func(x) * np.conj(theta(x)), interval[0], interval[1])
    return value / theta.norm_sq


def _label(label: Label, sigma: complex) -> complex:
    return complex(label(sigma)) if callable(label) else complex(label)


def spectral_panel_width(x_scale: float) -> float:
    """Widest spectral panel resolving the inversion integrand for |x| <= x_scale."""
    return min(DEFAULT_PANEL_WIDTH, math.pi / (4.0 * (1.0 + abs(x_scale))))


@lru_cache(maxsize=2)
def _jost_grid(params: Params, nu: tuple, x: tuple) -> Tuple[np.ndarray, np.ndarray]:
    return jost_solutions(params, np.array(nu), np.array(x))


def _spatial_rule(f: TestFunction, nu_max: float) -> Tuple[np.ndarray, np.ndarray]:
    width = min(SAMPLE_X_PANEL_MAX, SAMPLE_X_PANEL_FACTOR / max(nu_max, 1.0))
    nodes, weights = [], []
    for a, b in piece_intervals(f):
        x, w = composite_rule(a, b, max(1, math.ceil((b - a) / width)))
        nodes.append(x)
        weights.append(w)
    if not nodes:
        return np.zeros(0), np.zeros(0)
    return np.concatenate(nodes), np.concatenate(weights)


def sample_transform(params: Params, f: TestFunction, t: Label = DEFAULT_T, s: Label = DEFAULT_S,
                     nu_max: float = None, nu_min: float = None,
                     x_scale: float = DEFAULT_SAMPLE_X_SCALE) -> TransformSample:
    """
    Sample J f on Gauss-Legendre panels of [nu_min, nu_max] along sigma = i nu.

    The pairings <f, J_+> and <f, J_-> with the Jost solutions are computed once
    by a fixed composite rule in x; the Psi, theta and Phi pairings follow from
    them through the connection coefficients.

    Args:
        params: Operator parameters
        f: Compactly supported test function
        t, s: Constant labels or callables sigma -> label
        nu_max, nu_min: Spectral cutoffs, settings.NU_MAX and settings.NU_MIN by default
        x_scale: Largest |x| the sample is meant to be inverted at

    Returns:
        TransformSample with Phi, Psi and theta pairings, plus discrete
        pairings when alpha > 1/2

    Raises:
        ConfigError: the cutoffs do not satisfy 0 < nu_min < nu_max < inf
        DegenerateError: s - t is an integer at some grid point
        StepFailure: the Jost integration failed
    """
    nu_max = settings.NU_MAX if nu_max is None else float(nu_max)
    nu_min = settings.NU_MIN if nu_min is None else float(nu_min)
    if not (0.0 < nu_min < nu_max and math.isfinite(nu_max)):
        raise ConfigError(f"need 0 < nu_min < nu_max, got [{nu_min}, {nu_max}]", {"nu_min": nu_min, "nu_max": nu_max})
    panels = max(1, math.ceil((nu_max - nu_min) / spectral_panel_width(x_scale)))
    nu, weights = composite_rule(nu_min, nu_max, panels)
    sigmas = 1j * nu
    t_values, s_values = _labels(sigmas, t, s)

    x, wx = _spatial_rule(f, nu_max)
    if x.size:
        weighted = evaluate(f, x) * wx
        j_plus, j_minus = _jost_grid(params, tuple(nu), tuple(x))
        g = np.stack([np.conj(j_plus) @ weighted, np.conj(j_minus) @ weighted], axis=1)
    else:
        g = np.zeros((nu.size, 2), dtype=complex)

    psi_values, theta_values = [], []
    for i, sigma in enumerate(sigmas):
        psi_pair = np.conj(jost_psi_coefficients(params, sigma)) @ g[i]
        theta_pair = np.conj(jost_theta_coefficients(params, sigma)) @ g[i]
        psi_values.append((complex(psi_pair[0]), complex(psi_pair[1])))
        theta_values.append((complex(theta_pair[0]), complex(theta_pair[1])))
    values_t = _phi_values(params, sigmas, t_values, psi_values)
    values_s = _phi_values(params, sigmas, s_values, psi_values)

    discrete_values = []
    if not params.continuous_only:
        discrete_values = [discrete_pairing(params, f, k) for k in discrete_indices(params)]

    logger.info("Sampled J f for %s on %d spectral nodes, %d spatial nodes", f.name, nu.size, x.size)
    return TransformSample(
        nu_grid=nu.tolist(), weights=weights.tolist(),
        t_values=t_values, s_values=s_values,
        values_t=values_t, values_s=values_s,
        psi_values=psi_values, theta_values=theta_values,
        discrete_values=discrete_values, slope_jumps=slope_jumps(f),
        nu_min=nu_min, nu_max=nu_max, panel_width=(nu_max - nu_min) / panels,
    )


def _labels(sigmas: np.ndarray, t: Label, s: Label) -> Tuple[list, list]:
    t_values = [_label(t, sigma) for sigma in sigmas]
    s_values = [_label(s, sigma) for sigma in sigmas]
    for sigma, tv, sv in zip(sigmas, t_values, s_values):
        if nearest_integer_distance(sv - tv) < 1e-12:
            raise DegenerateError(f"s - t = {sv - tv} is an integer at sigma = {sigma}", {"t": tv, "s": sv})
    return t_values, s_values


def _phi_values(params: Params, sigmas: np.ndarray, labels: list, psi_values: list) -> list:
    # <f, Phi(t)> = conj(c_1) <f, Psi_1> + conj(c_2) <f, Psi_2>
    return [complex(np.conj(phi_connection_vector(params, sigma, label)) @ np.asarray(pair))
            for sigma, label, pair in zip(sigmas, labels, psi_values)]


def relabel_sample(params: Params, sample: TransformSample, t: Label, s: Label) -> TransformSample:
    """
    The same sample for other kernel labels (t, s), computed from its Psi pairings.

    Raises:
        DegenerateError: s - t is an integer at some grid point
        ValueError: the sample carries no Psi pairings
    """
    if sample.psi_values is None:
        raise ValueError("relabelling needs the Psi pairings of the sample")
    sigmas = 1j * np.asarray(sample.nu_grid)
    t_values, s_values = _labels(sigmas, t, s)
    return sample.model_copy(update={
        "t_values": t_values, "s_values": s_values,
        "values_t": _phi_values(params, sigmas, t_values, sample.psi_values),
        "values_s": _phi_values(params, sigmas, s_values, sample.psi_values),
    })
