"""
Inversion and Plancherel pairing on a sampled spectral grid.

The continuous part of f is

    (1/2 pi) integral of row(J f) R col(Phi) d nu

with R the inverse Gram matrix of (Phi(t), Phi(s)). R and the Phi values are
both exponentially large in nu while their product is of order one, so the
literal expression is used only where the Gram matrix is well conditioned;
elsewhere the same integrand is formed in the orthonormal theta basis, where it
reads sum_j <f, theta_j> theta_j(x).

For f with slope jumps the O(1/nu_max) error of the cutoff is added back in
closed form, see tail.py.
"""
import logging
import math
from enum import Enum
from functools import lru_cache
from typing import Dict

import numpy as np

from src.eigenfunctions import (
    discrete_indices,
    gram_matrix_delta,
    phi_connection_vector,
    phi_gram_matrix,
    romanovski_norm_sq,
    romanovski_theta,
    spectral_density_r,
    spectral_matrix_xi,
    theta_basis_stable,
)
from src.eigenfunctions.base import Points, as_points
from src.eigenfunctions.psi import _psi1_values
from src.exceptions import ResolutionError
from src.models import Params, TestFunction, TransformSample
from src.utils.constants import BASIS_CONDITION_TOL

from .forward import discrete_pairing, spectral_panel_width
from .tail import truncation_tail

logger = logging.getLogger(__name__)

_EPS = np.finfo(float).eps
_RESOLUTION_SLACK = 1e-12


class Basis(str, Enum):
    phi = "phi"
    psi = "psi"
    theta = "theta"


def well_conditioned(matrix: np.ndarray) -> bool:
    """True when the 2x2 matrix can be inverted without losing more than BASIS_CONDITION_TOL."""
    return bool(np.linalg.cond(matrix) * _EPS <= BASIS_CONDITION_TOL)


def check_resolution(sample: TransformSample, x: np.ndarray) -> None:
    """
    Raises:
        ResolutionError: the panel width exceeds min(0.25, pi / (4 (1 + |x|))) at some x
    """
    if x.size == 0:
        return
    limit = spectral_panel_width(float(np.max(np.abs(x))))
    if sample.panel_width > limit + _RESOLUTION_SLACK:
        raise ResolutionError(
            f"panel width {sample.panel_width:.4g} does not resolve |x| = {float(np.max(np.abs(x))):.4g}; "
            f"need at most {limit:.4g}", {"panel_width": sample.panel_width, "limit": limit})


@lru_cache(maxsize=4)
def _theta_grid(params: Params, nu: tuple, x: tuple):
    return theta_basis_stable(params, np.array(nu), np.array(x))


def _psi_pair(params: Params, sigma: complex, x: np.ndarray) -> np.ndarray:
    return np.vstack([_psi1_values(params, sigma, x), _psi1_values(params.mirrored(), sigma, x)])


def _phi_node(params: Params, sample: TransformSample, i: int, x: np.ndarray) -> np.ndarray:
    sigma = 1j * sample.nu_grid[i]
    t, s = sample.t_values[i], sample.s_values[i]
    psi = _psi_pair(params, sigma, x)
    phis = np.vstack([phi_connection_vector(params, sigma, t) @ psi, phi_connection_vector(params, sigma, s) @ psi])
    row = np.array([sample.values_t[i], sample.values_s[i]])
    return row @ spectral_density_r(params, sigma, t, s).to_array() @ phis


def _psi_node(params: Params, sample: TransformSample, i: int, x: np.ndarray) -> np.ndarray:
    sigma = 1j * sample.nu_grid[i]
    row = np.array(sample.psi_values[i])
    return row @ spectral_matrix_xi(params, sigma).to_array() @ _psi_pair(params, sigma, x)


def _literal_nodes(params: Params, sample: TransformSample, basis: Basis) -> np.ndarray:
    literal = np.zeros(len(sample.nu_grid), dtype=bool)
    for i, nu in enumerate(sample.nu_grid):
        if basis == Basis.phi:
            gram = phi_gram_matrix(params, 1j * nu, sample.t_values[i], sample.s_values[i]).to_array()
        else:
            gram = gram_matrix_delta(params, 1j * nu).to_array()
        literal[i] = well_conditioned(gram)
    return literal


def inverse_integrand(params: Params, sample: TransformSample, x: Points, basis: Basis = Basis.phi,
                      literal=None) -> np.ndarray:
    """
    Spectral integrand of the inversion formula at every grid node.

    Args:
        params: Operator parameters
        sample: Sampled transform
        x: Real points
        basis: phi (R weighted), psi (Xi weighted) or theta
        literal: Boolean mask of nodes computed in the requested basis; the
            remaining nodes use the theta basis. All nodes when omitted.

    Returns:
        Array of shape (len(nu_grid), len(x))
    """
    points, _ = as_points(x)
    n = len(sample.nu_grid)
    if literal is None:
        literal = np.full(n, basis != Basis.theta)
    literal = np.asarray(literal, dtype=bool) & (basis != Basis.theta)
    values = np.zeros((n, points.size), dtype=complex)
    node = _phi_node if basis == Basis.phi else _psi_node
    for i in np.flatnonzero(literal):
        values[i] = node(params, sample, i, points)
    rest = np.flatnonzero(~literal)
    if rest.size:
        if sample.theta_values is None:
            raise ValueError("the sample carries no theta pairings")
        nu = np.asarray(sample.nu_grid)[rest]
        first, second = _theta_grid(params, tuple(nu), tuple(points))
        coefficients = np.asarray(sample.theta_values, dtype=complex)[rest]
        values[rest] = coefficients[:, :1] * first + coefficients[:, 1:] * second
    return values


def discrete_part(params: Params, sample: TransformSample, x: np.ndarray) -> np.ndarray:
    """Sum over k of <f, Theta^k> Theta^k(x) / ||Theta^k||^2."""
    total = np.zeros(x.size, dtype=complex)
    for k, pairing in zip(discrete_indices(params), sample.discrete_values):
        total += pairing / romanovski_norm_sq(params, k) * romanovski_theta(params, k, x)
    return total


def _reconstruct(params: Params, sample: TransformSample, x: Points, basis: Basis, include_discrete: bool,
                 tail_correction: bool):
    points, scalar = as_points(x)
    check_resolution(sample, points)
    literal = None if basis == Basis.theta else _literal_nodes(params, sample, basis)
    integrand = inverse_integrand(params, sample, points, basis, literal)
    values = np.asarray(sample.weights) @ integrand / (2.0 * math.pi)
    if include_discrete and sample.discrete_values:
        values = values + discrete_part(params, sample, points)
    if tail_correction and sample.slope_jumps:
        values = values + truncation_tail(sample.slope_jumps, sample.nu_max, points)
    logger.debug("inversion in the %s basis: %d of %d nodes literal", basis.value,
                 0 if literal is None else int(np.sum(literal)), len(sample.nu_grid))
    if scalar:
        return complex(values[0])
    return values.reshape(np.shape(x))


def inverse_transform(params: Params, sample: TransformSample, x: Points, include_discrete: bool = True,
                      tail_correction: bool = True):
    """
    Reconstruct f(x) from its sampled transform.

    Args:
        params: Operator parameters
        sample: Output of sample_transform
        x: Real point or array of points
        include_discrete: Add the Romanovski terms when alpha > 1/2
        tail_correction: Add the cutoff tail of the slope jumps of f

    Returns:
        Complex value or array shaped like x

    Raises:
        ResolutionError: the spectral panels are too wide for some |x|
    """
    return _reconstruct(params, sample, x, Basis.phi, include_discrete, tail_correction)


def psi_inverse_transform(params: Params, sample: TransformSample, x: Points, include_discrete: bool = True,
                          tail_correction: bool = True):
    """Inversion in the Psi basis, weighted by Xi = Delta^{-1}."""
    return _reconstruct(params, sample, x, Basis.psi, include_discrete, tail_correction)


def theta_inverse_transform(params: Params, sample: TransformSample, x: Points, include_discrete: bool = True,
                            tail_correction: bool = True):
    """Inversion in the orthonormal theta basis."""
    return _reconstruct(params, sample, x, Basis.theta, include_discrete, tail_correction)


def _check_shared_grid(first: TransformSample, second: TransformSample) -> None:
    if (first.nu_grid != second.nu_grid or first.t_values != second.t_values
            or first.s_values != second.s_values):
        raise ResolutionError("samples must share the spectral grid and the (t, s) labels", {})


def plancherel_terms(params: Params, first: TransformSample, second: TransformSample) -> Dict[str, complex]:
    """
    Continuous and discrete parts of the spectral pairing of two samples.

    Raises:
        ResolutionError: the samples do not share a grid
    """
    _check_shared_grid(first, second)
    continuous = 0j
    for i, nu in enumerate(first.nu_grid):
        sigma = 1j * nu
        t, s = first.t_values[i], first.s_values[i]
        if well_conditioned(phi_gram_matrix(params, sigma, t, s).to_array()):
            row = np.array([first.values_t[i], first.values_s[i]])
            col = np.conj(np.array([second.values_t[i], second.values_s[i]]))
            density = complex(row @ spectral_density_r(params, sigma, t, s).to_array() @ col)
        else:
            density = complex(np.dot(first.theta_values[i], np.conj(second.theta_values[i])))
        continuous += first.weights[i] * density
    discrete = 0j
    for k, a, b in zip(discrete_indices(params), first.discrete_values, second.discrete_values):
        discrete += a * b.conjugate() / romanovski_norm_sq(params, k)
    return {"continuous": continuous / (2.0 * math.pi), "discrete": discrete}


def plancherel_pairing(params: Params, first: TransformSample, second: TransformSample) -> complex:
    """
    Spectral side of the Plancherel formula, equal to the L2 pairing of the sampled functions.

    Raises:
        ResolutionError: the samples do not share a grid
    """
    terms = plancherel_terms(params, first, second)
    return terms["continuous"] + terms["discrete"]


def discrete_projection(params: Params, f: TestFunction, k: int) -> complex:
    """
    Coefficient <f, Theta^k> / ||Theta^k||^2 of the discrete spectrum.

    Raises:
        RangeError: k outside 0 <= k < alpha - 1/2
    """
    return discrete_pairing(params, f, k) / romanovski_norm_sq(params, k)
