"""
The index transform J and its inverse.

This module provides:
- forward_transform / psi_transform: pairings of a test function with Phi and Psi
- sample_transform: J f on a Gauss-Legendre grid along sigma = i nu
- inverse_transform, psi_inverse_transform, theta_inverse_transform: reconstruction of f
- slope_jumps and truncation_tail: the cutoff error left by kinks of f
- plancherel_pairing and discrete_projection
- difference_operator_z and kernel_difference: the image of multiplication by ix
- closed forms for the transform of (1/2 + ix)^(-p) (1/2 - ix)^(-q)
- piecewise-polynomial test functions with exact L2 algebra

Example usage:
    from src.transform import preset, sample_transform, inverse_transform
    from src.models import Params

    params = Params(alpha=0.3, beta=0.7)
    sample = sample_transform(params, preset('smooth_bump'), t=0.1, s=0.37 + 0.2j)
    values = inverse_transform(params, sample, [-0.5, 0.0, 0.5])
"""

from .closed_forms import (
    beta_integral,
    beta_integral_quadrature,
    closed_form_transform_power,
    power_function,
    power_series_parameters,
    transform_power_p_reduced,
    transform_power_q_reduced,
    truncated_power_quadrature,
)
from .difference import difference_coefficients, difference_operator_z, kernel_difference
from .forward import (
    discrete_coefficient,
    discrete_pairing,
    forward_transform,
    pair_with,
    psi_transform,
    relabel_sample,
    sample_transform,
    spectral_panel_width,
)
from .inverse import (
    Basis,
    check_resolution,
    discrete_projection,
    inverse_integrand,
    inverse_transform,
    plancherel_pairing,
    plancherel_terms,
    psi_inverse_transform,
    theta_inverse_transform,
    well_conditioned,
)
from .quadrature import adaptive_integrate, composite_rule
from .tail import cosine_tail, slope_jumps, truncation_tail
from .test_functions import PRESETS, add, evaluate, inner_product, norm_sq, preset, times_ix

__all__ = [
    'forward_transform',
    'psi_transform',
    'pair_with',
    'discrete_pairing',
    'discrete_coefficient',
    'sample_transform',
    'relabel_sample',
    'spectral_panel_width',
    'inverse_transform',
    'psi_inverse_transform',
    'theta_inverse_transform',
    'inverse_integrand',
    'check_resolution',
    'well_conditioned',
    'slope_jumps',
    'cosine_tail',
    'truncation_tail',
    'Basis',
    'plancherel_pairing',
    'plancherel_terms',
    'discrete_projection',
    'difference_coefficients',
    'difference_operator_z',
    'kernel_difference',
    'beta_integral',
    'beta_integral_quadrature',
    'power_function',
    'power_series_parameters',
    'closed_form_transform_power',
    'transform_power_q_reduced',
    'transform_power_p_reduced',
    'truncated_power_quadrature',
    'adaptive_integrate',
    'composite_rule',
    'PRESETS',
    'preset',
    'evaluate',
    'add',
    'times_ix',
    'inner_product',
    'norm_sq',
]
