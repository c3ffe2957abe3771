"""
Hypergeometric series.

This module provides the two series every eigenfunction is built from:
- gauss_2f1 / hyp2f1_array: Gauss 2F1 on the whole cut plane
- bilateral_h_star / bilateral_series: regularized bilateral series pHp*
  on the unit circle, p = 2 or 3
- dougall_closed_form and gauss_sum for the summation theorems
- shifted_solution_jt and the three-term dependence among shifted solutions

Example usage:
    from src.series import bilateral_h_star, dougall_closed_form
    from src.models import BilateralParams

    params = BilateralParams(upper=[0.3, 0.2], lower=[1.5, 1.4], z=1)
    value = bilateral_h_star(params).value
    exact = dougall_closed_form(0.3, 0.2, 1.5, 1.4)
"""

from .bilateral import (
    bilateral_h_star,
    bilateral_ode_residual,
    bilateral_series,
    bilateral_term_estimate,
    dougall_closed_form,
    finite_extent,
    minus_z_power,
    shifted_solution_jt,
    three_term_residual,
)
from .hypergeometric import contiguous_step_2f1, gauss_2f1, gauss_sum, hyp2f1_array

__all__ = [
    'gauss_2f1',
    'hyp2f1_array',
    'gauss_sum',
    'contiguous_step_2f1',
    'bilateral_h_star',
    'bilateral_series',
    'bilateral_term_estimate',
    'dougall_closed_form',
    'finite_extent',
    'minus_z_power',
    'shifted_solution_jt',
    'three_term_residual',
    'bilateral_ode_residual',
]
