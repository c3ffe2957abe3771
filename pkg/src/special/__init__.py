"""
Special-function foundation.

This module provides the complex Gamma machinery and the power-function
branches every other module builds on:
- complex_gamma / reciprocal_gamma / log_gamma
- gamma_ratio for Gamma[a_1, ... / b_1, ...] products with pole-safe denominators
- pochhammer with signed index
- half_power for (1/2 +- ix)^tau

Example usage:
    from src.special import gamma_ratio, half_power
    from src.models import GammaRatioSpec

    value = gamma_ratio(GammaRatioSpec(numerators=[0.8j, -0.8j]))
    weight = half_power(0.5, 1.0, "plus")
"""

from .gamma import (
    complex_gamma,
    gamma_product_ratio,
    gamma_ratio,
    log_gamma,
    pochhammer,
    reciprocal_gamma,
)
from .powers import half_power, weight_powers

__all__ = [
    'complex_gamma',
    'reciprocal_gamma',
    'log_gamma',
    'gamma_ratio',
    'gamma_product_ratio',
    'pochhammer',
    'half_power',
    'weight_powers',
]
