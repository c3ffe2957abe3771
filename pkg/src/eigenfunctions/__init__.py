"""
Eigenfunctions of D.

This module provides every solution family of D psi = sigma^2 psi and the
closed-form spectral data built from them:
- Psi_1, Psi_2: hypergeometric solutions with pure power behaviour at x = +-i/2
- Phi(sigma, t): the transform kernel, by direct 2H2* summation or the connection relation
- theta_1, theta_2: the scattering basis, in closed form and through Jost solutions
- Theta^k: Romanovski functions of the discrete spectrum (alpha > 1/2)
- Delta, Xi, R and the scattering matrix
- apply_D and the DOP853 ODE oracle

All families inherit from Eigenfunction and can be created by EigenfunctionFactory.

Example usage:
    from src.eigenfunctions import EigenfunctionFactory, spectral_density_r
    from src.models import Params

    params = Params(alpha=0.3, beta=0.7)
    kernel = EigenfunctionFactory.create_eigenfunction('phi', params, sigma=0.4j, t=0.1)
    values = kernel([-1.0, 0.0, 1.0])
    density = spectral_density_r(params, 0.4j, 0.1, 0.37 + 0.2j)
"""

from .base import Eigenfunction, check_nondegenerate, check_sigma
from .factory import EigenfunctionFactory
from .jost import jost_initial_data, jost_psi_coefficients, jost_solutions, jost_theta_coefficients, theta_basis_stable
from .operator import (
    apply_D,
    derivative,
    ode_oracle,
    potential,
    schrodinger_potential,
    schrodinger_reduction,
    schrodinger_residual,
)
from .phi import Phi, phi
from .psi import Psi1, Psi2, psi1, psi1_alternate, psi2, psi_difference_residual
from .romanovski import (
    Romanovski,
    discrete_indices,
    romanovski_coefficients,
    romanovski_gram,
    romanovski_norm_sq,
    romanovski_phi_prefactor,
    romanovski_printed_norm,
    romanovski_theta,
)
from .spectral import (
    asymptotic_coeffs,
    connection_coeffs,
    delta11_from_asymptotics,
    delta_determinant,
    gram_from_asymptotics,
    gram_matrix_delta,
    mirror,
    phi_connection_vector,
    phi_gram_from_delta,
    phi_gram_matrix,
    phi_inner_product,
    phi_inner_product_expansion,
    psi_asymptotic_coeffs,
    scattering_matrix,
    spectral_density_r,
    spectral_matrix_xi,
    v_sigma_inner_product,
)
from .theta import Theta1, Theta2, theta_asymptotic_coeffs, theta_basis, theta_coefficients

__all__ = [
    'Eigenfunction',
    'EigenfunctionFactory',
    'Phi',
    'Psi1',
    'Psi2',
    'Theta1',
    'Theta2',
    'Romanovski',
    'check_nondegenerate',
    'check_sigma',
    'phi',
    'psi1',
    'psi2',
    'psi1_alternate',
    'psi_difference_residual',
    'theta_basis',
    'theta_basis_stable',
    'theta_coefficients',
    'theta_asymptotic_coeffs',
    'jost_initial_data',
    'jost_solutions',
    'jost_psi_coefficients',
    'jost_theta_coefficients',
    'romanovski_theta',
    'romanovski_coefficients',
    'romanovski_gram',
    'romanovski_norm_sq',
    'romanovski_printed_norm',
    'romanovski_phi_prefactor',
    'discrete_indices',
    'connection_coeffs',
    'asymptotic_coeffs',
    'psi_asymptotic_coeffs',
    'v_sigma_inner_product',
    'gram_matrix_delta',
    'gram_from_asymptotics',
    'delta11_from_asymptotics',
    'delta_determinant',
    'spectral_matrix_xi',
    'spectral_density_r',
    'phi_inner_product',
    'phi_inner_product_expansion',
    'phi_gram_matrix',
    'phi_gram_from_delta',
    'phi_connection_vector',
    'scattering_matrix',
    'mirror',
    'apply_D',
    'derivative',
    'potential',
    'ode_oracle',
    'schrodinger_reduction',
    'schrodinger_potential',
    'schrodinger_residual',
]
