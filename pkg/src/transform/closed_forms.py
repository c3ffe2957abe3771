"""
Closed-form transforms of the powers (1/2 + ix)^(-p) (1/2 - ix)^(-q).

Integrating the 2H2* series of conj(Phi) term by term with beta_integral gives

    J f(sigma, t) = 2 pi Gamma(p + q + conj(sigma) - 1/2)
        3H3*[(1 - mu)/2 + s + u, (1 + mu)/2 + s + u, 1 - q + u;
             1 - conj(mu)/2 + u, 1 + conj(mu)/2 + u, p + 1/2 + s + u; 1]

with mu = alpha + i beta, s = conj(sigma) and u = conj(t). For q = -conj(mu)/2
and for p = mu/2 an upper and a lower parameter coincide and the series
collapses, by Dougall's sum, to Gamma quotients.
"""
import cmath
import logging
import math
from typing import Tuple

import numpy as np

from src.eigenfunctions import Phi
from src.exceptions import DivergenceError
from src.models import BilateralParams, Params
from src.series import bilateral_h_star
from src.special import gamma_product_ratio, half_power

from .quadrature import adaptive_integrate

logger = logging.getLogger(__name__)


def beta_integral(mu: complex, nu: complex) -> complex:
    """
    Integral over the real line of (1/2 + ix)^(-mu) (1/2 - ix)^(-nu): 2 pi Gamma(mu + nu - 1) / (Gamma(mu) Gamma(nu)).

    Raises:
        DivergenceError: Re(mu + nu) <= 1
    """
    mu, nu = complex(mu), complex(nu)
    if (mu + nu).real <= 1.0:
        raise DivergenceError(f"the beta integral diverges for Re(mu + nu) = {(mu + nu).real:.6g} <= 1",
                              {"mu": mu, "nu": nu})
    return 2.0 * math.pi * gamma_product_ratio([mu + nu - 1.0], [mu, nu])


def beta_integral_quadrature(mu: complex, nu: complex) -> complex:
    """
    The beta integral by quadrature after x = tan(theta)/2, where the integrand
    becomes 2 e^(-i (mu - nu) theta) (2 cos theta)^(mu + nu - 2) on (-pi/2, pi/2).

    Raises:
        DivergenceError: Re(mu + nu) <= 1
    """
    mu, nu = complex(mu), complex(nu)
    if (mu + nu).real <= 1.0:
        raise DivergenceError(f"the beta integral diverges for Re(mu + nu) = {(mu + nu).real:.6g} <= 1",
                              {"mu": mu, "nu": nu})

    def integrand(theta):
        return 2.0 * np.exp(-1j * (mu - nu) * theta) * (2.0 * np.cos(theta)) ** (mu + nu - 2.0)

    value, _, _ = adaptive_integrate(integrand, -0.5 * math.pi, 0.5 * math.pi)
    return value


def power_function(p: complex, q: complex, x):
    """(1/2 + ix)^(-p) (1/2 - ix)^(-q) on the principal branch."""
    return half_power(x, -complex(p), "plus") * half_power(x, -complex(q), "minus")


def power_series_parameters(params: Params, p: complex, q: complex, sigma: complex, t: complex) -> BilateralParams:
    """Parameters of the 3H3* series at z = 1."""
    mu = params.mu
    s, u = complex(sigma).conjugate(), complex(t).conjugate()
    mu_bar = mu.conjugate()
    upper = [(1 - mu) / 2 + s + u, (1 + mu) / 2 + s + u, 1 - complex(q) + u]
    lower = [1 - mu_bar / 2 + u, 1 + mu_bar / 2 + u, complex(p) + 0.5 + s + u]
    return BilateralParams(upper=upper, lower=lower, z=1)


def closed_form_transform_power(params: Params, p: complex, q: complex, sigma: complex, t: complex) -> complex:
    """
    J of (1/2 + ix)^(-p) (1/2 - ix)^(-q) at (sigma, t) through the 3H3* series.

    Raises:
        DivergenceError: Re(p + q) <= 1/2 + Re(sigma), where the series diverges at z = 1
        PoleError: p + q + conj(sigma) - 1/2 is a nonpositive integer
    """
    series = bilateral_h_star(power_series_parameters(params, p, q, sigma, t))
    logger.debug("3H3* at 1: %d terms, status %s", series.terms_used, series.status.value)
    prefactor = 2.0 * math.pi * gamma_product_ratio([complex(p) + complex(q) + complex(sigma).conjugate() - 0.5])
    return prefactor * series.value


def transform_power_q_reduced(params: Params, p: complex, sigma: complex, t: complex) -> complex:
    """
    Closed form for q = -(alpha - i beta)/2:

        -2 sin pi(conj(mu)/2 + conj t) Gamma(p - conj(mu)/2 - 1/2 + conj sigma) Gamma(p - conj(mu)/2 - 1/2 - conj sigma)
        / (Gamma(p + mu/2) Gamma(p - mu/2) Gamma(1/2 - alpha - conj sigma) Gamma(1/2 + i beta - conj sigma))
    """
    mu = params.mu
    mu_bar = mu.conjugate()
    p = complex(p)
    s, u = complex(sigma).conjugate(), complex(t).conjugate()
    shift = p - mu_bar / 2 - 0.5
    ratio = gamma_product_ratio([shift + s, shift - s],
                                [p + mu / 2, p - mu / 2, 0.5 - params.alpha - s, 0.5 + 1j * params.beta - s])
    return -2.0 * cmath.sin(math.pi * (mu_bar / 2 + u)) * ratio


def transform_power_p_reduced(params: Params, q: complex, sigma: complex, t: complex) -> complex:
    """
    Closed form for p = (alpha + i beta)/2:

        2 cos pi(mu/2 + conj sigma + conj t) Gamma(q + mu/2 - 1/2 + conj sigma) Gamma(q + mu/2 - 1/2 - conj sigma)
        / (Gamma(q + conj(mu)/2) Gamma(q - conj(mu)/2) Gamma(1/2 + alpha - conj sigma) Gamma(1/2 + i beta - conj sigma))
    """
    mu = params.mu
    mu_bar = mu.conjugate()
    q = complex(q)
    s, u = complex(sigma).conjugate(), complex(t).conjugate()
    shift = q + mu / 2 - 0.5
    ratio = gamma_product_ratio([shift + s, shift - s],
                                [q + mu_bar / 2, q - mu_bar / 2, 0.5 + params.alpha - s, 0.5 + 1j * params.beta - s])
    return 2.0 * cmath.cos(math.pi * (mu / 2 + s + u)) * ratio


def truncated_power_quadrature(params: Params, p: complex, q: complex, sigma: complex, t: complex,
                               cutoff: float = 200.0) -> Tuple[complex, float]:
    """
    Quadrature of (1/2 + ix)^(-p) (1/2 - ix)^(-q) conj(Phi(sigma, t; x)) over |x| <= cutoff.

    The integrand decays like |x|^(-gamma) log|x| with gamma = Re(p + q) + 1/2 - |Re sigma|,
    so the two tails are bounded by cutoff |g(+-cutoff)| log(cutoff) / (gamma - 1).

    Returns:
        (integral over [-cutoff, cutoff], tail bound)

    Raises:
        DivergenceError: gamma <= 1
    """
    decay = (complex(p) + complex(q)).real + 0.5 - abs(complex(sigma).real)
    if decay <= 1.0:
        raise DivergenceError(f"the integrand decays like |x|^-{decay:.4g}, not integrable", {"p": p, "q": q})
    kernel = Phi(params, sigma, t)

    def integrand(x):
        return power_function(p, q, x) * np.conj(kernel(x))

    total = 0j
    edges = [-cutoff, -1.0, 1.0, cutoff]
    for a, b in zip(edges[:-1], edges[1:]):
        value, _, _ = adaptive_integrate(integrand, a, b)
        total += value
    ends = np.abs(integrand(np.array([-cutoff, cutoff])))
    tail = float(np.sum(ends)) * cutoff * max(1.0, math.log(cutoff)) / (decay - 1.0)
    logger.debug("truncated power quadrature: tail bound %.3g at cutoff %g", tail, cutoff)
    return total, tail
