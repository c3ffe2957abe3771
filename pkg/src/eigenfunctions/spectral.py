"""
Closed-form spectral data: connection and asymptotic coefficients, the Gram
matrix of (Psi_1, Psi_2), the spectral matrix Xi, the density R of the Phi
pair and the scattering matrix of the theta basis.

Every function takes sigma on the continuous spectrum sigma = i nu unless its
docstring says otherwise; the formulas themselves are analytic in sigma and
are evaluated as printed for any admissible sigma.
"""
import cmath
import logging
import math
from typing import Tuple

import numpy as np

from src.exceptions import DegenerateError
from src.models import Mat2, Params
from src.special import gamma_product_ratio, reciprocal_gamma

from .base import check_nondegenerate, check_sigma

logger = logging.getLogger(__name__)

_PI = math.pi


def mirror(params: Params) -> Params:
    """(alpha, beta) -> (-alpha, -beta); D is invariant, Psi_1 and Psi_2 swap."""
    return params.mirrored()


def _cosh_pi(z: complex) -> complex:
    return cmath.cosh(_PI * z)


def _cos_pi(z: complex) -> complex:
    return cmath.cos(_PI * z)


def _sin_pi(z: complex) -> complex:
    return cmath.sin(_PI * z)


def _gamma_2sigma(sigma: complex) -> complex:
    """Gamma(2 sigma) Gamma(-2 sigma)."""
    return gamma_product_ratio([2 * sigma, -2 * sigma])


def amplitude(alpha: float, beta: float, sigma: complex) -> complex:
    """A(alpha, beta, sigma) = Gamma[1 + alpha + i beta, -2 sigma / 1/2 + alpha - sigma, 1/2 + i beta - sigma]."""
    mu = complex(alpha, beta)
    return gamma_product_ratio([1 + mu, -2 * sigma], [0.5 + alpha - sigma, 0.5 + 1j * beta - sigma])


def phase(alpha: float, beta: float, sigma: complex) -> complex:
    """gamma(alpha, beta, sigma) = exp{(pi/2)(i alpha - beta + i sigma)}."""
    return cmath.exp(0.5 * _PI * (1j * alpha - beta + 1j * sigma))


def connection_coeffs(params: Params, sigma: complex) -> Tuple[complex, complex]:
    """
    Coefficients of Psi_1 and Psi_2 in the connection formula for Phi.

    Args:
        params: Operator parameters
        sigma: Spectral parameter (any complex value; the formula is entire)

    Returns:
        (C1, C2) with C1 = 1/Gamma[1/2 - i beta - sigma, 1/2 - alpha - sigma, 1 + alpha + i beta]
        and C2 the same with (alpha, beta) negated
    """
    sigma = complex(sigma)

    def coefficient(alpha: float, beta: float) -> complex:
        mu = complex(alpha, beta)
        return (reciprocal_gamma(0.5 - 1j * beta - sigma) * reciprocal_gamma(0.5 - alpha - sigma)
                * reciprocal_gamma(1 + mu))

    return coefficient(params.alpha, params.beta), coefficient(-params.alpha, -params.beta)


def asymptotic_coeffs(params: Params, sigma: complex) -> Tuple[complex, complex]:
    """
    Amplitude and phase factor of the x -> +infinity asymptotics of Psi_1.

    Returns:
        (A, gamma) as defined by amplitude and phase

    Raises:
        PoleError: 2 sigma near an integer
    """
    sigma = check_sigma(sigma)
    return amplitude(params.alpha, params.beta, sigma), phase(params.alpha, params.beta, sigma)


def psi_asymptotic_coeffs(params: Params, sigma: complex) -> np.ndarray:
    """
    The four leading coefficients of Psi_1.

    Returns:
        Array (r_minus, r_plus, l_minus, l_plus): the coefficients of
        x^(-1/2-sigma), x^(-1/2+sigma) as x -> +infinity and of
        (-x)^(-1/2-sigma), (-x)^(-1/2+sigma) as x -> -infinity.
        Psi_2 is obtained by passing the mirrored parameters.
    """
    sigma = check_sigma(sigma)
    a, b = params.alpha, params.beta
    right = cmath.exp(0.25j * _PI)
    left = cmath.exp(-0.25j * _PI)
    amp_minus = amplitude(a, b, sigma)
    amp_plus = amplitude(a, b, -sigma)
    return np.array([
        right * phase(a, b, sigma) * amp_minus,
        right * phase(a, b, -sigma) * amp_plus,
        left * phase(-a, -b, -sigma) * amp_minus,
        left * phase(-a, -b, sigma) * amp_plus,
    ], dtype=complex)


def v_sigma_inner_product(first: np.ndarray, second: np.ndarray) -> complex:
    """Pairing (1/2) sum c c'* of two leading-coefficient vectors, valid for sigma = i nu."""
    return complex(0.5 * np.sum(np.asarray(first) * np.conj(np.asarray(second))))


def gram_from_asymptotics(params: Params, sigma: complex) -> Mat2:
    """Gram matrix of (Psi_1, Psi_2) assembled from their leading coefficients."""
    check_nondegenerate(params)
    vectors = [psi_asymptotic_coeffs(params, sigma), psi_asymptotic_coeffs(mirror(params), sigma)]
    return Mat2.from_array([[v_sigma_inner_product(u, v) for v in vectors] for u in vectors])


def delta11_from_asymptotics(params: Params, sigma: complex) -> complex:
    """
    Delta_11 as (1/2)(|gamma(sigma)|^2 + |gamma(-alpha, -beta, -sigma)|^2)|A(sigma)|^2
    plus the same with sigma -> -sigma.
    """
    sigma = check_sigma(sigma)
    a, b = params.alpha, params.beta
    total = 0j
    for s in (sigma, -sigma):
        weight = abs(phase(a, b, s)) ** 2 + abs(phase(-a, -b, -s)) ** 2
        total += 0.5 * weight * abs(amplitude(a, b, s)) ** 2
    return total


def gram_matrix_delta(params: Params, sigma: complex) -> Mat2:
    """
    Gram matrix Delta_ij = <Psi_i, Psi_j> in the V_sigma pairing.

    Args:
        params: Operator parameters, (alpha, beta) != (0, 0)
        sigma: i nu with nu > 0

    Returns:
        Mat2 of the four closed-form entries

    Raises:
        DegenerateError: (alpha, beta) = (0, 0)
        PoleError: 2 sigma near an integer
    """
    check_nondegenerate(params)
    sigma = check_sigma(sigma)
    a, b = params.alpha, params.beta
    mu = params.mu
    mu_bar = mu.conjugate()
    two = [2 * sigma, -2 * sigma]
    ch = _cosh_pi(b - 1j * sigma) * _cosh_pi(b + 1j * sigma)
    cc = _cos_pi(a - sigma) * _cos_pi(a + sigma)
    scale = 2.0 / _PI
    m11 = scale * ch * gamma_product_ratio([1 + mu, 1 + mu_bar] + two, [0.5 + a - sigma, 0.5 + a + sigma])
    m12 = scale * cc * gamma_product_ratio([1 - mu_bar, 1 + mu] + two,
                                           [0.5 + 1j * b - sigma, 0.5 + 1j * b + sigma])
    m21 = scale * cc * gamma_product_ratio([1 - mu, 1 + mu_bar] + two,
                                           [0.5 - 1j * b - sigma, 0.5 - 1j * b + sigma])
    m22 = scale * ch * gamma_product_ratio([1 - mu, 1 - mu_bar] + two, [0.5 - a - sigma, 0.5 - a + sigma])
    return Mat2(m11=m11, m12=m12, m21=m21, m22=m22)


def delta_determinant(params: Params, sigma: complex) -> complex:
    """det Delta = (4/pi^2) cos cos cosh cosh (alpha^2 + beta^2) Gamma[2 sigma, -2 sigma]^2."""
    sigma = check_sigma(sigma)
    a, b = params.alpha, params.beta
    trig = (_cos_pi(a - sigma) * _cos_pi(a + sigma)
            * _cosh_pi(b - 1j * sigma) * _cosh_pi(b + 1j * sigma))
    return 4.0 / _PI ** 2 * trig * (a * a + b * b) * _gamma_2sigma(sigma) ** 2


def spectral_matrix_xi(params: Params, sigma: complex) -> Mat2:
    """
    Spectral matrix Xi = Delta^{-1} in closed form.

    Raises:
        DegenerateError: (alpha, beta) = (0, 0)
        PoleError: 2 sigma near an integer, or Gamma(-+ alpha -+ i beta) at a pole
    """
    check_nondegenerate(params)
    sigma = check_sigma(sigma)
    a, b = params.alpha, params.beta
    mu = params.mu
    mu_bar = mu.conjugate()
    scale = 1.0 / (2 * _PI * _gamma_2sigma(sigma))
    m11 = scale * gamma_product_ratio([0.5 + a + sigma, 0.5 + a - sigma, -mu, -mu_bar])
    m12 = scale * gamma_product_ratio([0.5 - 1j * b + sigma, 0.5 - 1j * b - sigma, -mu_bar, mu])
    m21 = scale * gamma_product_ratio([0.5 + 1j * b + sigma, 0.5 + 1j * b - sigma, -mu, mu_bar])
    m22 = scale * gamma_product_ratio([0.5 - a + sigma, 0.5 - a - sigma, mu_bar, mu])
    return Mat2(m11=m11, m12=m12, m21=m21, m22=m22)


def _phi_scale(params: Params, sigma: complex) -> complex:
    """M = cosh pi(beta + i sigma) cosh pi(beta - i sigma) cos pi(alpha + sigma) cos pi(alpha - sigma) Gamma[2 sigma, -2 sigma]."""
    a, b = params.alpha, params.beta
    return (_cosh_pi(b + 1j * sigma) * _cosh_pi(b - 1j * sigma)
            * _cos_pi(a + sigma) * _cos_pi(a - sigma) * _gamma_2sigma(sigma))


def phi_inner_product(params: Params, sigma: complex, t: complex, s: complex) -> complex:
    """
    <Phi(sigma, t), Phi(sigma, s)> = M cos pi(sigma + t - conj s).

    The V_sigma Gram entry carries the additional factor 2/pi^4, see phi_gram_matrix.
    """
    sigma = check_sigma(sigma)
    t, s = complex(t), complex(s)
    return _phi_scale(params, sigma) * _cos_pi(sigma + t - s.conjugate())


def phi_inner_product_expansion(params: Params, sigma: complex, t: complex, s: complex) -> Tuple[complex, complex]:
    """
    Both sides of the four-term trigonometric identity behind phi_inner_product.

    Returns:
        (four-term sum, cos pi(sigma + t - conj s) sin pi mu sin pi conj(mu))
    """
    sigma, t, s = complex(sigma), complex(t), complex(s)
    a, b = params.alpha, params.beta
    mu = params.mu
    mu_bar = mu.conjugate()
    s_bar = s.conjugate()
    row = np.array([_sin_pi(mu / 2 + t), _sin_pi(mu / 2 - t)])
    col = np.array([_sin_pi(mu_bar / 2 + s_bar), _sin_pi(mu_bar / 2 - s_bar)])
    middle = np.array([[_cosh_pi(b - 1j * sigma), _cos_pi(a + sigma)],
                       [_cos_pi(a - sigma), _cosh_pi(b + 1j * sigma)]])
    lhs = complex(row @ middle @ col)
    rhs = _cos_pi(sigma + t - s_bar) * _sin_pi(mu) * _sin_pi(mu_bar)
    return lhs, rhs


def phi_gram_matrix(params: Params, sigma: complex, t: complex, s: complex) -> Mat2:
    """V_sigma Gram matrix of the pair (Phi(sigma, t), Phi(sigma, s))."""
    sigma = check_sigma(sigma)
    t, s = complex(t), complex(s)
    scale = 2.0 / _PI ** 4 * _phi_scale(params, sigma)
    return Mat2(
        m11=scale * _cos_pi(sigma + t - t.conjugate()),
        m12=scale * _cos_pi(sigma + t - s.conjugate()),
        m21=scale * _cos_pi(sigma + s - t.conjugate()),
        m22=scale * _cos_pi(sigma + s - s.conjugate()),
    )


def phi_connection_vector(params: Params, sigma: complex, t: complex) -> np.ndarray:
    """
    Coefficients (c_1, c_2) with Phi(sigma, t) = c_1 Psi_1 + c_2 Psi_2.

    Raises:
        DegenerateError: sin pi(alpha + i beta) = 0
    """
    sigma, t = complex(sigma), complex(t)
    mu = complex(params.alpha, params.beta)
    denominator = _sin_pi(mu)
    if abs(denominator) < 1e-12:
        raise DegenerateError("sin pi(alpha + i beta) vanishes; the connection relation is singular",
                              {"alpha": params.alpha, "beta": params.beta})
    c1, c2 = connection_coeffs(params, sigma)
    return np.array([c1 * _sin_pi(t + mu / 2), c2 * _sin_pi(-t + mu / 2)], dtype=complex) / denominator


def phi_gram_from_delta(params: Params, sigma: complex, t: complex, s: complex) -> Mat2:
    """Phi Gram matrix assembled from Delta and the connection coefficients, an independent path."""
    delta = gram_matrix_delta(params, sigma).to_array()
    vectors = [phi_connection_vector(params, sigma, t), phi_connection_vector(params, sigma, s)]
    return Mat2.from_array([[u @ delta @ np.conj(v) for v in vectors] for u in vectors])


def spectral_density_r(params: Params, sigma: complex, t: complex, s: complex) -> Mat2:
    """
    Matrix spectral density R of the pair (Phi(sigma, t), Phi(sigma, s)).

    Args:
        params: Operator parameters
        sigma: i nu with nu > 0
        t, s: Complex labels with s - t not an integer

    Returns:
        Mat2 equal to the inverse of phi_gram_matrix

    Raises:
        DegenerateError: s - t is an integer
    """
    sigma = check_sigma(sigma)
    t, s = complex(t), complex(s)
    sin_ts = _sin_pi(s - t)
    if abs(sin_ts) < 1e-12:
        raise DegenerateError("s - t is an integer; Phi(t) and Phi(s) are dependent", {"t": t, "s": s})
    denominator = 2.0 * _phi_scale(params, sigma) * sin_ts * _sin_pi(s.conjugate() - t.conjugate())
    scale = _PI ** 4 / denominator
    return Mat2(
        m11=scale * _cos_pi(sigma + s - s.conjugate()),
        m12=-scale * _cos_pi(sigma + t - s.conjugate()),
        m21=-scale * _cos_pi(sigma + s - t.conjugate()),
        m22=scale * _cos_pi(sigma + t - t.conjugate()),
    )


def scattering_matrix(params: Params, sigma: complex) -> Mat2:
    """
    Scattering matrix [[A, B], [D, C]] of the theta basis.

    theta_1 ~ (-x)^(-1/2-sigma) + A (-x)^(-1/2+sigma) as x -> -infinity and
    B x^(-1/2+sigma) as x -> +infinity; theta_2 ~ D (-x)^(-1/2+sigma) and
    C x^(-1/2+sigma) + x^(-1/2-sigma). B = D by construction.
    """
    sigma = check_sigma(sigma)
    a, b = params.alpha, params.beta
    gammas = [0.5 - a - sigma, 0.5 + a - sigma, 0.5 - 1j * b - sigma, 0.5 + 1j * b - sigma]
    reflection = gamma_product_ratio([2 * sigma] + gammas, [-2 * sigma]) / (2 * _PI ** 2)
    e_minus, e_plus = math.exp(-_PI * b), math.exp(_PI * b)
    a_coeff = (e_minus * _cos_pi(a - sigma) + e_plus * _cos_pi(a + sigma)) * reflection
    c_coeff = (e_plus * _cos_pi(a - sigma) + e_minus * _cos_pi(a + sigma)) * reflection
    transmission = gamma_product_ratio(gammas, [1 - 2 * sigma, -2 * sigma]) / (2 * _PI)
    return Mat2(m11=a_coeff, m12=transmission, m21=transmission, m22=c_coeff)
