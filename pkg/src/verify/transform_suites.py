"""
Suites for the index transform: inversion, Plancherel, the difference operator
and the closed-form transforms of powers.
"""
import logging
from typing import Dict, List, Tuple

import numpy as np

from src.eigenfunctions import derivative, discrete_indices, romanovski_theta
from src.models import Params, TestFunction, TransformSample
from src.transform import (
    add,
    beta_integral,
    beta_integral_quadrature,
    closed_form_transform_power,
    difference_coefficients,
    difference_operator_z,
    discrete_coefficient,
    evaluate,
    forward_transform,
    inner_product,
    inverse_transform,
    kernel_difference,
    plancherel_pairing,
    preset,
    psi_inverse_transform,
    relabel_sample,
    sample_transform,
    theta_inverse_transform,
    times_ix,
    transform_power_p_reduced,
    transform_power_q_reduced,
    truncated_power_quadrature,
)
from src.utils.constants import DEFAULT_S, DEFAULT_T
from src.utils.helpers import relative_error

from .base_suite import BaseSuite, Check

logger = logging.getLogger(__name__)

GRID = np.linspace(-2.0, 2.0, 41)
ROUNDTRIP_PRESETS = ('hat', 'shifted_cubic', 'smooth_bump')


def complex_combination() -> TestFunction:
    """smooth_bump + (0.5 - 0.25i) shifted_cubic."""
    return add(preset('smooth_bump'), preset('shifted_cubic'), 0.5 - 0.25j)


class _SampledSuite(BaseSuite):
    """Shares transform samples between the checks of one run."""

    def __init__(self, seed: int = None, params: Params = None, nu_max: float = None):
        super().__init__(seed, params, nu_max)
        self._samples: Dict[Tuple[str, float, float], TransformSample] = {}

    def _sample(self, f: TestFunction, params: Params = None) -> TransformSample:
        params = params or self.params
        key = (f.name, params.alpha, params.beta)
        if key not in self._samples:
            self._samples[key] = sample_transform(params, f, DEFAULT_T, DEFAULT_S, nu_max=self.nu_max)
        return self._samples[key]


class RoundtripSuite(_SampledSuite):
    """Inversion of sampled transforms on a 41-point grid over [-2, 2]."""

    def get_suite_name(self) -> str:
        return "roundtrip"

    def _error(self, f: TestFunction, params: Params = None) -> np.ndarray:
        params = params or self.params
        values = inverse_transform(params, self._sample(f, params), GRID)
        return np.abs(values - evaluate(f, GRID))

    def _roundtrip(self, f: TestFunction):
        return float(np.max(self._error(f))), 1e-3, f"{f.name}, nu_max = {self.nu_max:g}, 41 points on [-2, 2]"

    def _relabelled(self):
        f = preset('smooth_bump')
        sample = self._sample(f)
        other = relabel_sample(self.params, sample, -0.2 + 0.1j, 0.45 - 0.3j)
        first = inverse_transform(self.params, sample, GRID)
        second = inverse_transform(self.params, other, GRID)
        return float(np.max(np.abs(first - second))), 1e-3, "(t, s) = (0.1, 0.37+0.2i) against (-0.2+0.1i, 0.45-0.3i)"

    def _bases(self):
        f = preset('smooth_bump')
        sample = self._sample(f)
        reference = inverse_transform(self.params, sample, GRID)
        worst = max(float(np.max(np.abs(inverse(self.params, sample, GRID) - reference)))
                    for inverse in (psi_inverse_transform, theta_inverse_transform))
        return worst, 1e-3, "Phi, Psi and theta bases"

    def _discrete_roundtrip(self):
        params = self.params
        f = preset('smooth_bump')
        error = self._error(f, params)
        return float(np.max(error)), 1e-3, f"alpha = {params.alpha:g} with {len(discrete_indices(params))} discrete terms"

    def _discrete_projection(self):
        params = self.params
        worst = 0.0
        indices = list(discrete_indices(params))
        for k in indices:
            coefficient = discrete_coefficient(params, lambda x: romanovski_theta(params, 0, x), (-50.0, 50.0), k)
            expected = 1.0 if k == 0 else 0.0
            worst = max(worst, abs(coefficient - expected))
        return worst, 1e-3, "Theta^0 on [-50, 50]"

    def _build_checks(self) -> Dict[str, Check]:
        checks = {f'roundtrip_{name}': (lambda name=name: self._roundtrip(preset(name))) for name in ROUNDTRIP_PRESETS}
        checks.update({
            'basis_independence': self._relabelled,
            'inverse_bases': self._bases,
            'roundtrip_complex_combination': lambda: self._roundtrip(complex_combination()),
        })
        if self.params.alpha > 0.5:
            checks.update({
                'discrete_projection': self._discrete_projection,
                'discrete_roundtrip': self._discrete_roundtrip,
            })
        return checks


class PlancherelSuite(_SampledSuite):
    """Spectral pairings of sampled transforms against exact L2 inner products."""

    def get_suite_name(self) -> str:
        return "plancherel"

    def _pairs(self) -> List[Tuple[TestFunction, TestFunction]]:
        return [
            (preset('smooth_bump'), preset('shifted_cubic')),
            (preset('hat'), preset('bump')),
            (complex_combination(), preset('hat')),
        ]

    def _plancherel(self):
        worst = 0.0
        for f, g in self._pairs():
            lhs = inner_product(f, g)
            rhs = plancherel_pairing(self.params, self._sample(f), self._sample(g))
            logger.info("Plancherel %s, %s: exact %s, spectral %s", f.name, g.name, lhs, rhs)
            worst = max(worst, abs(lhs - rhs) / (1.0 + abs(lhs)))
        return worst, 1e-4, "3 pairs, relative to 1 + |<f, g>|"

    def _symmetry(self):
        f, g = self._pairs()[0]
        first = plancherel_pairing(self.params, self._sample(f), self._sample(g))
        second = plancherel_pairing(self.params, self._sample(g), self._sample(f))
        return abs(first - second.conjugate()) / max(abs(first), 1e-300), 1e-10, "conjugate symmetry"

    def _build_checks(self) -> Dict[str, Check]:
        return {
            'conjugate_symmetry': self._symmetry,
            'pairs': self._plancherel,
        }


class DifferenceSuite(BaseSuite):
    """The image of multiplication by ix under the transform."""

    draws = 10

    def get_suite_name(self) -> str:
        return "difference"

    def _kernel(self):
        params = Params(alpha=0.3, beta=0.7)
        lhs, rhs = kernel_difference(params, 0.7 + 0.2j, 0.1, 0.4)
        return relative_error(lhs, rhs), 1e-8, "sigma = 0.7+0.2i, t = 0.1, x = 0.4"

    def _transform(self):
        f = preset('smooth_bump')
        shifted = times_ix(f)

        def transform(sigma, t):
            return forward_transform(self.params, f, sigma, t)

        worst = 0.0
        for _ in range(self.draws):
            sigma = self._draw_complex((-0.4, 0.4), (0.1, 1.5))
            t = self._draw_complex((-0.5, 0.5), (-0.3, 0.3))
            expected = forward_transform(self.params, shifted, sigma, t)
            actual = difference_operator_z(self.params, transform, sigma, t)
            worst = max(worst, abs(actual - expected) / (1.0 + abs(expected)))
        return worst, 1e-7, f"J(ix f) against Z J f at {self.draws} points"

    def _middle_vanishes(self):
        w = self._draw_complex((-0.4, 0.4), (0.1, 1.5))
        worst = max(abs(difference_coefficients(Params(alpha=0.0, beta=0.7), w)[1]),
                    abs(difference_coefficients(Params(alpha=0.3, beta=0.0), w)[1]))
        return worst, 0.0, "c_0 = 0 for alpha = 0 or beta = 0"

    def _holomorphy(self):
        f = preset('smooth_bump')
        worst = 0.0
        for _ in range(3):
            w = self._draw_complex((-0.3, 0.3), (0.3, 1.2))
            t = self._draw_complex((-0.3, 0.3), (-0.2, 0.2))

            def conjugate_transform(z):
                return forward_transform(self.params, f, complex(z).conjugate(), t)

            along_re = derivative(lambda u: conjugate_transform(w + u), 0.0)
            along_im = derivative(lambda v: conjugate_transform(w + 1j * v), 0.0)
            worst = max(worst, abs(along_im - 1j * along_re) / max(abs(along_re), 1e-300))
        return worst, 1e-6, "Cauchy-Riemann in conj(sigma)"

    def _build_checks(self) -> Dict[str, Check]:
        return {
            'holomorphy': self._holomorphy,
            'kernel_identity': self._kernel,
            'middle_coefficient': self._middle_vanishes,
            'transform_identity': self._transform,
        }


class PowerTransformSuite(BaseSuite):
    """Closed-form transforms of (1/2 + ix)^(-p) (1/2 - ix)^(-q)."""

    def __init__(self, seed: int = None, params: Params = None, nu_max: float = None):
        super().__init__(seed, params or Params(alpha=0.3, beta=0.7), nu_max)

    def get_suite_name(self) -> str:
        return "section4"

    def _quadrature(self):
        p, q, sigma, t = 1.4, 1.6, 0.4j, 0.1
        expected = closed_form_transform_power(self.params, p, q, sigma, t)
        value, tail = truncated_power_quadrature(self.params, p, q, sigma, t, cutoff=200.0)
        return relative_error(value, expected), 1e-5, f"p = {p}, q = {q}, tail bound {tail:.2e}"

    def _q_reduced(self):
        p = 2.2 + 0.1j
        q = -self.params.mu.conjugate() / 2
        sigma, t = 0.4j, 0.1
        expected = transform_power_q_reduced(self.params, p, sigma, t)
        return relative_error(closed_form_transform_power(self.params, p, q, sigma, t), expected), 1e-9, ""

    def _p_reduced(self):
        q = 2.2 - 0.1j
        p = self.params.mu / 2
        sigma, t = 0.4j, 0.1
        expected = transform_power_p_reduced(self.params, q, sigma, t)
        return relative_error(closed_form_transform_power(self.params, p, q, sigma, t), expected), 1e-9, ""

    def _beta(self):
        worst = 0.0
        for _ in range(5):
            mu = self._draw_complex((1.2, 2.0), (-1.0, 1.0))
            nu = self._draw_complex((1.2, 2.0), (-1.0, 1.0))
            worst = max(worst, relative_error(beta_integral_quadrature(mu, nu), beta_integral(mu, nu)))
        return worst, 1e-9, "Re(mu + nu) > 2.4"

    def _build_checks(self) -> Dict[str, Check]:
        return {
            'beta_integral': self._beta,
            'p_reduced': self._p_reduced,
            'q_reduced': self._q_reduced,
            'quadrature': self._quadrature,
        }
