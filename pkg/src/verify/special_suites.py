"""
Suites for the Gamma machinery and the hypergeometric series.
"""
import cmath
import logging
import math
from typing import Dict

import numpy as np

from src.models import BilateralParams
from src.series import (
    bilateral_h_star,
    bilateral_ode_residual,
    contiguous_step_2f1,
    dougall_closed_form,
    gauss_2f1,
    gauss_sum,
    three_term_residual,
)
from src.special import complex_gamma, half_power, pochhammer, reciprocal_gamma
from src.utils.helpers import relative_error

from .base_suite import BaseSuite, Check

logger = logging.getLogger(__name__)


class GammaSuite(BaseSuite):
    """Identities of Gamma, 1/Gamma, Pochhammer symbols and half powers."""

    draws = 40

    def get_suite_name(self) -> str:
        return "gamma"

    def _points(self):
        return [self._draw_complex((-20.0, 20.0), (-20.0, 20.0)) for _ in range(self.draws)]

    def _reciprocal(self):
        worst = max(abs(complex_gamma(z) * reciprocal_gamma(z) - 1.0) for z in self._points())
        return worst, 1e-12, f"{self.draws} points in |Re z|, |Im z| <= 20"

    def _recurrence(self):
        worst = max(relative_error(complex_gamma(z + 1), z * complex_gamma(z)) for z in self._points())
        return worst, 1e-12, ""

    def _conjugation(self):
        worst = max(relative_error(complex_gamma(z.conjugate()), complex_gamma(z).conjugate()) for z in self._points())
        return worst, 1e-13, ""

    def _reflection(self):
        points = [self._draw_complex((-5.0, 5.0), (-3.0, 3.0)) for _ in range(self.draws)]
        worst = max(relative_error(complex_gamma(z) * complex_gamma(1 - z) * cmath.sin(math.pi * z), math.pi)
                    for z in points)
        return worst, 1e-11, ""

    def _half_integer(self):
        return abs(complex_gamma(0.5) - math.sqrt(math.pi)) / math.sqrt(math.pi), 1e-14, "Gamma(1/2) = sqrt(pi)"

    def _half_power_inverse(self):
        x = self.rng.uniform(-50.0, 50.0, size=self.draws)
        worst = 0.0
        for tau in self._points()[:5]:
            for sign in ("plus", "minus"):
                product = half_power(x, tau, sign) * half_power(x, -tau, sign)
                worst = max(worst, float(np.max(np.abs(product - 1.0))))
        return worst, 1e-12, ""

    def _pochhammer_branches(self):
        worst = 0.0
        for a in self._points()[:10]:
            for n in range(1, 8):
                worst = max(worst, abs(pochhammer(a, n) * pochhammer(a + n, -n) - 1.0))
        return worst, 1e-12, "(a)_n (a+n)_{-n} = 1"

    def _build_checks(self) -> Dict[str, Check]:
        return {
            'gamma_conjugation': self._conjugation,
            'gamma_half_integer': self._half_integer,
            'gamma_recurrence': self._recurrence,
            'gamma_reciprocal': self._reciprocal,
            'gamma_reflection': self._reflection,
            'half_power_inverse': self._half_power_inverse,
            'pochhammer_branches': self._pochhammer_branches,
        }


class SeriesSuite(BaseSuite):
    """Dougall's sum, three-term dependence of shifted solutions and the 2F1 region map."""

    dougall_draws = 100
    three_term_draws = 50

    def get_suite_name(self) -> str:
        return "series"

    def _dougall_draw(self):
        a1 = self._draw_complex((-0.5, 0.5), (-0.5, 0.5))
        a2 = self._draw_complex((-0.5, 0.5), (-0.5, 0.5))
        b1 = self._draw_complex((0.6, 1.6), (-0.5, 0.5))
        excess = float(self.rng.uniform(1.2, 2.7))
        b2 = complex(excess + (a1 + a2 - b1).real, self.rng.uniform(-0.5, 0.5))
        return a1, a2, b1, b2

    def _dougall(self):
        worst = 0.0
        for _ in range(self.dougall_draws):
            a1, a2, b1, b2 = self._dougall_draw()
            value = bilateral_h_star(BilateralParams(upper=[a1, a2], lower=[b1, b2], z=1)).value
            worst = max(worst, relative_error(value, dougall_closed_form(a1, a2, b1, b2)))
        return worst, 1e-10, f"{self.dougall_draws} draws with kappa < -1.2"

    def _three_term(self):
        worst = 0.0
        for _ in range(self.three_term_draws):
            a1 = self._draw_complex((-0.5, 0.5), (-0.5, 0.5))
            a2 = self._draw_complex((-0.5, 0.5), (-0.5, 0.5))
            b1 = self._draw_complex((0.8, 1.5), (-0.5, 0.5))
            b2 = self._draw_complex((0.8, 1.5), (-0.5, 0.5))
            z = cmath.exp(1j * self.rng.uniform(0.6, 2 * math.pi - 0.6))
            shifts = [self._draw_complex((-0.3, 0.3), (-0.3, 0.3)) for _ in range(3)]
            residual, scale = three_term_residual(a1, a2, b1, b2, z, *shifts)
            worst = max(worst, residual / max(scale, 1e-300))
        return worst, 1e-9, f"{self.three_term_draws} draws"

    def _contiguous(self):
        worst = 0.0
        for _ in range(10):
            p = self._draw_complex((0.1, 1.0), (-0.5, 0.5))
            q = self._draw_complex((2.2, 3.0), (-0.5, 0.5))
            r = self._draw_complex((1.5, 2.5), (-0.5, 0.5))
            y = self._draw_complex((-0.6, 0.6), (-0.6, 0.6))
            worst = max(worst, contiguous_step_2f1(p, q, r, y))
        return worst, 1e-10, ""

    def _gauss_sum(self):
        a, b = 0.3 + 0.1j, 0.2 - 0.2j
        c = 1.9 + 0.1j
        near_one = gauss_2f1(a, b, c, 0.999999).value
        return relative_error(near_one, gauss_sum(a, b, c)), 1e-4, "2F1 at z -> 1 against Gauss's sum"

    def _bilateral_ode(self):
        params = BilateralParams(upper=[0.2 + 0.1j, -0.3], lower=[1.1, 0.9 - 0.2j], z=cmath.exp(2j))
        return bilateral_ode_residual(params), 1e-6, "p = 2 at z = e^{2i}"

    def _build_checks(self) -> Dict[str, Check]:
        return {
            'bilateral_ode': self._bilateral_ode,
            'contiguous_relation': self._contiguous,
            'dougall': self._dougall,
            'gauss_sum_limit': self._gauss_sum,
            'three_term_dependence': self._three_term,
        }
