"""
Suites for the eigenfunctions of D, their Gram data and the discrete spectrum.
"""
import logging
from typing import Dict

import numpy as np

from src.eigenfunctions import (
    EigenfunctionFactory,
    Phi,
    Romanovski,
    apply_D,
    delta11_from_asymptotics,
    delta_determinant,
    derivative,
    gram_from_asymptotics,
    gram_matrix_delta,
    ode_oracle,
    phi_gram_from_delta,
    phi_gram_matrix,
    phi_inner_product_expansion,
    psi1,
    psi1_alternate,
    psi_difference_residual,
    romanovski_gram,
    romanovski_norm_sq,
    romanovski_phi_prefactor,
    romanovski_printed_norm,
    scattering_matrix,
    schrodinger_residual,
    spectral_density_r,
    spectral_matrix_xi,
    theta_asymptotic_coeffs,
    theta_basis,
    theta_basis_stable,
    v_sigma_inner_product,
)
from src.eigenfunctions.phi import phi
from src.models import Params, PhiMethod, SpectralPoint
from src.utils.constants import DISCRETE_ALPHA, DISCRETE_BETA
from src.utils.helpers import relative_error

from .base_suite import BaseSuite, Check

logger = logging.getLogger(__name__)

_IDENTITY = np.eye(2)


def _matrix_defect(actual: np.ndarray, expected: np.ndarray) -> float:
    return float(np.max(np.abs(actual - expected)) / max(np.max(np.abs(expected)), 1e-300))


class EigenSuite(BaseSuite):
    """D-residuals and cross-checks of every solution family."""

    draws = 10
    points = 5

    def get_suite_name(self) -> str:
        return "eigen"

    def _draw_sigma(self) -> complex:
        return self._draw_complex((-0.3, 0.3), (0.2, 2.0))

    def _d_residual(self, kind: str):
        worst = 0.0
        for _ in range(self.draws):
            params = self._draw_params()
            sigma = self._draw_sigma()
            t = self._draw_complex((-0.5, 0.5), (-0.3, 0.3))
            function = EigenfunctionFactory.create_eigenfunction(kind, params, sigma, t)
            for x in self.rng.uniform(-3.0, 3.0, size=self.points):
                value = function(x)
                lhs = apply_D(params, function, x)
                scale = max(abs(sigma * sigma * value), abs(value), 1e-300)
                worst = max(worst, abs(lhs - sigma * sigma * value) / scale)
        return worst, 1e-6, f"{self.draws} draws at {self.points} points"

    def _ode_oracle(self):
        params = self._draw_params()
        sigma = self._draw_sigma()
        f0 = psi1(params, sigma, 0.0)
        f0prime = derivative(lambda y: psi1(params, sigma, y), 0.0)
        worst = 0.0
        for x1 in (0.5, 1.0, 2.0):
            value, _ = ode_oracle(params, sigma, 0.0, f0, f0prime, x1)
            worst = max(worst, relative_error(value, psi1(params, sigma, x1)))
        return worst, 1e-8, "Psi_1 carried over [0, 2]"

    def _alternate(self):
        worst = 0.0
        for _ in range(self.draws):
            params = self._draw_params()
            sigma = self._draw_sigma()
            x = self.rng.uniform(-0.45, 0.45, size=self.points)
            worst = max(worst, float(np.max(np.abs(psi1_alternate(params, sigma, x) - psi1(params, sigma, x))
                                            / np.abs(psi1(params, sigma, x)))))
        return worst, 1e-10, "|x| < 1/2"

    def _phi_paths(self):
        worst = 0.0
        for _ in range(self.draws):
            params = self._draw_params()
            point = SpectralPoint(sigma=1j * self.rng.uniform(0.2, 2.0), t=self._draw_complex((-0.5, 0.5), (-0.3, 0.3)))
            x = self.rng.uniform(-2.0, 2.0, size=self.points)
            direct = phi(params, point, x, PhiMethod.direct)
            connection = phi(params, point, x, PhiMethod.connection)
            worst = max(worst, float(np.max(np.abs(direct - connection)) / np.max(np.abs(connection))))
        return worst, 1e-8, "direct 2H2* summation against the connection relation"

    def _schrodinger(self):
        worst = 0.0
        for _ in range(self.draws):
            params = self._draw_params()
            sigma = self._draw_sigma()
            for y in self.rng.uniform(-2.0, 2.0, size=self.points):
                worst = max(worst, schrodinger_residual(params, sigma, lambda x: psi1(params, sigma, x), y))
        return worst, 1e-6, ""

    def _psi_difference(self):
        worst = 0.0
        for _ in range(self.draws):
            params = self._draw_params()
            sigma = self._draw_sigma()
            worst = max(worst, psi_difference_residual(params, sigma, float(self.rng.uniform(-2.0, 2.0))))
        return worst, 1e-9, ""

    def _build_checks(self) -> Dict[str, Check]:
        checks = {f'd_residual_{kind}': (lambda kind=kind: self._d_residual(kind))
                  for kind in ('phi', 'psi1', 'psi2', 'theta1', 'theta2')}
        checks.update({
            'ode_oracle': self._ode_oracle,
            'phi_paths': self._phi_paths,
            'psi_alternate': self._alternate,
            'psi_difference': self._psi_difference,
            'schrodinger': self._schrodinger,
        })
        return checks


class GramSuite(BaseSuite):
    """Closed-form Gram matrices, their inverses and the independent assembly paths."""

    draws = 20

    def get_suite_name(self) -> str:
        return "gram"

    def _draws(self):
        for _ in range(self.draws):
            params = self._draw_params(alpha_max=0.9)
            sigma = 1j * float(self.rng.uniform(0.1, 3.0))
            t = self._draw_complex((-0.5, 0.5), (-0.3, 0.3))
            s = t + self._draw_complex((0.2, 0.8), (-0.3, 0.3))
            yield params, sigma, t, s

    def _worst(self, residual) -> float:
        return max(residual(*draw) for draw in self._draws())

    def _hermitian(self):
        def residual(params, sigma, t, s):
            delta = gram_matrix_delta(params, sigma)
            return delta.hermitian_defect() / float(np.max(np.abs(delta.to_array())))
        return self._worst(residual), 1e-10, "Delta"

    def _determinant(self):
        def residual(params, sigma, t, s):
            return relative_error(gram_matrix_delta(params, sigma).det(), delta_determinant(params, sigma))
        return self._worst(residual), 1e-10, ""

    def _xi_inverse(self):
        def residual(params, sigma, t, s):
            product = spectral_matrix_xi(params, sigma).to_array() @ gram_matrix_delta(params, sigma).to_array()
            return float(np.max(np.abs(product - _IDENTITY)))
        return self._worst(residual), 1e-10, "Xi Delta = I"

    def _r_inverse(self):
        def residual(params, sigma, t, s):
            product = spectral_density_r(params, sigma, t, s).to_array() @ phi_gram_matrix(params, sigma, t, s).to_array()
            return float(np.max(np.abs(product - _IDENTITY)))
        return self._worst(residual), 1e-10, "R G = I"

    def _phi_gram_paths(self):
        def residual(params, sigma, t, s):
            return _matrix_defect(phi_gram_from_delta(params, sigma, t, s).to_array(),
                                  phi_gram_matrix(params, sigma, t, s).to_array())
        return self._worst(residual), 1e-10, "connection coefficients and Delta"

    def _asymptotic_gram(self):
        def residual(params, sigma, t, s):
            return _matrix_defect(gram_from_asymptotics(params, sigma).to_array(),
                                  gram_matrix_delta(params, sigma).to_array())
        return self._worst(residual), 1e-10, "leading coefficients"

    def _delta11(self):
        def residual(params, sigma, t, s):
            return relative_error(delta11_from_asymptotics(params, sigma), gram_matrix_delta(params, sigma).m11)
        return self._worst(residual), 1e-10, ""

    def _expansion(self):
        def residual(params, sigma, t, s):
            lhs, rhs = phi_inner_product_expansion(params, sigma, t, s)
            return relative_error(lhs, rhs)
        return self._worst(residual), 1e-10, "four-term trigonometric identity"

    def _build_checks(self) -> Dict[str, Check]:
        return {
            'delta11_asymptotic': self._delta11,
            'delta_determinant': self._determinant,
            'delta_hermitian': self._hermitian,
            'gram_asymptotic': self._asymptotic_gram,
            'phi_expansion': self._expansion,
            'phi_gram_paths': self._phi_gram_paths,
            'r_inverse': self._r_inverse,
            'xi_inverse': self._xi_inverse,
        }


class ScatteringSuite(BaseSuite):
    """Unitarity of the scattering matrix and the behaviour of the theta basis."""

    draws = 10

    def get_suite_name(self) -> str:
        return "scattering"

    def _draws(self):
        for _ in range(self.draws):
            yield self._draw_params(alpha_max=0.9), 1j * float(self.rng.uniform(0.1, 3.0))

    def _unitary(self):
        worst = 0.0
        for params, sigma in self._draws():
            matrix = scattering_matrix(params, sigma).to_array()
            worst = max(worst, float(np.max(np.abs(matrix.conj().T @ matrix - _IDENTITY))))
        return worst, 1e-10, "S* S = I"

    def _symmetric(self):
        worst = 0.0
        for params, sigma in self._draws():
            matrix = scattering_matrix(params, sigma)
            worst = max(worst, abs(matrix.m12 - matrix.m21))
        return worst, 1e-14, "B = D"

    def _theta_gram(self):
        worst = 0.0
        for params, sigma in self._draws():
            rows = theta_asymptotic_coeffs(params, sigma)
            gram = np.array([[v_sigma_inner_product(u, v) for v in rows] for u in rows])
            worst = max(worst, float(np.max(np.abs(gram - _IDENTITY))))
        return worst, 1e-10, "theta Gram = I"

    def _asymptotics(self):
        params = self._draw_params()
        sigma = 1j * float(self.rng.uniform(0.2, 1.5))
        rows = theta_asymptotic_coeffs(params, sigma)
        errors = []
        for x in (1e2, 1e3, 1e4):
            first, second = theta_basis(params, sigma, x)
            lead = [row[0] * x ** (-0.5 - sigma) + row[1] * x ** (-0.5 + sigma) for row in rows]
            errors.append(max(abs(first - lead[0]) / abs(lead[0]), abs(second - lead[1]) / abs(lead[1])))
        ratio = max(errors[1] / errors[0], errors[2] / errors[1])
        return ratio, 0.5, "relative errors at x = 1e2, 1e3, 1e4: " + ", ".join(f"{e:.2e}" for e in errors)

    def _jost(self):
        worst = 0.0
        x = np.linspace(-3.0, 3.0, 13)
        for params, sigma in list(self._draws())[:3]:
            stable = theta_basis_stable(params, [sigma.imag], x)
            closed = theta_basis(params, sigma, x)
            for a, b in zip(stable, closed):
                worst = max(worst, float(np.max(np.abs(a[0] - b)) / np.max(np.abs(b))))
        return worst, 1e-7, "Jost solutions against the Psi expansion"

    def _build_checks(self) -> Dict[str, Check]:
        return {
            'jost_theta': self._jost,
            'scattering_symmetric': self._symmetric,
            'scattering_unitary': self._unitary,
            'theta_asymptotics': self._asymptotics,
            'theta_gram': self._theta_gram,
        }


class RomanovskiSuite(BaseSuite):
    """Orthogonality, norms and eigen-relations of the Romanovski functions."""

    def __init__(self, seed: int = None, params: Params = None, nu_max: float = None):
        if params is None or params.alpha <= 0.5:
            params = Params(alpha=DISCRETE_ALPHA, beta=DISCRETE_BETA)
        super().__init__(seed, params, nu_max)
        self.indices = list(range(int(np.ceil(self.params.alpha - 0.5))))

    def get_suite_name(self) -> str:
        return "romanovski"

    def _orthogonality(self):
        worst = 0.0
        for k in self.indices:
            for l in self.indices:
                if k < l:
                    scale = np.sqrt(romanovski_norm_sq(self.params, k) * romanovski_norm_sq(self.params, l))
                    worst = max(worst, abs(romanovski_gram(self.params, k, l)) / scale)
        return worst, 1e-8, f"indices {self.indices}"

    def _norm(self):
        worst = 0.0
        for k in self.indices:
            true = romanovski_norm_sq(self.params, k)
            worst = max(worst, relative_error(romanovski_gram(self.params, k, k), true))
            logger.warning("Theta^%d: the printed norm expression is %.6g times the computed norm",
                           k, romanovski_printed_norm(self.params, k) / true)
        return worst, 1e-8, ""

    def _d_residual(self):
        worst = 0.0
        for k in self.indices:
            function = Romanovski(self.params, k)
            sigma = function.sigma
            for x in self.rng.uniform(-3.0, 3.0, size=5):
                value = function(x)
                scale = max(abs(sigma * sigma * value), abs(value), 1e-300)
                worst = max(worst, abs(apply_D(self.params, function, x) - sigma * sigma * value) / scale)
        return worst, 1e-6, ""

    def _phi_prefactor(self):
        worst = 0.0
        x = self.rng.uniform(-3.0, 3.0, size=5)
        for k in self.indices:
            kernel = Phi(self.params, self.params.alpha - 0.5 - k, -self.params.mu / 2)
            expected = romanovski_phi_prefactor(self.params, k) * kernel(x)
            actual = Romanovski(self.params, k)(x)
            worst = max(worst, float(np.max(np.abs(actual - expected) / np.abs(actual))))
        return worst, 1e-8, "Theta^k against Phi(alpha - 1/2 - k, -mu/2)"

    def _build_checks(self) -> Dict[str, Check]:
        return {
            'd_residual': self._d_residual,
            'norm': self._norm,
            'orthogonality': self._orthogonality,
            'phi_prefactor': self._phi_prefactor,
        }
