import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from scipy.integrate import quad

from src.exceptions import ConfigError, DegenerateError, PoleError, QuadratureFailure, ResolutionError
from src.models import Params, PolynomialPiece, TestFunction
from src.transform import (
    adaptive_integrate,
    add,
    composite_rule,
    cosine_tail,
    difference_coefficients,
    difference_operator_z,
    evaluate,
    forward_transform,
    inner_product,
    inverse_transform,
    kernel_difference,
    norm_sq,
    plancherel_pairing,
    preset,
    sample_transform,
    slope_jumps,
    times_ix,
    truncation_tail,
)
from src.verify.transform_suites import complex_combination


def test_preset_values():
    hat = preset('hat')
    assert_allclose(evaluate(hat, np.array([-2.0, -0.5, 0.0, 0.25, 1.0])), [0.0, 0.5, 1.0, 0.75, 0.0])
    assert evaluate(preset('smooth_bump'), 0.0) == 1.0


def test_unknown_preset():
    with pytest.raises(ValueError, match="Unsupported test function"):
        preset('gaussian')


def test_exact_inner_products():
    assert_allclose(norm_sq(preset('hat')), 2.0 / 3.0, rtol=1e-14)
    assert_allclose(norm_sq(preset('bump')), 256.0 / 315.0, rtol=1e-14)
    # <ix f, f> = i int x f^2 vanishes for even f
    assert abs(inner_product(times_ix(preset('smooth_bump')), preset("smooth_bump"))) < 1e-14


def test_linear_combination():
    f = add(preset('hat'), preset('bump'), 2j)
    x = np.linspace(-1.5, 1.5, 13)
    assert_allclose(evaluate(f, x), evaluate(preset('hat'), x) + 2j * evaluate(preset('bump'), x))
    assert_allclose(inner_product(f, preset('hat')),
                    inner_product(preset('hat'), preset('hat')) + 2j * inner_product(preset('bump'), preset('hat')))


def test_composite_rule_weights():
    nodes, weights = composite_rule(0.0, 3.0, 4)
    assert np.all(np.diff(nodes) > 0)
    assert_allclose(np.sum(weights), 3.0, rtol=1e-14)
    assert_allclose(weights @ nodes ** 5, 3.0 ** 6 / 6.0, rtol=1e-13)


def test_adaptive_integrate():
    value, error, _ = adaptive_integrate(np.sin, 0.0, math.pi)
    assert_allclose(value, 2.0, rtol=1e-12)
    assert error < 1e-10


def test_adaptive_integrate_complex():
    omega = 7.5
    value, _, evaluations = adaptive_integrate(lambda x: np.exp(1j * omega * x), 0.0, 1.0)
    assert_allclose(value, (np.exp(1j * omega) - 1.0) / (1j * omega), rtol=1e-12)
    assert evaluations > 0


def test_adaptive_empty_interval():
    assert adaptive_integrate(np.cos, 1.0, 1.0) == (0j, 0.0, 0)


def test_adaptive_budget():
    with pytest.raises(QuadratureFailure):
        adaptive_integrate(lambda x: np.sign(x - 0.3), -1.0, 1.0, tol=1e-15, max_evals=200)


def test_adaptive_non_finite():
    with pytest.raises(QuadratureFailure):
        adaptive_integrate(lambda x: np.full(np.shape(x), np.nan), 0.0, 1.0)


def test_slope_jumps():
    assert slope_jumps(preset('hat')) == [(-1.0, 1.0), (0.0, -2.0), (1.0, 1.0)]
    assert slope_jumps(preset('smooth_bump')) == []
    assert slope_jumps(preset('shifted_cubic')) == []
    ramp = TestFunction(pieces=[PolynomialPiece(a=0.0, b=2.0, coefficients=[0j, 1.5j])])
    assert slope_jumps(ramp) == [(0.0, 1.5j), (2.0, -1.5j)]


@pytest.mark.parametrize("d", [0.0, 0.3, -0.3, 1.4436, 5.0])
def test_cosine_tail(d):
    nu_max = 40.0
    if d == 0.0:
        expected = 1.0 / nu_max
    else:
        expected, _ = quad(lambda nu: 1.0 / nu ** 2, nu_max, np.inf, weight='cos', wvar=abs(d), epsabs=1e-14)
    assert float(cosine_tail(nu_max, d)) == pytest.approx(expected, rel=1e-6, abs=1e-12)


def test_truncation_tail_at_a_single_kink():
    # a slope jump of -2 at x = 0 leaves 1 / (pi nu_max) missing at the kink
    nu_max = 40.0
    missing = truncation_tail([(0.0, -2.0)], nu_max, np.array([0.0]))
    assert_allclose(missing, [1.0 / (math.pi * nu_max)], rtol=1e-14)
    far = truncation_tail([(0.0, -2.0)], nu_max, np.array([50.0]))
    assert abs(far[0]) < 1e-4


def test_spectral_cutoffs_are_validated(params):
    with pytest.raises(ConfigError):
        sample_transform(params, preset('hat'), nu_max=0.0005)
    with pytest.raises(ConfigError):
        sample_transform(params, preset('hat'), nu_max=np.inf)


def test_integer_label_difference(params):
    with pytest.raises(DegenerateError):
        sample_transform(params, preset('hat'), t=0.1, s=2.1)


def test_zero_function(params):
    zero = add(preset('hat'), preset('hat'), -1.0)
    assert forward_transform(params, zero, 0.4j, 0.1) == pytest.approx(0.0, abs=1e-14)


def test_kernel_difference_identity():
    lhs, rhs = kernel_difference(Params(alpha=0.3, beta=0.7), 0.7 + 0.2j, 0.1, 0.4)
    assert_allclose(rhs, lhs, rtol=1e-8)


def test_middle_coefficient_vanishes():
    assert difference_coefficients(Params(alpha=0.0, beta=0.7), 0.3 + 0.4j)[1] == 0
    assert difference_coefficients(Params(alpha=0.3, beta=0.0), 0.3 + 0.4j)[1] == 0


def test_difference_coefficient_poles(params):
    with pytest.raises(PoleError):
        difference_coefficients(params, 0.5)


def test_transform_difference_identity(params):
    f = preset('smooth_bump')
    sigma, t = 0.2 + 0.6j, 0.1 - 0.1j

    def transform(s, label):
        return forward_transform(params, f, s, label)

    expected = forward_transform(params, times_ix(f), sigma, t)
    assert abs(difference_operator_z(params, transform, sigma, t) - expected) <= 1e-7 * (1.0 + abs(expected))


@pytest.fixture(scope="module")
def bump_sample():
    return sample_transform(Params(alpha=0.3, beta=0.7), preset('smooth_bump'), t=0.1, s=0.37 + 0.2j)


def test_resolution_guard(params):
    sample = sample_transform(params, preset('smooth_bump'), nu_max=2.0)
    with pytest.raises(ResolutionError):
        inverse_transform(params, sample, [100.0])


@pytest.mark.slow
def test_roundtrip(bump_sample, params):
    x = np.linspace(-2.0, 2.0, 41)
    assert np.max(np.abs(inverse_transform(params, bump_sample, x) - evaluate(preset('smooth_bump'), x))) < 1e-3


@pytest.mark.slow
def test_roundtrip_complex_combination(params):
    f = complex_combination()
    x = np.linspace(-2.0, 2.0, 41)
    sample = sample_transform(params, f)
    assert np.max(np.abs(inverse_transform(params, sample, x) - evaluate(f, x))) < 1e-3


@pytest.mark.slow
@pytest.mark.parametrize("alpha, beta", [(0.3, 0.7), (0.3, 0.2)])
def test_hat_roundtrip(alpha, beta):
    params = Params(alpha=alpha, beta=beta)
    hat = preset('hat')
    x = np.linspace(-2.0, 2.0, 41)
    sample = sample_transform(params, hat)
    assert sample.slope_jumps == [(-1.0, 1.0), (0.0, -2.0), (1.0, 1.0)]
    error = np.abs(inverse_transform(params, sample, x) - evaluate(hat, x))
    assert np.max(error) < 1e-3
    # the cut-off integral alone is short by about 1/(pi nu_max) at the kinks
    truncated = np.abs(inverse_transform(params, sample, x, tail_correction=False) - evaluate(hat, x))
    assert np.max(truncated) > 5e-3


@pytest.mark.slow
def test_piecewise_linear_roundtrip(params):
    ramp = TestFunction(pieces=[
        PolynomialPiece(a=-1.5, b=0.5, coefficients=[0.75 + 0.375j, 0.5 + 0.25j]),
        PolynomialPiece(a=0.5, b=1.5, coefficients=[1.5 + 0.75j, -1.0 - 0.5j]),
    ])
    x = np.linspace(-2.0, 2.0, 41)
    sample = sample_transform(params, ramp)
    assert np.max(np.abs(inverse_transform(params, sample, x) - evaluate(ramp, x))) < 1e-3


@pytest.mark.slow
def test_plancherel(bump_sample, params):
    g = preset('shifted_cubic')
    other = sample_transform(params, g, t=0.1, s=0.37 + 0.2j)
    exact = inner_product(preset('smooth_bump'), g)
    assert abs(plancherel_pairing(params, bump_sample, other) - exact) <= 1e-4 * (1.0 + abs(exact))


@pytest.mark.slow
def test_discrete_roundtrip(discrete_params):
    f = preset('smooth_bump')
    x = np.linspace(-2.0, 2.0, 21)
    sample = sample_transform(discrete_params, f)
    assert len(sample.discrete_values) == 2
    assert np.max(np.abs(inverse_transform(discrete_params, sample, x) - evaluate(f, x))) < 1e-3
