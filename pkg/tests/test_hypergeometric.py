import cmath

import mpmath
import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.exceptions import DegenerateError, LogarithmicCase, ParameterPole, RangeError
from src.models import SeriesStatus
from src.series import contiguous_step_2f1, gauss_2f1, gauss_sum, hyp2f1_array


def _mp_2f1(a, b, c, z):
    return complex(mpmath.hyp2f1(mpmath.mpc(a), mpmath.mpc(b), mpmath.mpc(c), mpmath.mpc(z)))


@pytest.mark.parametrize("z", [
    0.3,                        # Taylor at the origin
    0.9 + 0.1j,                 # 1 - z connection
    -3.0,                       # Pfaff
    -0.2 + 0.95j,               # Pfaff, close to the unit circle
    cmath.exp(2.5j),            # unit circle
    -40.0 + 5.0j,               # continuation along the ray
])
def test_regions_match_mpmath(z):
    a, b, c = 0.3 + 0.2j, 0.7 - 0.1j, 1.6 + 0.3j
    assert_allclose(gauss_2f1(a, b, c, z).value, _mp_2f1(a, b, c, z), rtol=1e-10)


def test_terminating_polynomial():
    z = np.array([-5.0, 0.5, 3.0 + 4.0j])
    values, _, terms = hyp2f1_array(-3, 1.5, 2.5, z)
    expected = [_mp_2f1(-3, 1.5, 2.5, v) for v in z]
    assert terms == 4
    assert_allclose(values, expected, rtol=1e-12)


def test_near_one_with_c_one_and_a_half():
    value = gauss_2f1(0.6, 0.8, 1.5, 0.97)
    assert value.status == SeriesStatus.converged
    assert_allclose(value.value, _mp_2f1(0.6, 0.8, 1.5, 0.97), rtol=1e-11)


def test_logarithmic_case():
    with pytest.raises(LogarithmicCase):
        gauss_2f1(0.6, 0.8, 1.4, 0.97)


def test_parameter_pole():
    with pytest.raises(ParameterPole):
        gauss_2f1(0.5, 0.5, -2, 0.1)


def test_branch_cut():
    with pytest.raises(RangeError):
        gauss_2f1(0.5, 0.25, 1.5, 2.0)


def test_gauss_sum():
    a, b, c = 0.2 + 0.1j, 0.4, 2.1 - 0.3j
    assert_allclose(gauss_sum(a, b, c), _mp_2f1(a, b, c, 1), rtol=1e-12)


def test_one_minus_z_supplied_exactly():
    x = 1e4
    p, q = 0.5 + 1j * x, 0.5 - 1j * x
    values, _, _ = hyp2f1_array(0.8, 0.5 + 0.7j, 1.5 + 0.7j, np.array([-p / q]), one_minus_z=np.array([1.0 / q]))
    assert_allclose(values[0], _mp_2f1(0.8, 0.5 + 0.7j, 1.5 + 0.7j, -p / q), rtol=1e-10)


def test_contiguous_relation(rng):
    for _ in range(5):
        p = complex(rng.uniform(0.1, 1.0), rng.uniform(-0.5, 0.5))
        q = complex(rng.uniform(2.2, 3.0), rng.uniform(-0.5, 0.5))
        r = complex(rng.uniform(1.5, 2.5), rng.uniform(-0.5, 0.5))
        y = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
        assert contiguous_step_2f1(p, q, r, y) < 1e-10


def test_contiguous_relation_degenerate():
    with pytest.raises(DegenerateError):
        contiguous_step_2f1(0.5, 1.5, 2.0, 0.3)
