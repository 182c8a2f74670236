import math

import numpy as np
import pytest
import scipy.special

from genairy import DomainError, PoleError, gamma

# mpmath.gamma at 30 digits
GAMMA_KNOWN = {
    0.5: 1.7724538509055160273,
    1.0 / 3.0: 2.6789385347077476337,
    2.0 / 3.0: 1.3541179394264004169,
    0.8: 1.1642297137253033736,
}


@pytest.mark.parametrize("p,ref", sorted(GAMMA_KNOWN.items()))
def test_known_values(p, ref):
    np.testing.assert_allclose(gamma(p), ref, rtol=1e-14)


def test_integers_factorial():
    for k in range(1, 12):
        np.testing.assert_allclose(gamma(float(k)), math.factorial(k - 1), rtol=1e-13)


def test_unit_interval_against_scipy():
    # the contract the initial-value formulas rely on: 1e-13 on (0, 2)
    p = np.linspace(0.005, 1.995, 399)
    ours = np.array([gamma(v) for v in p])
    np.testing.assert_allclose(ours, scipy.special.gamma(p), rtol=1e-13)


def test_reflection_negative_arguments():
    for p in (-0.5, -1.5, -2.25, -6.7):
        np.testing.assert_allclose(gamma(p), float(scipy.special.gamma(p)), rtol=1e-12)


def test_functional_equation():
    rng = np.random.default_rng(7)
    for p in rng.uniform(0.05, 5.0, size=50):
        np.testing.assert_allclose(gamma(p + 1.0), p * gamma(p), rtol=1e-13)


@pytest.mark.parametrize("p", [0.0, -1.0, -7.0])
def test_poles_raise(p):
    with pytest.raises(PoleError):
        gamma(p)


def test_non_finite_rejected():
    with pytest.raises(DomainError):
        gamma(float("nan"))
    with pytest.raises(DomainError):
        gamma(float("inf"))
