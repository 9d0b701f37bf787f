from MIntPy.ProdInt import LinearIntegrator
from MIntPy.ProdInt import ConstantKernel
from MIntPy.ProdInt import CallableKernel
from MIntPy.ProdInt import prod_integral
from MIntPy.ProdInt import StepIntegrator
from MIntPy.ProdInt import stieltjes_integral
from MIntPy.ProdInt import determinant_formula
from MIntPy.ProdInt import norm_bound
from MIntPy.ProdInt import taylor_certificate
from MIntPy.ProdInt import telescoping_difference
from MIntPy.ProdInt import additive_stieltjes_bound
from MIntPy.ProdInt import product_estimate
from MIntPy.ProdInt.reference_examples import random_linear_integrator
from MIntPy.ProdInt.reference_examples import random_smooth_kernel
from MIntPy.MatCore import random_matrix
from MIntPy.MatCore import spectral_norm
import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(11)


def test_stieltjes_integral_0():
    """f(t) = t against E(t) = tM on [0, 1] gives M / 2."""
    m = np.array([[1.0, 2j], [-2j, 3.0]])
    E = LinearIntegrator.from_slope(0, 1, m)
    assert np.allclose(stieltjes_integral(CallableKernel(lambda ts: ts), E), m / 2)


def test_stieltjes_integral_1():
    """A step integrator sums f at its jump locations times the jumps."""
    jumps = [np.diag([1.0, 0.0]), np.diag([0.0, 2.0])]
    E = StepIntegrator(0, 1, [0.25, 0.75], jumps)
    assert np.allclose(stieltjes_integral(CallableKernel(lambda ts: ts), E), np.diag([0.25, 1.5]))
    assert np.allclose(stieltjes_integral(CallableKernel(lambda ts: ts), E, 0, 0.5), np.diag([0.25, 0.0]))


def test_determinant_formula_0():
    E = LinearIntegrator.from_slope(0, 1, np.diag([0.5, 0.5]))
    assert np.isclose(determinant_formula(ConstantKernel(2.0), E), np.exp(2))


def test_norm_bound_0():
    """Equality for f = 1 against E(t) = t I."""
    E = LinearIntegrator.from_slope(0, 1, np.eye(2), increasing=True)
    assert np.isclose(norm_bound(ConstantKernel(1.0), E), np.e)
    assert np.isclose(spectral_norm(prod_integral(ConstantKernel(1.0), E).value), np.e)


def test_taylor_certificate_0():
    """f = 1 against t diag(1, 1/2) on [0, 1] has s = 1 and remainder bound e - 2."""
    E = LinearIntegrator.from_slope(0, 1, np.diag([1.0, 0.5]))
    linear_part, bound = taylor_certificate(ConstantKernel(1.0), E)
    assert np.isclose(bound, np.e - 2)
    assert np.allclose(linear_part, np.diag([2.0, 1.5]))


def test_taylor_certificate_1():
    E = LinearIntegrator.from_slope(0, 1, np.eye(2))
    linear_part, bound = taylor_certificate(ConstantKernel(0.0), E)
    assert bound == 0 and np.allclose(linear_part, np.eye(2))


def test_taylor_certificate_2(rng):
    """The multiplicative integral lies within the remainder bound of its first-order expansion."""
    for _ in range(5):
        E = random_linear_integrator(rng, 3, scale=0.2)
        f = random_smooth_kernel(rng)
        linear_part, bound = taylor_certificate(f, E)
        assert spectral_norm(prod_integral(f, E, tol=1e-10).value - linear_part) <= bound + 1e-9


def test_telescoping_difference_0(rng):
    for m in (1, 3, 8):
        ps = [np.eye(3) + 0.3 * random_matrix(rng, 3) for _ in range(m)]
        qs = [np.eye(3) + 0.3 * random_matrix(rng, 3) for _ in range(m)]
        lhs, rhs = telescoping_difference(ps, qs)
        assert np.allclose(lhs, rhs, atol=1e-10)


def test_telescoping_difference_1():
    with pytest.raises(AssertionError):
        telescoping_difference([np.eye(2)], [])


def test_product_estimate_0(rng):
    factors = [np.eye(2) + 0.1 * random_matrix(rng, 2) for _ in range(6)]
    distance, bound = product_estimate(factors)
    assert distance <= bound + 1e-12


def test_product_estimate_1():
    distance, bound = product_estimate([np.eye(2), np.eye(2)])
    assert distance == 0 and bound == 0


def test_additive_stieltjes_bound_0(rng):
    for _ in range(5):
        E = random_linear_integrator(rng, 2)
        integral, bound = additive_stieltjes_bound(random_smooth_kernel(rng), E)
        assert integral <= bound + 1e-9


def test_additive_stieltjes_bound_1():
    """Equality for a constant kernel against t I."""
    integral, bound = additive_stieltjes_bound(CallableKernel(lambda ts: 2 + 0 * ts),
                                               LinearIntegrator.from_slope(0, 1, np.eye(2), increasing=True))
    assert np.isclose(integral, bound)
