from MIntPy.ProdInt import StepIntegrator
from MIntPy.ProdInt import LinearIntegrator
from MIntPy.ProdInt import DensityIntegrator
from MIntPy.ProdInt import CantorIntegrator
from MIntPy.ProdInt import ComposedIntegrator
from MIntPy.ProdInt import ConstantKernel
from MIntPy.ProdInt import CallableKernel
from MIntPy.ProdInt import MonotoneMap
from MIntPy.ProdInt import Integrator
from MIntPy.ProdInt import InvalidIntegratorException
from MIntPy.ProdInt import cantor_function
from MIntPy.ProdInt import variation
from MIntPy.ProdInt.reference_examples import random_linear_integrator
from MIntPy.ProdInt.reference_examples import random_density_integrator
from MIntPy.MatCore import random_unitary
from MIntPy.MatCore import spectral_norm
import numpy as np
import pytest

SWAP = np.array([[0, 1], [1, 0]])


@pytest.fixture
def rng():
    return np.random.default_rng(1)


@pytest.fixture
def step_integrator():
    return StepIntegrator(0, 1, [0.25, 1.0], [np.diag([1.0, 0.0]), np.diag([0.0, -3.0])])


def test_step_integrator_0(step_integrator):
    """Step integrators are right-continuous."""
    assert np.allclose(step_integrator.value(0.2), 0)
    assert np.allclose(step_integrator.value(0.25), np.diag([1, 0]))
    assert np.allclose(step_integrator.value(1.0), np.diag([1, -3]))


def test_step_integrator_1(step_integrator):
    """Jumps are selected on half-open intervals (s, t]."""
    locs, _ = step_integrator.jumps_in(0.25, 1.0)
    assert np.allclose(locs, [1.0])
    assert np.allclose(step_integrator.continuous_increments(np.linspace(0, 1, 5)), 0)


def test_step_integrator_2(step_integrator):
    """The variation is the sum of the jump norms."""
    assert np.isclose(variation(step_integrator, 0.5), 1.0)
    assert np.isclose(variation(step_integrator, 1.0), 4.0)


def test_step_integrator_3():
    """Jump locations must lie in (a, b]."""
    with pytest.raises(InvalidIntegratorException):
        StepIntegrator(0, 1, [0.0], [np.eye(2)])


def test_step_integrator_4():
    """Negative jumps are rejected when increasing."""
    with pytest.raises(InvalidIntegratorException):
        StepIntegrator(0, 1, [0.5], [-np.eye(2)], increasing=True)


def test_step_integrator_5(step_integrator):
    f = CallableKernel(lambda ts: ts)
    assert np.allclose(step_integrator.stieltjes(f), np.diag([0.25, -3.0]))


def test_linear_integrator_0():
    E = LinearIntegrator.from_slope(0, 2, SWAP)
    assert np.allclose(E.value(1.5), 1.5 * SWAP)
    assert np.isclose(variation(E, 1.5), 1.5)
    assert np.allclose(E.derivative(np.array([0.3])), SWAP)


def test_linear_integrator_1():
    """Stieltjes integrals reduce to slope times the integral of f."""
    E = LinearIntegrator([0, 1, 2], [np.zeros((2, 2)), SWAP, SWAP + np.diag([0, 2])])
    f = CallableKernel(lambda ts: ts ** 2)
    expected = SWAP / 3 + np.diag([0, 2]) * 7 / 3
    assert np.allclose(E.stieltjes(f), expected, atol=1e-12)


def test_linear_integrator_2():
    with pytest.raises(InvalidIntegratorException):
        LinearIntegrator([0, 1], [np.zeros((2, 2)), -np.eye(2)], increasing=True)


def test_linear_integrator_3():
    with pytest.raises(InvalidIntegratorException):
        LinearIntegrator([0, 0], [np.zeros((2, 2)), np.eye(2)])


def test_linear_integrator_4():
    """Non-Hermitian node values are rejected for Hermitian integrators."""
    with pytest.raises(InvalidIntegratorException):
        LinearIntegrator([0, 1], [np.zeros((2, 2)), np.array([[0, 1], [0, 0]])])
    E = LinearIntegrator([0, 1], [np.zeros((2, 2)), np.array([[0, 1], [0, 0]])], hermitian=False)
    assert not E.hermitian


def test_variation_0(rng):
    """Increasing integrators with tr E(t) = t have |E|(t) <= t."""
    for _ in range(10):
        E = random_linear_integrator(rng, 3)
        trace = np.real(E.trace(E.b) - E.trace(E.a))
        values = E.values / trace
        normalized = LinearIntegrator(E.nodes, values, increasing=True)
        for t in np.linspace(0, 1, 5):
            assert variation(normalized, t) <= np.real(normalized.trace(t)) + 1e-12


def test_variation_1():
    with pytest.raises(AssertionError):
        variation(LinearIntegrator.from_slope(0, 1, np.eye(2)), 1.5)


def test_density_integrator_0():
    """E(t) = int_0^t diag(1, 2s) ds = diag(t, t^2)."""
    E = DensityIntegrator(lambda t: np.diag([1.0, 2 * t]), 0, 1, increasing=True)
    assert np.allclose(E.value(0.5), np.diag([0.5, 0.25]), atol=1e-12)
    assert np.allclose(E.continuous_increments([0, 0.5, 1]), [np.diag([0.5, 0.25]), np.diag([0.5, 0.75])])
    assert np.isclose(variation(E, 1.0), 1.25, atol=1e-9)


def test_density_integrator_1():
    f = CallableKernel(lambda ts: np.exp(1j * ts))
    E = DensityIntegrator(lambda t: np.eye(2), 0, np.pi, increasing=True)
    assert np.allclose(E.stieltjes(f), 2j * np.eye(2), atol=1e-10)


def test_density_integrator_2():
    with pytest.raises(InvalidIntegratorException):
        DensityIntegrator(lambda t: -np.eye(2), 0, 1, increasing=True)
    with pytest.raises(InvalidIntegratorException):
        DensityIntegrator(lambda t: np.eye(2) * (t - 2), 0, 1, lower_bound=0.0)


def test_density_integrator_3(rng):
    """Vectorized densities agree with pointwise evaluation."""
    E = random_density_integrator(rng, 3)
    pointwise = DensityIntegrator(lambda t: E.density(np.array([t]))[0], 0, 1, increasing=True)
    assert np.allclose(E.value(0.7), pointwise.value(0.7), atol=1e-12)
    assert E.is_increasing_on()


def test_cantor_function_0():
    assert np.allclose(cantor_function([0, 1 / 3, 0.5, 2 / 3, 1]), [0, 0.5, 0.5, 0.5, 1])
    assert np.isclose(cantor_function(0.25), 1 / 3, atol=1e-5)


def test_cantor_integrator_0():
    E = CantorIntegrator(np.eye(2), a=0, b=1, depth=6)
    assert np.allclose(E.value(0.5), 0.5 * np.eye(2))
    assert E.increasing and E.is_increasing_on()
    assert np.isclose(E.sup_error, 2 ** -6)
    assert np.isclose(variation(E, 1.0), 1.0)


def test_cantor_integrator_1():
    """The derivative vanishes on the removed middle thirds."""
    E = CantorIntegrator(np.eye(2), a=0, b=1, depth=4)
    assert np.allclose(E.derivative(np.array([0.5, 0.2])), 0)


def test_conjugated_0(rng):
    E = LinearIntegrator.from_slope(0, 1, np.diag([1.0, 2.0]), increasing=True)
    u = random_unitary(rng, 2)
    conj = E.conjugated(u)
    assert np.allclose(conj.value(0.5), u @ E.value(0.5) @ u.conj().T)
    assert conj.increasing and conj.hermitian


def test_conjugated_1():
    """Non-unitary conjugations do not preserve Hermitian values."""
    E = LinearIntegrator.from_slope(0, 1, np.diag([1.0, 2.0]), increasing=True)
    conj = E.conjugated(np.array([[1.0, 1.0], [0.0, 1.0]]))
    assert not conj.hermitian and not conj.increasing


def test_composed_0():
    E = LinearIntegrator.from_slope(0, 1, np.eye(2))
    composed = ComposedIntegrator(E, MonotoneMap.linear(0, 1, 0, 2))
    assert composed.domain == (0, 2)
    assert np.allclose(composed.value(1.0), 0.5 * np.eye(2))


def test_composed_1():
    """A jump of phi gives a constancy interval of the composed integrator."""
    E = LinearIntegrator.from_slope(0, 1, np.eye(2))
    composed = ComposedIntegrator(E, MonotoneMap([0, 0.5, 1], [0, 1], [0.5, 1.5]))
    assert np.allclose(composed.value(0.75), composed.value(1.0))
    assert np.allclose(composed.breakpoints(), [0.5, 1.0])


def test_composed_2():
    E = StepIntegrator(0, 1, [0.5], [np.eye(2)])
    with pytest.raises(InvalidIntegratorException):
        ComposedIntegrator(E, MonotoneMap.identity(0, 1))


def test_lipschitz_constant_0():
    assert np.isclose(LinearIntegrator.from_slope(0, 1, 3 * np.eye(2)).lipschitz_constant(), 3)
    assert StepIntegrator(0, 1, [0.5], [np.eye(2)]).lipschitz_constant() == np.inf


def test_generic_stieltjes_0():
    """The generic Richardson route matches the exact linear one."""
    E = LinearIntegrator.from_slope(0, 1, SWAP)
    composed = ComposedIntegrator(E, MonotoneMap.identity(0, 1))
    f = CallableKernel(lambda ts: np.cos(ts))
    assert np.allclose(composed.stieltjes(f), E.stieltjes(f), atol=1e-10)
    assert np.isclose(composed.variation(1.0), 1.0, atol=1e-10)


def test_integrator_factory_0():
    E = Integrator('step', 0, 1, locations=[0.5], jumps=[np.eye(2)], increasing=True)
    assert isinstance(E, StepIntegrator)
    E = Integrator('piecewise_linear', nodes=[0, 1], values=[np.zeros((2, 2)), np.eye(2)])
    assert isinstance(E, LinearIntegrator)
    E = Integrator('density', 0, 1, density=lambda t: np.eye(2))
    assert isinstance(E, DensityIntegrator)
    E = Integrator('cantor_singular', 0, 1, scale=np.eye(2), depth=3)
    assert isinstance(E, CantorIntegrator) and E.depth == 3


def test_integrator_factory_1():
    with pytest.raises(InvalidIntegratorException):
        Integrator('brownian', 0, 1)
    with pytest.raises(InvalidIntegratorException):
        Integrator('step', 0, 1, locations=[0.5])


def test_additive_bound_0():
    assert np.isclose(spectral_norm(LinearIntegrator.from_slope(0, 1, np.eye(2)).stieltjes(ConstantKernel(2.0))), 2.0)
