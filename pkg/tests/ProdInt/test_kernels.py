from MIntPy.ProdInt import herglotz_kernel
from MIntPy.ProdInt import StepFunction
from MIntPy.ProdInt import ConstantKernel
from MIntPy.ProdInt import HerglotzKernel
from MIntPy.ProdInt import TabulatedKernel
from MIntPy.ProdInt import CallableKernel
from MIntPy.ProdInt import MonotoneMap
from MIntPy.ProdInt import Kernel
from MIntPy.ProdInt import InvalidKernelException
import numpy as np
import pytest


def test_herglotz_kernel_0():
    """h_0 is identically -1."""
    assert np.allclose(herglotz_kernel(0, np.linspace(0, 2 * np.pi, 7)), -1)


def test_herglotz_kernel_1():
    """The real part is minus the Poisson kernel."""
    z, theta = 0.5 * np.exp(0.3j), np.linspace(0, 2 * np.pi, 11)
    poisson = (1 - abs(z) ** 2) / np.abs(np.exp(1j * theta) - z) ** 2
    assert np.allclose(np.real(herglotz_kernel(z, theta)), -poisson)


def test_step_function_0():
    """Step functions are right-continuous."""
    theta = StepFunction([0.5, 1.0], [0.0, 1.0, 3.0])
    assert np.allclose(theta([0.0, 0.4999, 0.5, 0.9, 1.0, 2.0]), [0, 0, 1, 1, 3, 3])
    assert theta.is_nondecreasing()


def test_step_function_1():
    with pytest.raises(AssertionError):
        StepFunction([0.5], [0.0])


def test_constant_kernel_0():
    f = ConstantKernel(2 - 1j)
    values = f(np.array([0.0, 1.0, 2.0]))
    assert values.dtype == complex
    assert np.allclose(values, 2 - 1j)


def test_herglotz_kernel_class_0():
    """Step angles become kernel breakpoints."""
    f = HerglotzKernel(0.3j, theta=StepFunction([0.25], [0.0, np.pi]))
    assert np.allclose(f.breakpoints(), [0.25])
    assert np.isclose(f(np.array([0.1]))[0], herglotz_kernel(0.3j, 0.0))
    assert np.isclose(f(np.array([0.3]))[0], herglotz_kernel(0.3j, np.pi))


def test_herglotz_kernel_class_1():
    f = HerglotzKernel(0.2, theta=1.0)
    assert np.allclose(f(np.linspace(0, 1, 5)), herglotz_kernel(0.2, 1.0))


def test_herglotz_kernel_class_2():
    with pytest.raises(AssertionError):
        HerglotzKernel(1.0)


def test_herglotz_kernel_class_3():
    """Decreasing or out-of-range angle data is rejected at construction."""
    for theta in (StepFunction([0.5], [np.pi, 1.0]), StepFunction([0.5], [0.0, 7.0]), -0.1, 2 * np.pi + 0.1):
        with pytest.raises(InvalidKernelException):
            HerglotzKernel(0.3, theta=theta)
    f = HerglotzKernel(0.3, theta=StepFunction([0.5], [0.0, 2 * np.pi]))
    assert np.allclose(f(np.array([0.1, 0.9])), herglotz_kernel(0.3, 0.0))


def test_tabulated_kernel_0():
    f = TabulatedKernel([0, 1, 2], [0, 1j, 2])
    assert np.allclose(f(np.array([0.5, 1.5])), [0.5j, 1 + 0.5j])


def test_derived_kernels_0():
    f = CallableKernel(lambda ts: 1j * ts - 2, breakpoints=[0.5])
    ts = np.linspace(0, 1, 5)
    assert np.allclose(f.modulus()(ts), np.abs(1j * ts - 2))
    assert np.allclose(f.real_part(2.0)(ts), -4)
    assert np.allclose(f.shifted(1)(ts), 1j * ts - 1)
    assert np.allclose(f.modulus().breakpoints(), [0.5])


def test_derived_kernels_1():
    """Composition maps kernel breakpoints back through the generalized inverse."""
    f = CallableKernel(lambda ts: ts, breakpoints=[1.0])
    phi = MonotoneMap.linear(0, 1, 0, 2)
    g = f.composed(phi)
    assert np.allclose(g(np.array([0.25])), 0.5)
    assert np.allclose(g.breakpoints(), [0.5])


def test_sup_modulus_0():
    assert np.isclose(CallableKernel(lambda ts: np.sin(np.pi * ts)).sup_modulus(0, 1), 1.0)


def test_kernel_factory_0():
    assert isinstance(Kernel('constant', c=1), ConstantKernel)
    f = Kernel('herglotz', z=0.5, theta={'jump_points': [1.0], 'values': [0.0, 1.0]})
    assert isinstance(f, HerglotzKernel) and isinstance(f.theta, StepFunction)
    assert isinstance(Kernel('tabulated', ts=[0, 1], values=[0, 1]), TabulatedKernel)


def test_kernel_factory_1():
    with pytest.raises(InvalidKernelException):
        Kernel('gaussian', c=1)
    with pytest.raises(InvalidKernelException):
        Kernel('constant')
