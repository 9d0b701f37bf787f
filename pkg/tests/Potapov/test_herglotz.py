from MIntPy.Potapov import ExtractionBudgetException
from MIntPy.Potapov import NegativeImaginaryPartException
from MIntPy.Potapov import herglotz_extract
from MIntPy.Potapov import herglotz_extract_adaptive
from MIntPy.Potapov import herglotz_offset
from MIntPy.MatCore import MatrixFunction
from MIntPy.MatCore import random_positive
import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(23)


def _poisson_function(c, t0=None):
    """T(z) = t0 + i (1 + z)/(1 - z) c, whose representing function is a point mass c at angle 0."""
    t0 = np.zeros_like(c) if t0 is None else t0
    return MatrixFunction(lambda z: t0 + 1j * (1 + z) / (1 - z) * c, c.shape[0],
                          batch_fn=lambda zs: t0 + 1j * ((1 + zs) / (1 - zs))[:, None, None] * c)


def test_herglotz_extract_0(rng):
    """T = iM has the uniform density M / 2pi."""
    m = random_positive(rng, 3)
    angles, sigma = herglotz_extract(MatrixFunction.constant(1j * m), 0.9, 64)
    assert np.max(np.abs(sigma - angles[:, None, None] * m / (2 * np.pi))) <= 1e-6
    assert np.allclose(sigma[0], 0)


def test_herglotz_extract_1(rng):
    """Hermitian constants have no mass."""
    t0 = random_positive(rng, 2) - np.eye(2)
    _, sigma = herglotz_extract(MatrixFunction.constant(t0), 0.5, 32)
    assert np.max(np.abs(sigma)) <= 1e-12


def test_herglotz_extract_2():
    """A point mass at angle 0 is recovered by the extraction near the circle."""
    c = np.diag([1.0, 2.0])
    angles, sigma = herglotz_extract(_poisson_function(c), 0.998, 2 ** 14)
    assert np.allclose(sigma[-1], c, atol=1e-8)
    traces = np.real(np.trace(sigma, axis1=-2, axis2=-1))
    near = traces[np.searchsorted(angles, 0.1)] + traces[-1] - traces[np.searchsorted(angles, 2 * np.pi - 0.1)]
    assert near >= 0.95 * traces[-1]


def test_herglotz_extract_3(rng):
    """The extracted function is nondecreasing."""
    c = random_positive(rng, 2)
    _, sigma = herglotz_extract(_poisson_function(c), 0.9, 256)
    assert np.min(np.linalg.eigvalsh(np.diff(sigma, axis=0))) >= -1e-8


def test_herglotz_extract_4():
    with pytest.raises(NegativeImaginaryPartException):
        herglotz_extract(MatrixFunction.constant(-1j * np.eye(2)), 0.5, 16)
    with pytest.raises(AssertionError):
        herglotz_extract(MatrixFunction.constant(1j * np.eye(2)), 0.5, 100)
    with pytest.raises(AssertionError):
        herglotz_extract(MatrixFunction.constant(1j * np.eye(2)), 1.0, 16)


def test_herglotz_extract_adaptive_0():
    """A point mass seen from 1e-5 inside the circle is recovered with a few thousand cells."""
    c = np.diag([1.0, 2.0])
    angles, sigma = herglotz_extract_adaptive(_poisson_function(c), 1 - 1e-5, 1024)
    assert np.allclose(sigma[-1], c, atol=1e-7)
    assert len(angles) - 1 <= 2 ** 15
    assert np.all(np.diff(angles) > 0) and angles[0] == 0 and angles[-1] == 2 * np.pi
    assert np.min(np.linalg.eigvalsh(np.diff(sigma, axis=0))) >= -1e-12
    traces = np.real(np.trace(sigma, axis1=-2, axis2=-1))
    near = traces[np.searchsorted(angles, 0.01)] + traces[-1] - traces[np.searchsorted(angles, 2 * np.pi - 0.01)]
    assert near >= 0.99 * traces[-1]


def test_herglotz_extract_adaptive_1(rng):
    """On smooth data the adaptive grid agrees with the uniform one and stays uniform."""
    c = random_positive(rng, 2)
    angles, sigma = herglotz_extract_adaptive(_poisson_function(c), 0.5, 256, rtol=1e-6)
    uniform_angles, uniform_sigma = herglotz_extract(_poisson_function(c), 0.5, 256)
    assert np.allclose(angles[::2], uniform_angles)
    assert np.allclose(sigma[::2], uniform_sigma, atol=1e-6)


def test_herglotz_extract_adaptive_2():
    with pytest.raises(ExtractionBudgetException):
        herglotz_extract_adaptive(_poisson_function(np.eye(2)), 1 - 1e-9, 16, max_angles=64)
    with pytest.raises(NegativeImaginaryPartException):
        herglotz_extract_adaptive(MatrixFunction.constant(-1j * np.eye(2)), 0.5, 16)


def test_herglotz_offset_0(rng):
    t0 = random_positive(rng, 2) - np.eye(2)
    offset = herglotz_offset(_poisson_function(np.eye(2), t0))
    assert np.allclose(offset, t0, atol=1e-12)
