from MIntPy.Factorization import PpInnerSpec
from MIntPy.Factorization import ScInnerSpec
from MIntPy.Factorization import eval_pp_inner
from MIntPy.Factorization import eval_sc_inner
from MIntPy.Factorization import linear_measure_herglotz
from MIntPy.MatCore import random_positive
from MIntPy.MatCore import random_unitary
from MIntPy.MatCore import spectral_norm
from MIntPy.ProdInt import DensityIntegrator
from MIntPy.ProdInt import LinearIntegrator
from MIntPy.ProdInt import herglotz_kernel
import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(41)


def _rotating_projection(ts):
    """t -> v(t) v(t)* with v(t) = (cos t, sin t), a trace-one density with noncommuting values."""
    ts = np.asarray(ts, dtype=float)
    v = np.stack([np.cos(ts), np.sin(ts)], axis=-1)
    return v[:, :, None] * v[:, None, :]


def test_eval_pp_inner_0(rng):
    """A single rank-one block E(t) = t diag(1, 0) gives U exp(h_z(theta) l P)."""
    u = random_unitary(rng, 2)
    E = LinearIntegrator.from_slope(0, 0.7, np.diag([1.0, 0.0]), increasing=True)
    spec = PpInnerSpec([(0.7, 1.0, E)], tail_unitary=u)
    z = 0.3 + 0.2j
    expected = u @ np.diag([np.exp(0.7 * herglotz_kernel(z, 1.0)), 1.0])
    assert np.allclose(eval_pp_inner(spec, z), expected, atol=1e-12)


def test_eval_pp_inner_1():
    """Blocks with noncommuting densities satisfy the determinant formula and stay contractive."""
    E = DensityIntegrator(_rotating_projection, 0.0, 0.8, vectorized=True, increasing=True)
    spec = PpInnerSpec([(0.8, 2.0, E), (0.4, 5.0, None)], dim=2)
    for z in (0.0, 0.4 - 0.3j, -0.7j):
        value = eval_pp_inner(spec, z, tol=1e-10)
        assert abs(np.linalg.det(value) - spec.det(z)) <= 1e-8 * abs(spec.det(z))
        assert spectral_norm(value) <= 1 + 1e-8
    assert np.isclose(spec.det(0), np.exp(-1.2))


def test_eval_pp_inner_2(rng):
    """Values become unitary radially away from the block angles."""
    spec = PpInnerSpec([(0.5, 1.0, None), (0.3, 4.0, None)], tail_unitary=random_unitary(rng, 2))
    defects = []
    for r in (0.9, 0.99, 0.999):
        value = eval_pp_inner(spec, r * np.exp(2.5j))
        defects.append(spectral_norm(value @ value.conj().T - np.eye(2)))
    assert defects[0] > defects[1] > defects[2]
    assert defects[2] <= 1e-2


def test_eval_pp_inner_3():
    """The empty spec is its tail."""
    spec = PpInnerSpec([], tail_unitary=np.diag([1j, -1]))
    assert np.allclose(eval_pp_inner(spec, 0.5), np.diag([1j, -1]))
    assert spec.total_length == 0


def test_pp_inner_spec_0():
    with pytest.raises(AssertionError):
        PpInnerSpec([(0.0, 1.0, None)], dim=2)
    with pytest.raises(AssertionError):
        PpInnerSpec([(1.0, 2 * np.pi, None)], dim=2)
    with pytest.raises(AssertionError):
        PpInnerSpec([(1.0, 1.0, LinearIntegrator.from_slope(0, 1, np.eye(2), increasing=True))])
    with pytest.raises(AssertionError):
        PpInnerSpec([(1.0, 1.0, LinearIntegrator.from_slope(0, 0.5, np.eye(2) / 2, increasing=True))])


def test_eval_sc_inner_0(rng):
    """A zero scale gives the tail."""
    u = random_unitary(rng, 2)
    spec = ScInnerSpec.cantor(np.zeros((2, 2)), depth=4, tail_unitary=u)
    assert np.allclose(eval_sc_inner(spec, 0.3 - 0.1j), u)


def test_eval_sc_inner_1():
    """A diagonal scale gives the scalar singular inner functions of the scaled Cantor measures."""
    spec = ScInnerSpec.cantor(np.diag([0.3, 0.6]), depth=8)
    E = spec.integrator
    z = 0.4 + 0.1j
    expected = np.diag([np.exp(linear_measure_herglotz(z, E.nodes, np.real(E.values[:, j, j]))) for j in range(2)])
    value = eval_sc_inner(spec, z, tol=1e-10)
    assert np.allclose(value, expected, atol=1e-8)
    assert abs(np.linalg.det(value) - spec.det(z)) <= 1e-8


def test_eval_sc_inner_2(rng):
    """A full positive scale and a unitary tail give contractions satisfying the determinant formula."""
    spec = ScInnerSpec.cantor(random_positive(rng, 2, scale=0.5), depth=6, tail_unitary=random_unitary(rng, 2))
    for z in (0.0, 0.5j, -0.3 + 0.3j):
        value = eval_sc_inner(spec, z, tol=1e-9)
        assert spectral_norm(value) <= 1 + 1e-8
        assert abs(np.linalg.det(value) - spec.det(z)) <= 1e-8
    assert spec.singular


def test_eval_sc_inner_3():
    """The default Cantor depth is 14."""
    spec = ScInnerSpec.cantor(0.5 * np.eye(2))
    assert spec.integrator.depth == 14
    value = eval_sc_inner(spec, 0.2)
    assert spectral_norm(value) <= 1 + 1e-8
    assert np.allclose(value, value[0, 0] * np.eye(2))


def test_sc_inner_spec_0():
    with pytest.raises(AssertionError):
        ScInnerSpec(LinearIntegrator.from_slope(0, 1, np.eye(2), increasing=True))
    spec = ScInnerSpec.cantor(np.eye(2), depth=3)
    assert np.isclose(spec.to_mvf().det(0.2), spec.det(0.2))
