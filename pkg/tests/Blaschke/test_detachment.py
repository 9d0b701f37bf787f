from MIntPy.Blaschke import beta
from MIntPy.Blaschke import BPFactor
from MIntPy.Blaschke import BPFactorizer
from MIntPy.Blaschke import detachable
from MIntPy.Blaschke import detach_max
from MIntPy.Blaschke import factor_out_zeros
from MIntPy.Blaschke import random_bp_product
from MIntPy.Blaschke import NoZeroException
from MIntPy.Blaschke import IllConditionedFrameException
from MIntPy.Blaschke import UnconsumedZerosException
from MIntPy.MatCore import MatrixFunction
from MIntPy.MatCore import random_matrix
from MIntPy.MatCore import random_unitary
from MIntPy.MatCore import spectral_norm
import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(13)


def _grid(k=200, max_modulus=0.95):
    """Deterministic polar grid of k points."""
    radii = max_modulus * np.sqrt((np.arange(k) + 0.5) / k)
    return radii * np.exp(2j * np.pi * 0.618034 * np.arange(k))


def _max_gap(A, B, remainder, zs):
    return max(spectral_norm(A(z) - B(z) @ remainder(z)) for z in zs)


def test_detachable_0(rng):
    b = BPFactor(0.4j, random_unitary(rng, 3), 2)
    assert detachable(b.to_mvf(), b)


def test_detachable_1(rng):
    b = BPFactor(0.4j, random_unitary(rng, 2), 1)
    assert not detachable(MatrixFunction.constant(random_unitary(rng, 2)), b)


def test_detachable_2(rng):
    """A(z0) = (I - P) R has its range inside ker P."""
    b = BPFactor(-0.2 + 0.1j, random_unitary(rng, 3), 1)
    r, s = random_matrix(rng, 3), random_matrix(rng, 3)
    eye = np.eye(3)
    A = MatrixFunction(lambda z: (eye - b.projection) @ r + (z - b.zero) * s, 3)
    assert detachable(A, b)
    assert not detachable(MatrixFunction(lambda z: r, 3), b)


def test_detach_max_0(rng):
    """Detaching a single factor recovers it and leaves the identity."""
    b = BPFactor(0.3 - 0.4j, random_unitary(rng, 3), 2)
    recovered, remainder = detach_max(b.to_mvf(), b.zero)
    assert recovered.rank == 2 and recovered.zero == b.zero
    assert np.allclose(recovered.projection, b.projection, atol=1e-10)
    assert spectral_norm(remainder(0.1) - np.eye(3)) <= 1e-8
    assert spectral_norm(remainder(b.zero + 5e-4) - np.eye(3)) <= 1e-6
    assert spectral_norm(remainder(b.zero) - np.eye(3)) <= 1e-6


def test_detach_max_1(rng):
    """Detaching b1 from b1 b2 leaves a remainder whose determinant vanishes at z2 only."""
    b1 = BPFactor(0.5, random_unitary(rng, 2), 1)
    b2 = BPFactor(-0.3j, random_unitary(rng, 2), 1)
    A = b1.to_mvf() @ b2.to_mvf()
    b, remainder = detach_max(A, b1.zero)
    assert abs(remainder.det(b2.zero)) <= 1e-10
    assert abs(remainder.det(b1.zero)) > 1e-3
    assert spectral_norm(remainder(0.2 + 0.2j) - b2(0.2 + 0.2j)) <= 1e-8


def test_detach_max_2(rng):
    """The scalar-type factor beta I is detached with full rank, leaving a unitary constant."""
    u = random_unitary(rng, 2)
    A = MatrixFunction(lambda z: beta(0.6j, z) * u, 2, contractive=True)
    b, remainder = detach_max(A, 0.6j)
    assert b.rank == 2
    for z in (0.0, 0.3, -0.5 + 0.2j, 0.6j):
        assert spectral_norm(remainder(z) - u) <= 1e-6


def test_detach_max_3(rng):
    """A = b remainder within 1e-8 away from the zero and 1e-6 inside the removable-singularity disk."""
    B = random_bp_product(rng, 3, 3)
    A, z0 = B.to_mvf(), B.zeros[0]
    b, remainder = detach_max(A, z0)
    outside = [z for z in _grid() if abs(z - z0) > 1e-3]
    assert _max_gap(A, b, remainder, outside) <= 1e-8
    inside = z0 + 1e-3 * np.exp(2j * np.pi * np.arange(8) / 8) * np.linspace(0, 0.99, 8)
    assert _max_gap(A, b, remainder, inside) <= 1e-6
    values = np.array([remainder(z) for z in _grid(50)])
    assert np.all(np.linalg.norm(values, ord=2, axis=(-2, -1)) <= 1 + 1e-8)


def test_detach_max_4(rng):
    with pytest.raises(NoZeroException):
        detach_max(MatrixFunction.constant(random_unitary(rng, 2)), 0.3)


def test_detach_max_5():
    with pytest.raises(IllConditionedFrameException):
        detach_max(MatrixFunction.constant(np.diag([1.0, 1e-6])), 0.0)


def test_factor_out_zeros_0(rng):
    """A zero-free function gives an empty product and itself."""
    A = MatrixFunction.constant(random_unitary(rng, 2))
    B, remainder = factor_out_zeros(A, [])
    assert len(B) == 0 and np.allclose(B(0.4), np.eye(2))
    assert remainder is A


def test_factor_out_zeros_1(rng):
    """A finite B.P. product factors into B times a unitary constant."""
    original = random_bp_product(rng, 3, 3, max_modulus=0.8)
    A = original.to_mvf()
    B, remainder = factor_out_zeros(A, original.zeros)
    assert _max_gap(A, B, remainder, _grid()) <= 1e-7
    constant = remainder(0.0)
    assert spectral_norm(constant @ constant.conj().T - np.eye(3)) <= 1e-7
    for z in _grid(20):
        assert spectral_norm(remainder(z) - constant) <= 1e-7


def test_factor_out_zeros_2(rng):
    """Different detachment orders give different factor lists with the same product function."""
    original = random_bp_product(rng, 2, 2, max_modulus=0.8)
    A = original.to_mvf()
    forward, forward_rem = factor_out_zeros(A, original.zeros)
    backward, backward_rem = factor_out_zeros(A, original.zeros[::-1])
    assert np.allclose(backward.zeros, original.zeros[::-1])
    for z in _grid(30):
        assert spectral_norm(forward(z) @ forward_rem(z) - backward(z) @ backward_rem(z)) <= 1e-7


def test_factor_out_zeros_3(rng):
    """A double zero made of two rank-one factors is consumed in two passes."""
    z0 = 0.25 + 0.25j
    A = BPFactor(z0, random_unitary(rng, 2), 1).to_mvf() @ BPFactor(z0, random_unitary(rng, 2), 1).to_mvf()
    B, remainder = factor_out_zeros(A, [z0])
    assert len(B) == 2 and np.all(B.ranks == 1)
    assert _max_gap(A, B, remainder, _grid(50)) <= 1e-7


def test_factor_out_zeros_4():
    """diag(beta^2, 1) is consumed in two rank-one passes."""
    z0 = -0.4
    A = MatrixFunction(lambda z: np.diag([beta(z0, z) ** 2, 1.0]), 2, contractive=True)
    B, remainder = factor_out_zeros(A, [z0, z0])
    assert len(B) == 2
    assert abs(remainder.det(z0)) > 0.5


def test_factor_out_zeros_5():
    """A zero left after the pass budget is reported."""
    z0 = 0.1
    A = MatrixFunction(lambda z: np.diag([beta(z0, z) ** 3, 1.0]), 2, contractive=True)
    with pytest.raises(UnconsumedZerosException):
        BPFactorizer(max_passes=2).factor_out_zeros(A, [z0])


def test_bp_factorizer_0():
    assert BPFactorizer().defect(np.zeros((2, 2))) == 2
    assert BPFactorizer().defect(np.diag([1.0, 1e-12])) == 1
    assert BPFactorizer().defect(np.eye(2)) == 0
    with pytest.raises(AssertionError):
        BPFactorizer(sing_radius=0)
