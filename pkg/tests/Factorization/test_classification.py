from MIntPy.Factorization import LABELS
from MIntPy.Factorization import OuterSpec
from MIntPy.Factorization import PpInnerSpec
from MIntPy.Factorization import classify_by_det
from MIntPy.Blaschke import random_bp_product
from MIntPy.MatCore import MatrixFunction
from MIntPy.MatCore import random_unitary
import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(47)


def _outer_spec(rng, a, b):
    """Smooth diagonal density diag(a + 0.1 cos phi, b + 0.1 sin phi) with a random unitary tail."""
    def density(ts):
        ts = np.asarray(ts, dtype=float)
        out = np.zeros((len(ts), 2, 2))
        out[:, 0, 0] = a + 0.1 * np.cos(ts)
        out[:, 1, 1] = b + 0.1 * np.sin(ts)
        return out
    return OuterSpec(density, tail_unitary=random_unitary(rng, 2), vectorized=True)


def test_classify_by_det_0(rng):
    """Finite B.P. products are inner-like."""
    for n_factors in (1, 2, 3):
        B = random_bp_product(rng, 2, n_factors, max_modulus=0.7)
        assert classify_by_det(B.to_mvf()) == 'inner-like'


def test_classify_by_det_1(rng):
    """Outer functions with smooth densities are outer-like."""
    for a, b in ((0.2, 0.3), (0.5, 0.15), (0.3, 0.3)):
        assert classify_by_det(_outer_spec(rng, a, b).to_mvf()) == 'outer-like'


def test_classify_by_det_2(rng):
    """Products of a B.P. product and an outer function are mixed."""
    for n_factors, (a, b) in zip((1, 2, 3), ((0.2, 0.3), (0.5, 0.15), (0.3, 0.3))):
        B = random_bp_product(rng, 2, n_factors, max_modulus=0.7)
        label, details = classify_by_det(B.to_mvf() @ _outer_spec(rng, a, b).to_mvf(), return_details=True)
        assert label == 'mixed'
        assert details['mean_value_gap'] > 1e-3


def test_classify_by_det_3():
    """A determinant vanishing at the origin cannot be classified."""
    A = MatrixFunction(lambda z: z * np.eye(2), 2)
    assert classify_by_det(A) == 'undetermined'


def test_classify_by_det_4(rng):
    """pp-inner functions are inner-like and their ring medians decrease."""
    spec = PpInnerSpec([(0.5, 1.0, None), (0.2, 4.0, None)], tail_unitary=random_unitary(rng, 2))
    label, details = classify_by_det(spec.to_mvf(), return_details=True)
    assert label == 'inner-like' and label in LABELS
    assert details['medians'][0] > details['medians'][1] > details['medians'][2]


def test_classify_by_det_5(rng):
    """Functions passing both tests are split by their boundary modulus defect."""
    A = MatrixFunction.constant(random_unitary(rng, 2))
    label, details = classify_by_det(A, return_details=True)
    assert details['inner_like'] and details['outer_like']
    assert label == 'inner-like'
    label, details = classify_by_det(_outer_spec(rng, 0.2, 0.3).to_mvf(), return_details=True)
    assert details['outer_like'] and not details['inner_like']
    assert label == 'outer-like'
    near_constant = OuterSpec(lambda ts: np.zeros((len(ts), 2, 2)) + 4e-4 * np.eye(2), vectorized=True)
    label, details = classify_by_det(near_constant.to_mvf(), return_details=True)
    assert details['outer_like'] and 1e-3 < details['medians'][-1] <= 1e-2
    assert label == 'outer-like'
