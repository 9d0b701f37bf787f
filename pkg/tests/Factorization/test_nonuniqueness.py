from MIntPy.Factorization import eval_pp_inner
from MIntPy.Factorization import nonuniqueness_demo
from MIntPy.Factorization import nonuniqueness_pair
import numpy as np


def test_nonuniqueness_demo_0():
    """Different integrators define the same function on the 50-point grid."""
    report = nonuniqueness_demo()
    assert report['n_points'] == 50
    assert report['function_gap'] <= 1e-8
    assert report['closed_form_gap'] <= 1e-8
    assert report['passed']


def test_nonuniqueness_demo_1():
    """The integrators are a quarter apart at t = 1/2 and both trace normalized."""
    report = nonuniqueness_demo()
    assert np.isclose(report['integrator_gap'], 0.25, atol=1e-12)
    assert report['trace_residual'] <= 1e-12


def test_nonuniqueness_pair_0():
    """Both functions equal exp(-1/2) I at the origin."""
    first, second = nonuniqueness_pair()
    assert np.allclose(eval_pp_inner(first, 0), np.exp(-0.5) * np.eye(2), atol=1e-12)
    assert np.allclose(eval_pp_inner(second, 0), np.exp(-0.5) * np.eye(2), atol=1e-12)
    E1, E2 = first.blocks[0][2], second.blocks[0][2]
    assert np.allclose(E1.value(0.5), np.diag([1 / 8, 3 / 8]))
    assert np.allclose(E2.value(0.5), np.diag([3 / 8, 1 / 8]))
