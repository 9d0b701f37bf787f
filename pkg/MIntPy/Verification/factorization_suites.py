import numpy as np

from MIntPy.Blaschke import random_bp_product
from MIntPy.Factorization import OuterSpec
from MIntPy.Factorization import classify_by_det
from MIntPy.Factorization import nonuniqueness_demo
from MIntPy.Factorization.nonuniqueness import FUNCTION_GAP_TOL
from MIntPy.Factorization.nonuniqueness import INTEGRATOR_GAP_MIN
from MIntPy.MatCore import random_unitary
from .suite_abc import SuiteABC

KINDS = ('inner-like', 'outer-like', 'mixed')


def smooth_outer_spec(rng, a, b):
    """Outer function of the diagonal density diag(a + 0.1 cos phi, b + 0.1 sin phi) with a random unitary tail."""
    def density(ts):
        ts = np.asarray(ts, dtype=float)
        out = np.zeros((len(ts), 2, 2))
        out[:, 0, 0] = a + 0.1 * np.cos(ts)
        out[:, 1, 1] = b + 0.1 * np.sin(ts)
        return out
    return OuterSpec(density, tail_unitary=random_unitary(rng, 2), vectorized=True)


class NonuniquenessSuite(SuiteABC):
    """Residual: the distance between the two functions, or inf when their integrators are not far apart."""
    name = 'nonuniqueness'
    proposition = 'Distinct integrators of a pp-inner representation may define the same function.'
    reference = 'Thm fact-unique'
    tol = FUNCTION_GAP_TOL
    randomized = False

    def __call__(self, rng):
        report = nonuniqueness_demo()
        return report['function_gap'] if report['integrator_gap'] >= INTEGRATOR_GAP_MIN else np.inf


class ClassificationSuite(SuiteABC):
    """Draws a B.P. product (inner), a smooth outer function or their product (mixed) and checks the label."""
    name = 'classification'
    proposition = 'A is inner (outer) exactly when det A is a scalar inner (outer) function.'
    reference = 'Thm detinnerouter'
    tol = 0.0

    def __call__(self, rng):
        kind = KINDS[int(rng.integers(len(KINDS)))]
        a, b = rng.uniform(0.15, 0.5, size=2)
        if kind == 'inner-like':
            A = random_bp_product(rng, 2, int(rng.integers(1, 4)), max_modulus=0.7).to_mvf()
        elif kind == 'outer-like':
            A = smooth_outer_spec(rng, a, b).to_mvf()
        else:
            B = random_bp_product(rng, 2, int(rng.integers(1, 4)), max_modulus=0.7)
            A = B.to_mvf() @ smooth_outer_spec(rng, a, b).to_mvf()
        return 0.0 if classify_by_det(A) == kind else 1.0
