import numpy as np

from MIntPy.MatCore import mat_exp
from MIntPy.MatCore import matrix_norm_clauses
from MIntPy.MatCore import norm_contraction_agreement
from MIntPy.MatCore import random_matrix
from MIntPy.MatCore import random_unitary
from MIntPy.MatCore import spectral_norm
from .suite_abc import SuiteABC


def _dimension(rng):
    return int(rng.integers(2, 5))


class MatrixNormSuite(SuiteABC):
    name = 'matrix_norm'
    proposition = 'The spectral norm satisfies its thirteen classical properties.'
    reference = 'Lemma matrixnorm'
    tol = 1e-10

    def __call__(self, rng):
        n = _dimension(rng)
        a, b = random_matrix(rng, n), random_matrix(rng, n, scale=rng.uniform(0.1, 10))
        d = np.diag(rng.standard_normal(n) + 1j * rng.standard_normal(n))
        clauses = matrix_norm_clauses(a, b, random_unitary(rng, n), d, rtol=self.tol)
        return max(residual for _, residual in clauses.values())


class ContractionRoutesSuite(SuiteABC):
    """Matrices are scaled to a norm drawn in [0.5, 1.5], so that both contractions and non-contractions occur."""
    name = 'contraction_routes'
    proposition = '||A|| <= 1 holds exactly when I - AA* is positive semidefinite.'
    reference = 'Lemma normcontr'
    tol = 0.0

    def __call__(self, rng):
        a = random_matrix(rng, _dimension(rng))
        a *= rng.uniform(0.5, 1.5) / spectral_norm(a)
        agree, _ = norm_contraction_agreement(a)
        return 0.0 if agree else 1.0


class ExpInverseSuite(SuiteABC):
    name = 'exp_inverse'
    proposition = 'exp(A) is invertible with inverse exp(-A).'
    reference = 'Prop mintdet'
    tol = 1e-10

    def __call__(self, rng):
        a = random_matrix(rng, _dimension(rng))
        a *= rng.uniform(0.1, 2.0) / spectral_norm(a)
        n = a.shape[0]
        return spectral_norm(mat_exp(a) @ mat_exp(-a) - np.eye(n))
