from MIntPy.MatCore import matrix_norm_clauses
from MIntPy.MatCore import norm_contraction_agreement
from MIntPy.MatCore import random_matrix
from MIntPy.MatCore import random_unitary
import numpy as np


def test_matrix_norm_clauses_0():
    """All thirteen clauses hold on 1000 random samples."""
    rng = np.random.default_rng(1)
    for _ in range(1000):
        n = int(rng.integers(1, 5))
        clauses = matrix_norm_clauses(random_matrix(rng, n), random_matrix(rng, n), random_unitary(rng, n),
                                      np.diag(random_matrix(rng, n)[0]))
        assert len(clauses) == 13
        assert all(holds for holds, _ in clauses.values()), clauses


def test_matrix_norm_clauses_1():
    """Identity inputs give zero residual everywhere."""
    eye = np.eye(3)
    clauses = matrix_norm_clauses(eye, eye, eye, eye)
    assert max(res for _, res in clauses.values()) <= 1e-14


def test_norm_contraction_agreement_0():
    agree, contraction = norm_contraction_agreement(0.5 * np.eye(2))
    assert agree and contraction


def test_norm_contraction_agreement_1():
    agree, contraction = norm_contraction_agreement(np.array([[1.2, 0], [0, 0.1]]))
    assert agree and not contraction
