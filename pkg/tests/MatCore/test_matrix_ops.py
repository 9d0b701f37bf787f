from MIntPy.MatCore import spectral_norm
from MIntPy.MatCore import is_positive
from MIntPy.MatCore import mat_exp
from MIntPy.MatCore import mat_exp_batch
from MIntPy.MatCore import scaled_hermitian_exp
from MIntPy.MatCore import svd
from MIntPy.MatCore import is_contraction
from MIntPy.MatCore import contraction_routes
from MIntPy.MatCore import as_cmat
from MIntPy.MatCore import adjoint
from MIntPy.MatCore import numerical_rank
from MIntPy.MatCore import solve_right
from MIntPy.MatCore import random_matrix
from MIntPy.MatCore import random_unitary
from MIntPy.MatCore import DimensionMismatchException
from MIntPy.MatCore import NonFiniteMatrixException
from MIntPy.MatCore import MatrixExpOverflowException
from MIntPy.MatCore import ContractionRouteException
from MIntPy.MatCore import matrix_ops
import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(0)


def test_spectral_norm_0():
    """Unitary matrices have norm one."""
    assert round(spectral_norm(np.eye(2)), 12) == 1


def test_spectral_norm_1():
    """Diagonal matrices have norm equal to the largest modulus."""
    assert round(spectral_norm(np.diag([3, -2j])), 12) == 3


def test_spectral_norm_2(rng):
    """Matches power iteration on AA*."""
    a = random_matrix(rng, 4)
    gram = a @ adjoint(a)
    x = np.ones(4, dtype=complex)
    for _ in range(2000):
        x = gram @ x
        x /= np.linalg.norm(x)
    assert abs(spectral_norm(a) - np.sqrt(np.real(np.vdot(x, gram @ x)))) <= 1e-10


def test_as_cmat_0():
    """Non-square inputs are rejected."""
    with pytest.raises(DimensionMismatchException):
        as_cmat(np.zeros((2, 3)))


def test_as_cmat_1():
    """Non-finite inputs are rejected."""
    with pytest.raises(NonFiniteMatrixException):
        as_cmat([[np.nan, 0], [0, 1]])


def test_is_positive_0():
    assert is_positive(np.zeros((3, 3)), tol=1e-12)


def test_is_positive_1():
    """Eigenvalues 3 and -1."""
    assert not is_positive([[1, 2], [2, 1]], tol=1e-12)


def test_is_positive_2(rng):
    a = random_matrix(rng, 5)
    assert is_positive(a @ adjoint(a), tol=1e-10)


def test_is_positive_3():
    """Non-Hermitian matrices are not positive."""
    assert not is_positive([[1, 1], [0, 1]])


def test_mat_exp_0():
    a = np.array([[0, 1], [1, 0]])
    expected = np.array([[np.cosh(1), np.sinh(1)], [np.sinh(1), np.cosh(1)]])
    assert np.allclose(mat_exp(a), expected, rtol=1e-12, atol=1e-12)


def test_mat_exp_1():
    assert np.allclose(mat_exp(np.zeros((3, 3))), np.eye(3))


def test_mat_exp_2():
    assert np.allclose(mat_exp(np.diag([0.5, -1.0])), np.diag([np.exp(0.5), np.exp(-1.0)]), rtol=1e-12)


def test_mat_exp_3(rng):
    """exp(A)exp(-A) = I for moderate norms."""
    for _ in range(20):
        a = random_matrix(rng, 3)
        a *= 5 / spectral_norm(a)
        assert spectral_norm(mat_exp(a) @ mat_exp(-a) - np.eye(3)) <= 1e-10


def test_mat_exp_4():
    """Inputs above the norm cap are rejected."""
    with pytest.raises(MatrixExpOverflowException):
        mat_exp(2e3 * np.eye(2))


def test_mat_exp_5():
    """Below the norm cap, exponentials that overflow are rejected instead of returning inf."""
    with pytest.raises(MatrixExpOverflowException):
        mat_exp(np.diag([800.0, 0.0]))
    with pytest.raises(MatrixExpOverflowException):
        mat_exp_batch(np.stack([np.zeros((2, 2)), np.diag([750.0, 0.0])]))
    with pytest.raises(MatrixExpOverflowException):
        scaled_hermitian_exp([800.0], np.eye(2)[None])
    assert np.isfinite(mat_exp(np.diag([700.0, 0.0]))).all()


def test_svd_0(rng):
    a = random_matrix(rng, 3)
    u, s, v = svd(a)
    assert spectral_norm(a - u @ np.diag(s) @ v) <= 1e-10 * spectral_norm(a)
    assert spectral_norm(u @ adjoint(u) - np.eye(3)) <= 1e-10
    assert np.allclose(s, np.sqrt(np.sort(np.linalg.eigvalsh(a @ adjoint(a)))[::-1]), atol=1e-9)


def test_svd_1(rng):
    """Rank-one outer products have exactly one non-negligible singular value."""
    x, y = rng.standard_normal(4), rng.standard_normal(4)
    _, s, _ = svd(np.outer(x, y))
    assert np.sum(s >= 1e-10 * np.linalg.norm(x) * np.linalg.norm(y)) == 1


def test_is_contraction_0(rng):
    assert is_contraction(random_unitary(rng, 3))


def test_is_contraction_1():
    assert not is_contraction(1.5 * np.eye(2))


def test_is_contraction_2(rng):
    a = random_matrix(rng, 4)
    assert is_contraction(a / (spectral_norm(a) + 0.1))


def test_contraction_routes_0(rng):
    """Norm route and positivity route agree on random matrices around the unit sphere."""
    for _ in range(1000):
        a = random_matrix(rng, 3)
        a *= rng.uniform(0.5, 1.5) / spectral_norm(a)
        norm_route, positivity_route = contraction_routes(a)
        assert norm_route == positivity_route


def test_is_contraction_3(rng):
    """Near the unit sphere both routes are evaluated and the answer follows the tolerance band."""
    u, v = random_unitary(rng, 3), random_unitary(rng, 3)
    for top, expected in ((1 - 1e-9, True), (1.0, True), (1 + 1e-11, True), (1 + 1e-9, False), (1 + 1e-6, False)):
        a = u @ np.diag([top, 0.5, 0.1]) @ v
        assert is_contraction(a) == expected
        assert contraction_routes(a) == (expected, expected)


def test_is_contraction_4(monkeypatch):
    """Routes that disagree beyond the tolerance are reported."""
    monkeypatch.setattr(matrix_ops, 'spectral_norm', lambda a: 1.5)
    with pytest.raises(ContractionRouteException):
        is_contraction(0.5 * np.eye(2))


def test_numerical_rank_0():
    assert numerical_rank(np.diag([1, 1e-12, 0])) == 1
    assert numerical_rank(np.zeros((2, 2))) == 0


def test_solve_right_0(rng):
    x, y = random_matrix(rng, 3), random_matrix(rng, 3) + 3 * np.eye(3)
    assert np.allclose(solve_right(x, y) @ y, x)
