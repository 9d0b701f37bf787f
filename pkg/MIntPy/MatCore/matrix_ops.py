import numpy as np
import scipy.linalg

HERMITIAN_RTOL = 1e-12
HERMITIAN_FLOOR = 1e-14
EXP_NORM_CAP = 1e3


def as_cmat(a):
    """Converts the given array-like into a square complex matrix (n x n, n >= 1) with finite entries.

    Args:
        a: An array-like object, or a scalar (treated as a 1x1 matrix).

    Returns:
        A complex numpy array of shape (n, n).
    """
    mat = np.atleast_2d(np.asarray(a, dtype=complex))
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] == 0:
        raise DimensionMismatchException(f'Expected a non-empty square matrix, found shape {mat.shape}.')
    if not np.all(np.isfinite(mat)):
        raise NonFiniteMatrixException('Matrix entries must be finite (no NaN/Inf).')
    return mat


def adjoint(a):
    """Conjugate transpose, also applied to the last two axes of a stack of matrices."""
    return np.conj(np.swapaxes(a, -1, -2))


def spectral_norm(a):
    """Computes the largest singular value of a, i.e. the operator norm induced by the Euclidean vector norm."""
    return float(np.linalg.norm(as_cmat(a), 2))


def stack_norms(stack):
    """Spectral norms of every matrix in a stack of shape (k, n, n)."""
    stack = np.asarray(stack, dtype=complex)
    if stack.shape[0] == 0:
        return np.zeros(0)
    return np.linalg.norm(stack, ord=2, axis=(-2, -1))


def hermitian_tol(a):
    """Relative Hermitian tolerance with an absolute floor."""
    return max(HERMITIAN_RTOL * spectral_norm(a), HERMITIAN_FLOOR)


def is_hermitian(a, tol=None):
    a = as_cmat(a)
    if tol is None: tol = hermitian_tol(a)
    return spectral_norm(a - adjoint(a)) <= tol


def hermitian_part(a):
    a = np.asarray(a, dtype=complex)
    return (a + adjoint(a)) / 2


def imaginary_part(a):
    """Matrix imaginary part (A - A*) / 2i, which is Hermitian."""
    a = np.asarray(a, dtype=complex)
    return (a - adjoint(a)) / 2j


def is_positive(a, tol=1e-12):
    """Checks if a is Hermitian and positive semidefinite within tol.

    Args:
        a: The matrix to test.
        tol: Nonnegative tolerance used both for the Hermitian residual and for the least eigenvalue. Default: 1e-12.

    Returns:
        True iff ||a - a*|| <= tol and the least eigenvalue of the Hermitian part is >= -tol.
    """
    assert tol >= 0, f'The tolerance ({tol}) should be >= 0.'
    a = as_cmat(a)
    if spectral_norm(a - adjoint(a)) > max(tol, HERMITIAN_FLOOR):
        return False
    return bool(np.min(scipy.linalg.eigvalsh(hermitian_part(a))) >= -tol)


def min_eigenvalue(a):
    """Least eigenvalue of the Hermitian part of a."""
    return float(np.min(scipy.linalg.eigvalsh(hermitian_part(as_cmat(a)))))


def _finite_exp(result):
    if not np.all(np.isfinite(result)):
        raise MatrixExpOverflowException('The matrix exponential overflows the floating point range.')
    return result


def mat_exp(a, norm_cap=EXP_NORM_CAP):
    """Matrix exponential via scaling-and-squaring with a Pade core.

    Args:
        a: The matrix to exponentiate.
        norm_cap: Inputs with spectral norm above this value are rejected. Default: 1e3. Below the cap, an exponential
            that overflows (real parts of eigenvalues above about 709) is rejected as well.

    Returns:
        exp(a) as a complex matrix.
    """
    a = as_cmat(a)
    norm = spectral_norm(a)
    if norm > norm_cap:
        raise MatrixExpOverflowException(f'Matrix norm {norm} exceeds the exponential norm cap {norm_cap}.')
    return _finite_exp(scipy.linalg.expm(a))


def mat_exp_batch(stack, norm_cap=EXP_NORM_CAP):
    """Matrix exponential of each matrix in a stack of shape (k, n, n)."""
    stack = np.asarray(stack, dtype=complex)
    if stack.shape[0] == 0:
        return stack
    frobenius = np.sqrt(np.sum(np.abs(stack) ** 2, axis=(-2, -1)))
    if np.max(frobenius) > norm_cap:
        worst = float(np.max(stack_norms(stack[frobenius > norm_cap])))
        if worst > norm_cap:
            raise MatrixExpOverflowException(f'Matrix norm {worst} exceeds the exponential norm cap {norm_cap}.')
    return _finite_exp(scipy.linalg.expm(stack))


def scaled_hermitian_exp(coeffs, stack, norm_cap=EXP_NORM_CAP):
    """Computes exp(c_i H_i) for complex scalars c_i and Hermitian matrices H_i through batched eigendecompositions.

    Args:
        coeffs: Array of k complex scalars.
        stack: Array of shape (k, n, n) holding Hermitian matrices (symmetrized before use).
        norm_cap: Products c_i H_i with spectral norm above this value are rejected. Default: 1e3.

    Returns:
        An array of shape (k, n, n).
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    stack = np.asarray(stack, dtype=complex)
    if stack.shape[0] == 0:
        return stack
    w, v = np.linalg.eigh(hermitian_part(stack))
    worst = float(np.max(np.abs(coeffs) * np.max(np.abs(w), axis=-1)))
    if worst > norm_cap:
        raise MatrixExpOverflowException(f'Matrix norm {worst} exceeds the exponential norm cap {norm_cap}.')
    return _finite_exp((v * np.exp(coeffs[:, None] * w)[:, None, :]) @ adjoint(v))


def svd(a):
    """Singular value decomposition a = U diag(s) V with U, V unitary and s nonincreasing.

    Returns:
        A tuple (U, s, V).
    """
    a = as_cmat(a)
    try:
        u, s, vh = scipy.linalg.svd(a)
    except np.linalg.LinAlgError as e:
        raise SVDConvergenceException(f'SVD did not converge: {e}')
    return u, s, vh


def is_unitary(a, tol=1e-10):
    a = as_cmat(a)
    return spectral_norm(a @ adjoint(a) - np.eye(a.shape[0])) <= tol


def _contraction_margins(a):
    """The spectral norm of a and the least eigenvalue of I - aa*, which equals 1 - ||a||^2 in exact arithmetic."""
    a = as_cmat(a)
    defect = hermitian_part(np.eye(a.shape[0]) - a @ adjoint(a))
    return spectral_norm(a), float(np.min(scipy.linalg.eigvalsh(defect)))


def contraction_routes(a, tol=1e-10):
    """Evaluates both contraction criteria: the norm route ||a|| <= 1 + tol and the positivity route I - aa* >= 0.

    The positivity tolerance is (1 + tol)^2 - 1, so that both routes describe the same set of matrices.

    Returns:
        A tuple (norm_route, positivity_route) of booleans.
    """
    norm, least = _contraction_margins(a)
    return bool(norm <= 1 + tol), bool(least >= -((1 + tol) ** 2 - 1))


def is_contraction(a, tol=1e-10):
    """Checks if ||a|| <= 1 + tol, which is equivalent to I - aa* being positive.

    Both routes are evaluated. When they give different answers and the least eigenvalue of I - aa* is more than tol
    away from 1 - ||a||^2, the evaluation is not trusted and ContractionRouteException is raised. Disagreements within
    tol (matrices on the boundary of the tolerance band) are decided by the norm route.
    """
    norm, least = _contraction_margins(a)
    norm_route, positivity_route = norm <= 1 + tol, least >= -((1 + tol) ** 2 - 1)
    if norm_route != positivity_route and abs(least - (1 - norm ** 2)) > tol * max(1.0, norm ** 2):
        raise ContractionRouteException(f'The norm route (||a|| = {norm:.15g}) and the positivity route '
                                        f'(least eigenvalue of I - aa* = {least:.3e}) disagree.')
    return bool(norm_route)


def numerical_rank(a, rtol=1e-8):
    """Number of singular values above rtol times the largest singular value (0 for the zero matrix)."""
    s = scipy.linalg.svdvals(as_cmat(a))
    if s[0] == 0:
        return 0
    return int(np.sum(s > rtol * s[0]))


def solve_right(x, y):
    """Computes x y^{-1} for matrices or stacks of matrices."""
    return np.swapaxes(np.linalg.solve(np.swapaxes(y, -1, -2), np.swapaxes(x, -1, -2)), -1, -2)


class DimensionMismatchException(Exception):
    pass


class NonFiniteMatrixException(Exception):
    pass


class MatrixExpOverflowException(Exception):
    pass


class SVDConvergenceException(Exception):
    pass


class ContractionRouteException(Exception):
    pass
