import numpy as np
import scipy.linalg

from .matrix_ops import adjoint
from .matrix_ops import as_cmat
from .matrix_ops import contraction_routes
from .matrix_ops import spectral_norm


def _excess(lhs, rhs, scale):
    """Relative amount by which lhs exceeds rhs (0 when lhs <= rhs)."""
    return max(0.0, lhs - rhs) / max(scale, 1.0)


def _gap(lhs, rhs, scale):
    return abs(lhs - rhs) / max(scale, 1.0)


def matrix_norm_clauses(a, b, u, d, rtol=1e-10):
    """Evaluates the thirteen classical properties of the spectral norm on the given sample matrices.

    Args:
        a: A square complex matrix.
        b: A square complex matrix with the same dimension as a.
        u: A unitary matrix with the same dimension as a.
        d: A diagonal matrix with the same dimension as a.
        rtol: Relative tolerance used to decide if each clause holds. Default: 1e-10.

    Returns:
        A dict mapping each clause name to a tuple (holds, residual), where residual is the relative violation
        (0 means the clause holds exactly).
    """
    a, b, u, d = as_cmat(a), as_cmat(b), as_cmat(u), as_cmat(d)
    n = a.shape[0]
    norm_a = spectral_norm(a)
    residuals = {}

    residuals['submultiplicative'] = _excess(spectral_norm(a @ b), norm_a * spectral_norm(b),
                                             norm_a * spectral_norm(b))
    residuals['adjoint_invariant'] = _gap(norm_a, spectral_norm(adjoint(a)), norm_a)
    residuals['unitary_invariant'] = max(_gap(spectral_norm(a @ u), norm_a, norm_a),
                                         _gap(spectral_norm(u @ a), norm_a, norm_a))

    diag_entries = np.diag(d)
    residuals['diagonal_max_modulus'] = _gap(spectral_norm(np.diag(diag_entries)), np.max(np.abs(diag_entries)),
                                             np.max(np.abs(diag_entries)))

    h = a + adjoint(a)
    eig_h = scipy.linalg.eigvalsh(h)
    residuals['hermitian_max_eigenvalue'] = _gap(spectral_norm(h), np.max(np.abs(eig_h)), spectral_norm(h))

    gram = a @ adjoint(a)
    residuals['gram_square_root'] = _gap(norm_a, np.sqrt(spectral_norm(gram)), norm_a)
    residuals['unitary_norm_one'] = _gap(spectral_norm(u), 1.0, 1.0)
    residuals['positive_trace_bound'] = _excess(spectral_norm(gram), float(np.real(np.trace(gram))),
                                                spectral_norm(gram))

    left, s, right_h = scipy.linalg.svd(a)
    x, y = left[:, 0], adjoint(right_h)[:, 0]
    quadratic_sup = np.sqrt(abs(np.vdot(x, gram @ x)))
    residuals['quadratic_form_sup'] = _gap(norm_a, quadratic_sup, norm_a)
    residuals['bilinear_form_sup'] = _gap(norm_a, abs(np.vdot(x, a @ y)), norm_a)

    residuals['row_norm_lower_bound'] = _excess(float(np.max(np.linalg.norm(a, axis=1))), norm_a, norm_a)
    residuals['entry_lower_bound'] = _excess(float(np.max(np.abs(a))), norm_a, norm_a)

    det_a = abs(np.linalg.det(a))
    if det_a > 1e-12 * max(norm_a, 1.0) ** n:
        inv_bound = norm_a ** (n - 1) / det_a
        residuals['inverse_bound'] = _excess(spectral_norm(np.linalg.inv(a)), inv_bound, inv_bound)
    else:
        residuals['inverse_bound'] = 0.0

    return {name: (bool(res <= rtol), float(res)) for name, res in residuals.items()}


def norm_contraction_agreement(a, tol=1e-10):
    """Checks that ||a|| <= 1 and I - aa* >= 0 describe the same matrices on the sample a.

    Returns:
        A tuple (agree, is_contraction).
    """
    norm_route, positivity_route = contraction_routes(a, tol=tol)
    return norm_route == positivity_route, norm_route


def random_matrix(rng, n, scale=1.0):
    """Complex Gaussian n x n matrix drawn from the given numpy Generator."""
    return scale * (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)


def random_unitary(rng, n):
    """Haar-distributed unitary matrix via the QR decomposition of a complex Gaussian matrix."""
    q, r = np.linalg.qr(random_matrix(rng, n))
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases[None, :]


def random_positive(rng, n, scale=1.0):
    g = random_matrix(rng, n)
    return scale * (g @ adjoint(g)) / n
