import numpy as np

from MIntPy.MatCore import MatrixFunction
from MIntPy.MatCore import as_cmat
from MIntPy.MatCore import hermitian_part
from MIntPy.MatCore import is_hermitian
from MIntPy.MatCore import min_eigenvalue
from MIntPy.MatCore import solve_right

SINGULAR_COND = 1e12


def herglotz_kernel_matrix(angles, zs):
    """(e^{it} + z) / (e^{it} - z) for every pair (z, t), shape (len(zs), len(angles))."""
    e = np.exp(1j * np.asarray(angles, dtype=float))[None, :]
    zs = np.asarray(zs, dtype=complex).ravel()[:, None]
    return (e + zs) / (e - zs)


def choose_rotation(a0):
    """Among the n + 1 roots of unity, the w maximizing |det(wI - A(0))|; since A(0) has at most n eigenvalues, the
    chosen determinant never vanishes."""
    a0 = as_cmat(a0)
    n = a0.shape[0]
    candidates = np.exp(2j * np.pi * np.arange(n + 1) / (n + 1))
    dets = [abs(np.linalg.det(w * np.eye(n) - a0)) for w in candidates]
    return complex(candidates[int(np.argmax(dets))])


def _cayley_stack(values, w):
    n = values.shape[-1]
    eye = np.eye(n, dtype=complex)
    left = w * eye - values
    conds = np.linalg.cond(left)
    if np.any(~np.isfinite(conds)) or np.any(conds > SINGULAR_COND):
        raise SingularCayleyException(f'wI - A(z) is singular (condition number {np.max(conds):.3e}) for w = {w}.')
    return 1j * np.linalg.solve(left, w * eye + values)


def cayley_forward(A, z, w):
    """T(z) = i (wI - A(z))^{-1} (wI + A(z)), whose imaginary part is >= 0 when A(z) is a contraction.

    Args:
        A: A MatrixFunction, or a matrix (then z is ignored).
        z: A point of the disk.
        w: A unimodular rotation with det(wI - A(z)) != 0.
    """
    value = A(z) if isinstance(A, MatrixFunction) else as_cmat(A)
    return _cayley_stack(value[None], complex(w))[0]


def cayley_inverse(T, w):
    """A = w (T - iI)(T + iI)^{-1}, for a matrix or a stack of matrices T."""
    T = np.asarray(T, dtype=complex)
    eye = np.eye(T.shape[-1], dtype=complex)
    return w * solve_right(T - 1j * eye, T + 1j * eye)


def cayley_mvf(A, w):
    """The Cayley transform z -> T(z) of a MatrixFunction A as a MatrixFunction."""
    w = complex(w)
    return MatrixFunction(lambda z: cayley_forward(A, z, w), A.dim,
                          batch_fn=lambda zs: _cayley_stack(A.evaluate_many(zs), w), name=f'T[{A.name}]')


class CayleyData:
    """Data of the rational Herglotz function T(z) = T0 + i sum_nu (e^{it_nu} + z)/(e^{it_nu} - z) S_nu, the
    Riemann-Stieltjes sum of a Herglotz integral, and of its inverse Cayley transform w (T - iI)(T + iI)^{-1}.

    Args:
        rotation: A unimodular complex w.
        offset: The Hermitian constant T0.
        angles: Tags t_nu in [0, 2pi).
        masses: Positive semidefinite Hermitian increments S_nu, shape (m, n, n).
    """
    def __init__(self, rotation, offset, angles, masses):
        self.rotation = complex(rotation)
        self.offset = as_cmat(offset)
        self.angles = np.asarray(angles, dtype=float).ravel()
        self.masses = np.asarray(masses, dtype=complex).reshape(len(self.angles), *self.offset.shape)
        self.dim = self.offset.shape[0]
        assert abs(abs(self.rotation) - 1) <= 1e-12, f'The rotation should be unimodular, found |w| = {abs(rotation)}.'
        assert is_hermitian(self.offset, tol=1e-10), 'The offset T0 should be Hermitian.'
        assert np.all((self.angles >= 0) & (self.angles < 2 * np.pi)), 'The angles should lie in [0, 2pi).'
        for k, mass in enumerate(self.masses):
            assert is_hermitian(mass, tol=1e-10 * max(1.0, np.max(np.abs(mass)))) and \
                min_eigenvalue(hermitian_part(mass)) >= -1e-10 * max(1.0, np.max(np.abs(mass))), \
                f'The mass {k} should be positive semidefinite.'

    def herglotz_many(self, zs):
        """T(z) on a 1-d array of points, shape (k, n, n)."""
        kernel = herglotz_kernel_matrix(self.angles, zs)
        return self.offset + 1j * np.tensordot(kernel, self.masses, axes=(1, 0))

    def herglotz(self, z):
        return self.herglotz_many([z])[0]

    def contraction_many(self, zs):
        return cayley_inverse(self.herglotz_many(zs), self.rotation)

    def contraction(self, z):
        return self.contraction_many([z])[0]

    @property
    def total_mass(self):
        return np.sum(self.masses, axis=0)

    def __repr__(self):
        return f'CayleyData(dim={self.dim}, rotation={self.rotation:.6g}, n_masses={len(self.angles)})'


class SingularCayleyException(Exception):
    pass
