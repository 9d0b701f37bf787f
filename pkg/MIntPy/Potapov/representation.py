from joblib import dump
from joblib import load
import numpy as np

from MIntPy.MatCore import MatrixFunction
from MIntPy.MatCore import as_cmat
from MIntPy.MatCore import is_unitary
from MIntPy.MatCore import min_eigenvalue
from MIntPy.MatCore import scaled_hermitian_exp
from MIntPy.MatCore import spectral_norm
from MIntPy.MatCore import stack_norms
from MIntPy.ProdInt import HerglotzKernel
from MIntPy.ProdInt import LinearIntegrator
from MIntPy.ProdInt import StepFunction
from MIntPy.ProdInt import herglotz_kernel
from MIntPy.ProdInt import prod_integral
from .rational_approximant import polar_grid

TRACE_TOL = 1e-12


class PotapovRepr:
    """Multiplicative representation A(z) = int_0^L exp(h_z(theta(t)) dE(t)) V of a contractive function, with E
    nondecreasing and normalized by tr E(t) = t.

    The representation is stored through its finitely many pieces: on [t_{j-1}, t_j] the increments of E are
    multiples of the positive matrix H_j with tr H_j = t_j - t_{j-1}, and theta takes the value theta_j.

    Args:
        breakpoints: Reals 0 = t_0 < t_1 < ... < t_m.
        jump_matrices: Positive semidefinite Hermitian matrices H_1, ..., H_m, shape (m, n, n).
        angles: Nondecreasing angles theta_1 <= ... <= theta_m in [0, 2pi).
        tail_unitary: Optional unitary matrix V applied on the right. Default: the identity.
        L: Optional length of the representation interval, >= t_m. Default: t_m.
        dim: Optional matrix dimension, required only when m = 0 and there is no tail.
    """
    def __init__(self, breakpoints, jump_matrices, angles, tail_unitary=None, L=None, dim=None):
        self.breakpoints = np.asarray(breakpoints, dtype=float).ravel()
        self.angles = np.asarray(angles, dtype=float).ravel()
        m = len(self.angles)
        if tail_unitary is None:
            jumps = np.asarray(jump_matrices, dtype=complex)
            if dim is None:
                if m == 0:
                    raise InvalidRepresentationException('The dimension of an empty representation is unknown.')
                dim = jumps.shape[-1]
            tail_unitary = np.eye(dim, dtype=complex)
        self.tail_unitary = as_cmat(tail_unitary)
        self.dim = self.tail_unitary.shape[0]
        self.jump_matrices = np.asarray(jump_matrices, dtype=complex).reshape(m, self.dim, self.dim)
        self.L = float(self.breakpoints[-1]) if L is None else float(L)
        self._validate()

    def _validate(self):
        m = len(self.angles)
        if len(self.breakpoints) != m + 1 or self.breakpoints[0] != 0:
            raise InvalidRepresentationException(f'Expected {m + 1} breakpoints starting at 0, found '
                                                 f'{self.breakpoints.tolist()}.')
        if np.any(np.diff(self.breakpoints) <= 0):
            raise InvalidRepresentationException('The breakpoints should be strictly increasing.')
        if self.L < self.breakpoints[-1]:
            raise InvalidRepresentationException(f'L ({self.L}) is smaller than the last breakpoint.')
        if np.any(self.angles < 0) or np.any(self.angles >= 2 * np.pi) or np.any(np.diff(self.angles) < 0):
            raise InvalidRepresentationException('The angles should be nondecreasing in [0, 2pi).')
        if not is_unitary(self.tail_unitary, tol=1e-9):
            raise InvalidRepresentationException('The tail of a representation should be unitary.')
        for j, h in enumerate(self.jump_matrices):
            if spectral_norm(h - h.conj().T) > 1e-12 * max(1.0, spectral_norm(h)) or min_eigenvalue(h) < -1e-12:
                raise InvalidRepresentationException(f'The matrix H_{j + 1} is not positive semidefinite.')
        residual = self.trace_residual()
        if residual > TRACE_TOL * max(1.0, self.L):
            raise InvalidRepresentationException(f'tr E(t_j) differs from t_j by {residual:.3e}.')

    def __len__(self):
        return len(self.angles)

    def trace_residual(self):
        """Largest |tr E(t_j) - t_j| over the breakpoints."""
        if len(self) == 0:
            return 0.0
        traces = np.concatenate([[0.0], np.cumsum(np.real(np.trace(self.jump_matrices, axis1=-2, axis2=-1)))])
        return float(np.max(np.abs(traces - self.breakpoints)))

    def integrator(self):
        """The piecewise-linear integrator E with E(t_j) = H_1 + ... + H_j, constant on [t_m, L]."""
        nodes, values = self.breakpoints, np.concatenate([np.zeros((1, self.dim, self.dim)),
                                                          np.cumsum(self.jump_matrices, axis=0)])
        if self.L > nodes[-1]:
            nodes, values = np.append(nodes, self.L), np.concatenate([values, values[-1:]])
        return LinearIntegrator(nodes, values, increasing=True, hermitian=True, name='E')

    def theta(self):
        """The step function theta equal to theta_j on [t_{j-1}, t_j)."""
        points, values = self.breakpoints[1:-1], self.angles
        keep = np.concatenate([[True], np.diff(values) > 0])
        return StepFunction(points[keep[1:]], values[keep])

    def kernel(self, z):
        return HerglotzKernel(z, theta=self.theta(), name=f'h_{complex(z):.4g}')

    def factors(self, z):
        """The pieces exp(h_z(theta_j) H_j), shape (m, n, n)."""
        return scaled_hermitian_exp(herglotz_kernel(complex(z), self.angles), self.jump_matrices)

    def __call__(self, z):
        return repr_eval(self, z)

    def det(self, z):
        """exp(int_0^L h_z(theta(t)) dt) det V."""
        lengths = np.diff(self.breakpoints)
        return complex(np.exp(np.sum(herglotz_kernel(complex(z), self.angles) * lengths)) *
                       np.linalg.det(self.tail_unitary))

    def to_mvf(self):
        return MatrixFunction(self, self.dim, contractive=True, det_fn=self.det, name='PotapovRepr')

    def save(self, save_path):
        """Exports the representation with joblib."""
        dump(self, save_path)

    @staticmethod
    def load(load_path):
        return load(load_path)

    def __repr__(self):
        return f'PotapovRepr(dim={self.dim}, L={self.L:.6g}, n_pieces={len(self)})'


def bp_to_repr(B):
    """Builds the representation of the modified product of a finite B.P. product B = b_1 ... b_m V.

    Each factor I - P_j + beta_{z_j} P_j is replaced by exp(h_z(theta_j) H_j) with theta_j = arg z_j and
    H_j = (1 - |z_j|) P_j; the breakpoints are the partial sums of tr H_j. The zeros must be nonzero and listed in
    order of nondecreasing argument.

    Args:
        B: A BPProduct.

    Returns:
        A PotapovRepr with L = sum (1 - |z_j|) r_j.
    """
    zeros = B.zeros
    if np.any(zeros == 0):
        raise InvalidRepresentationException('A factor with zero at the origin has no angle.')
    angles = np.mod(np.angle(zeros), 2 * np.pi)
    if np.any(np.diff(angles) < 0):
        raise InvalidRepresentationException(f'The zeros should be listed by nondecreasing argument, found angles '
                                             f'{np.around(angles, 6).tolist()}.')
    jumps = np.array([(1 - abs(b.zero)) * b.projection for b in B.factors], dtype=complex).reshape(-1, B.dim, B.dim)
    lengths = (1 - np.abs(zeros)) * B.ranks
    breakpoints = np.concatenate([[0.0], np.cumsum(lengths)])
    return PotapovRepr(breakpoints, jumps, angles, tail_unitary=B.tail_unitary)


def repr_eval(R, z, tol=1e-10, test_mode=False, **kwds):
    """Evaluates a representation at z as the finite product of its pieces times the tail.

    In test mode the multiplicative integral int_0^L exp(h_z(theta) dE) is also computed, and a disagreement above
    tol plus the integral certificate raises an InvalidRepresentationException.
    """
    z = complex(z)
    assert abs(z) < 1, f'Representations are evaluated inside the disk, found |z| = {abs(z)}.'
    value = np.eye(R.dim, dtype=complex)
    for factor in R.factors(z):
        value = value @ factor
    value = value @ R.tail_unitary
    if test_mode and len(R) > 0:
        result = prod_integral(R.kernel(z), R.integrator(), tol=tol, **kwds)
        gap = spectral_norm(result.value @ R.tail_unitary - value)
        if gap > tol + result.error_certificate:
            raise InvalidRepresentationException(f'The product of pieces and the multiplicative integral differ by '
                                                 f'{gap:.3e} at z = {z}.')
    return value


def modified_product_bound(B, r):
    """Bound C M(r) max (1 - |z_j|) on ||B(z) - B~(z)|| for |z| <= r, where C = sum (1 - |z_j|) and
    M(r) = 2 / (1 - r)^2 e^{C (1 + r)/(1 - r)} max(1, 2 e^{C (1 + r)/(1 - r)})."""
    if len(B) == 0:
        return 0.0
    gaps = 1 - np.abs(B.zeros)
    c = float(np.sum(gaps))
    growth = np.exp(c * (1 + r) / (1 - r))
    m = 2 / (1 - r) ** 2 * growth * max(1.0, 2 * growth)
    return float(c * m * np.max(gaps))


def modified_product_error(B, R=None, r=0.5, n_grid=16):
    """Measures sup ||B(z) - R(z)|| on a polar grid of |z| <= r, where R is the representation of the modified
    product of B, and returns it together with the a priori bound. The radius is reduced below the smallest zero
    modulus when needed.

    Returns:
        A tuple (measured, bound).
    """
    R = bp_to_repr(B) if R is None else R
    if len(B) == 0:
        return 0.0, 0.0
    r = min(r, 0.99 * float(np.min(np.abs(B.zeros))))
    zs = polar_grid(r, n_grid, n_grid)
    values = np.array([repr_eval(R, z) for z in zs])
    measured = float(np.max(stack_norms(B.evaluate_many(zs) - values)))
    return measured, modified_product_bound(B, r)


class InvalidRepresentationException(Exception):
    pass
