import numpy as np

from MIntPy.MatCore import MatrixFunction
from MIntPy.MatCore import adjoint
from MIntPy.MatCore import as_cmat
from MIntPy.MatCore import is_unitary
from MIntPy.MatCore import random_unitary


def beta(z0, z):
    """Scalar Blaschke factor (z0 - z) / (1 - conj(z0) z) * |z0| / z0, or z itself when z0 = 0.

    Vectorized over z. The factor vanishes at z0 only, is bounded by 1 on the closed disk and unimodular on the circle.
    """
    z0 = complex(z0)
    assert abs(z0) < 1, f'The zero of a Blaschke factor should lie in the open disk, found |z0| = {abs(z0)}.'
    z = np.asarray(z, dtype=complex)
    if z0 == 0:
        return z.copy() if z.ndim else complex(z)
    value = (z0 - z) / (1 - np.conj(z0) * z) * (abs(z0) / z0)
    return value if value.ndim else complex(value)


class BPFactor:
    """Blaschke-Potapov factor b(z) = U diag(beta_{z0}(z) I_r, I_{n - r}) U* = I - P + beta_{z0}(z) P.

    Args:
        zero: The zero z0 of the factor, |z0| < 1.
        frame: A unitary n x n matrix U whose first r columns span the range of P.
        rank: An integer r with 0 < r <= n.
    """
    def __init__(self, zero, frame, rank):
        self.zero = complex(zero)
        self.frame = as_cmat(frame)
        self.rank = int(rank)
        self.dim = self.frame.shape[0]
        assert abs(self.zero) < 1, f'The zero of a B.P. factor should lie in the open disk, found {self.zero}.'
        assert 0 < self.rank <= self.dim, f'Expected 0 < rank ({self.rank}) <= dimension ({self.dim}).'
        assert is_unitary(self.frame), 'The frame of a B.P. factor should be unitary.'
        basis = self.frame[:, :self.rank]
        self.projection = basis @ adjoint(basis)

    @staticmethod
    def from_projection(zero, projection, tol=1e-10):
        """Builds the factor I - P + beta_{z0} P from an orthogonal projection P."""
        projection = as_cmat(projection)
        assert np.max(np.abs(projection @ projection - projection)) <= tol and \
            np.max(np.abs(projection - adjoint(projection))) <= tol, 'Expected an orthogonal projection.'
        eigvals, eigvecs = np.linalg.eigh((projection + adjoint(projection)) / 2)
        order = np.argsort(-eigvals)
        rank = int(np.sum(eigvals > 0.5))
        return BPFactor(zero, eigvecs[:, order], rank)

    def __call__(self, z):
        return eval_factor(self, z)

    def evaluate_many(self, zs):
        zs = np.asarray(zs, dtype=complex).ravel()
        eye = np.eye(self.dim, dtype=complex)
        return eye - self.projection + beta(self.zero, zs)[:, None, None] * self.projection

    def inverse(self, z):
        """b(z)^{-1} = I - P + P / beta_{z0}(z), for z != z0."""
        b = beta(self.zero, z)
        assert b != 0, f'The factor is not invertible at its zero {self.zero}.'
        return np.eye(self.dim, dtype=complex) - self.projection + self.projection / b

    def det(self, z):
        return beta(self.zero, z) ** self.rank

    def to_mvf(self):
        return MatrixFunction(self, self.dim, contractive=True, det_fn=self.det, batch_fn=self.evaluate_many,
                              name=f'b[{self.zero:.4g}, r={self.rank}]')

    def __repr__(self):
        return f'BPFactor(zero={self.zero}, rank={self.rank}, dim={self.dim})'


def eval_factor(b, z):
    """Value I - P + beta_{z0}(z) P of a B.P. factor at a point of the closed disk."""
    assert abs(z) <= 1 + 1e-12, f'B.P. factors are evaluated on the closed disk, found |z| = {abs(z)}.'
    return np.eye(b.dim, dtype=complex) - b.projection + beta(b.zero, z) * b.projection


def random_bp_factor(rng, n, rank=None, max_modulus=0.9):
    """B.P. factor with a random zero in |z| <= max_modulus, a Haar-random frame and a random (or given) rank."""
    zero = max_modulus * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
    rank = int(rng.integers(1, n + 1)) if rank is None else rank
    return BPFactor(zero, random_unitary(rng, n), rank)
