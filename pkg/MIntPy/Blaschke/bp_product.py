from joblib import dump
from joblib import load
import numpy as np

from MIntPy.MatCore import MatrixFunction
from MIntPy.MatCore import as_cmat
from MIntPy.MatCore import is_unitary
from MIntPy.MatCore import random_unitary
from .bp_factor import beta
from .bp_factor import eval_factor
from .bp_factor import random_bp_factor


class BPProduct:
    """Finite Blaschke-Potapov product B(z) = b_1(z) b_2(z) ... b_m(z) V with a unitary tail V.

    A unitary constant (no factors) is also a B.P. product.

    Args:
        factors: Optional ordered sequence of BPFactor. Default: ().
        tail_unitary: Optional unitary n x n matrix V. Default: the identity.
        dim: Optional matrix dimension, required only when there are no factors and no tail.
    """
    def __init__(self, factors=(), tail_unitary=None, dim=None):
        self.factors = list(factors)
        if tail_unitary is None:
            if dim is None:
                assert len(self.factors) > 0, 'The dimension of an empty B.P. product without tail is unknown.'
                dim = self.factors[0].dim
            tail_unitary = np.eye(dim, dtype=complex)
        self.tail_unitary = as_cmat(tail_unitary)
        self.dim = self.tail_unitary.shape[0]
        assert is_unitary(self.tail_unitary), 'The tail of a B.P. product should be unitary.'
        for k, factor in enumerate(self.factors):
            assert factor.dim == self.dim, f'Factor {k} has dimension {factor.dim}, expected {self.dim}.'

    def __len__(self):
        return len(self.factors)

    @property
    def zeros(self):
        return np.array([b.zero for b in self.factors], dtype=complex)

    @property
    def ranks(self):
        return np.array([b.rank for b in self.factors], dtype=int)

    def __call__(self, z):
        return eval_product(self, z)

    def evaluate_many(self, zs):
        zs = np.asarray(zs, dtype=complex).ravel()
        value = np.broadcast_to(np.eye(self.dim, dtype=complex), (len(zs), self.dim, self.dim)).copy()
        for factor in self.factors:
            value = value @ factor.evaluate_many(zs)
        return value @ self.tail_unitary

    def det(self, z):
        """det B(z) = prod beta_{z_i}(z)^{r_i} det V."""
        value = complex(np.linalg.det(self.tail_unitary))
        for factor in self.factors:
            value *= factor.det(z)
        return value

    def blaschke_sum(self):
        """sum (1 - |z_i|) r_i, finite for every finite product."""
        return float(np.sum((1 - np.abs(self.zeros)) * self.ranks))

    def tail_bound(self, r, start):
        """Bound (1 + r)/(1 - r) sum_{i >= start} (1 - |z_i|) on ||B(z) - B_start(z)|| for |z| <= r, where B_start
        keeps the first `start` factors."""
        assert 0 <= r < 1, f'The radius ({r}) should lie in [0, 1).'
        return float((1 + r) / (1 - r) * np.sum(1 - np.abs(self.zeros[start:])))

    def truncated(self, k):
        """The product of the first k factors, with the same tail."""
        return BPProduct(self.factors[:k], self.tail_unitary)

    def to_mvf(self):
        return MatrixFunction(self, self.dim, contractive=True, det_fn=self.det, batch_fn=self.evaluate_many,
                              name=f'B[{len(self)} factors]')

    def save(self, save_path):
        """Exports the product with joblib."""
        dump(self, save_path)

    @staticmethod
    def load(load_path):
        return load(load_path)

    def __repr__(self):
        return f'BPProduct(dim={self.dim}, zeros={np.around(self.zeros, 6).tolist()}, ranks={self.ranks.tolist()})'


def eval_product(B, z):
    """Ordered product of the factor values at z times the unitary tail."""
    value = np.eye(B.dim, dtype=complex)
    for factor in B.factors:
        value = value @ eval_factor(factor, z)
    return value @ B.tail_unitary


def scalar_blaschke_product(zeros, ranks, z):
    """prod beta_{z_i}(z)^{r_i}, the determinant of a B.P. product with these zeros and ranks and tail I."""
    value = np.ones(np.shape(z), dtype=complex)
    for zero, rank in zip(zeros, ranks):
        value = value * beta(zero, z) ** rank
    return value


def random_bp_product(rng, n, n_factors, max_modulus=0.9, with_tail=True):
    """B.P. product of random factors with an optional Haar-random tail."""
    factors = [random_bp_factor(rng, n, max_modulus=max_modulus) for _ in range(n_factors)]
    tail = random_unitary(rng, n) if with_tail else np.eye(n)
    return BPProduct(factors, tail)
