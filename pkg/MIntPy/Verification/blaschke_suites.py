import numpy as np

from MIntPy.Blaschke import BPFactor
from MIntPy.Blaschke import factor_out_zeros
from MIntPy.Blaschke import random_bp_product
from MIntPy.Blaschke import scalar_blaschke_product
from MIntPy.MatCore import rank_invariance_check
from MIntPy.MatCore import random_unitary
from MIntPy.MatCore import stack_norms
from MIntPy.MatCore import subharmonic_check
from .suite_abc import SuiteABC


def _disk_points(rng, k, max_modulus=0.95):
    return max_modulus * np.sqrt(rng.uniform(size=k)) * np.exp(2j * np.pi * rng.uniform(size=k))


def _spiral_grid(k=200, max_modulus=0.95):
    radii = max_modulus * np.sqrt((np.arange(k) + 0.5) / k)
    return radii * np.exp(2j * np.pi * 0.618034 * np.arange(k))


def _random_product(rng, **kwds):
    return random_bp_product(rng, int(rng.integers(2, 5)), int(rng.integers(1, 5)), **kwds)


class BoundaryUnitaritySuite(SuiteABC):
    name = 'bp_boundary_unitarity'
    proposition = 'A finite B.P. product takes unitary values on the unit circle.'
    reference = 'Lemma finitebp'
    tol = 1e-10

    def __call__(self, rng):
        B = _random_product(rng)
        values = B.evaluate_many(np.exp(2j * np.pi * rng.uniform(size=32)))
        return float(np.max(stack_norms(values @ np.conj(np.swapaxes(values, -1, -2)) - np.eye(B.dim))))


class DeterminantSuite(SuiteABC):
    name = 'bp_determinant'
    proposition = 'det B(z) is the scalar Blaschke product of the zeros, each repeated rank times, times det V.'
    reference = 'Lemma finitebp'
    tol = 1e-10

    def __call__(self, rng):
        B = _random_product(rng)
        residual = 0.0
        for z in _disk_points(rng, 8):
            expected = scalar_blaschke_product(B.zeros, B.ranks, z) * np.linalg.det(B.tail_unitary)
            residual = max(residual, abs(np.linalg.det(B(z)) - expected) / max(abs(expected), 1e-300))
        return residual


class DetachReconstructSuite(SuiteABC):
    """Residual: sup ||A - B R|| over a 200-point grid, or inf when det R still vanishes at one of the zeros."""
    name = 'detach_reconstruct'
    proposition = 'Factoring out the zeros of A gives A = B R with B a B.P. product and det R zero-free.'
    reference = 'Thm bpfactor'

    def __call__(self, rng):
        original = random_bp_product(rng, int(rng.integers(2, 4)), int(rng.integers(1, 4)), max_modulus=0.8)
        A = original.to_mvf()
        B, remainder = factor_out_zeros(A, original.zeros)
        if min(abs(remainder.det(z0)) for z0 in original.zeros) <= 1e-6:
            return np.inf
        zs = _spiral_grid()
        return float(np.max(stack_norms(A.evaluate_many(zs) - B.evaluate_many(zs) @ remainder.evaluate_many(zs))))


class RankInvarianceSuite(SuiteABC):
    """A rank-r factor embedded in dimension n: I - AA* must have rank r everywhere in the disk."""
    name = 'rank_invariance'
    proposition = 'The rank of I - A(z)A(z)* does not depend on the point z of the open disk.'
    reference = 'Lemma rankinvar'
    tol = 0.0

    def __call__(self, rng):
        n = int(rng.integers(2, 5))
        rank = int(rng.integers(1, n + 1))
        b = BPFactor(0.9 * _disk_points(rng, 1)[0], random_unitary(rng, n), rank)
        holds, ranks = rank_invariance_check(b.to_mvf(), _disk_points(rng, 50))
        return 0.0 if holds and ranks[0] == rank else 1.0


class SubharmonicitySuite(SuiteABC):
    """Residual: how much ||A(center)|| exceeds the mean of ||A|| on a random circle around it."""
    name = 'subharmonicity'
    proposition = 'z -> ||A(z)|| is subharmonic for a holomorphic matrix function A.'
    reference = 'Lemma subharmlemma'
    tol = 1e-10

    def __call__(self, rng):
        A = _random_product(rng).to_mvf()
        center = _disk_points(rng, 1, max_modulus=0.8)[0]
        radius = rng.uniform(0.05, 0.95 - abs(center))
        _, center_norm, circle_mean = subharmonic_check(A, center, radius, tol=0)
        return max(0.0, center_norm - circle_mean)
