import numpy as np

from MIntPy.Blaschke import BPFactor
from MIntPy.Blaschke import BPProduct
from MIntPy.Blaschke import random_bp_factor
from MIntPy.MatCore import MatrixFunction
from MIntPy.MatCore import imaginary_part
from MIntPy.MatCore import min_eigenvalue
from MIntPy.MatCore import random_positive
from MIntPy.MatCore import random_unitary
from MIntPy.MatCore import spectral_norm
from MIntPy.Potapov import bp_to_repr
from MIntPy.Potapov import cayley_forward
from MIntPy.Potapov import cayley_inverse
from MIntPy.Potapov import choose_rotation
from MIntPy.Potapov import herglotz_extract
from MIntPy.Potapov import modified_product_error
from .suite_abc import SuiteABC


def sorted_bp_product(rng, n, n_factors, max_modulus=0.9, min_modulus=0.0):
    """Random B.P. product with nonzero zeros listed by increasing argument, as the representation requires."""
    factors = []
    while len(factors) < n_factors:
        factor = random_bp_factor(rng, n, max_modulus=max_modulus)
        if abs(factor.zero) > min_modulus:
            factors.append(factor)
    factors.sort(key=lambda b: np.mod(np.angle(b.zero), 2 * np.pi))
    return BPProduct(factors, random_unitary(rng, n))


class TraceNormalizationSuite(SuiteABC):
    name = 'trace_normalization'
    proposition = 'The integrator of the representation of a B.P. product satisfies tr E(t) = t.'
    reference = 'Thm potapov'
    tol = 1e-12

    def __call__(self, rng):
        B = sorted_bp_product(rng, int(rng.integers(2, 5)), int(rng.integers(1, 7)), min_modulus=1e-3)
        return bp_to_repr(B).trace_residual()


class ModifiedProductSuite(SuiteABC):
    """Zeros close to the circle; the residual is the excess of the measured error over its a priori bound."""
    name = 'modified_product_error'
    proposition = 'The modified product approximates B within C M(r) max (1 - |z_j|) on |z| <= r.'
    reference = 'Lemma Atildelemma'
    tol = 0.0

    def __call__(self, rng):
        rho = rng.uniform(0.99, 0.9995)
        angles = np.sort(rng.uniform(0, 2 * np.pi, size=int(rng.integers(1, 4))))
        n = int(rng.integers(2, 4))
        B = BPProduct([BPFactor(rho * np.exp(1j * t), random_unitary(rng, n), int(rng.integers(1, n + 1)))
                       for t in angles])
        measured, bound = modified_product_error(B, r=0.5, n_grid=8)
        return max(0.0, measured - bound)


class CayleyRoundTripSuite(SuiteABC):
    """Strict contractions rho B(z), with B a random B.P. product and rho < 1."""
    name = 'cayley_round_trip'
    proposition = 'The Cayley transform maps contractions to Im T >= 0 and is inverted by w (T - iI)(T + iI)^{-1}.'
    reference = 'Thm rationalapprox'
    tol = 1e-10

    def __call__(self, rng):
        B = sorted_bp_product(rng, int(rng.integers(2, 5)), int(rng.integers(1, 4)))
        z = 0.9 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
        a = rng.uniform(0.5, 0.9) * B(z)
        w = choose_rotation(a)
        T = cayley_forward(a, z, w)
        return max(spectral_norm(cayley_inverse(T, w) - a), max(0.0, -min_eigenvalue(imaginary_part(T))))


class UniformDensitySuite(SuiteABC):
    name = 'herglotz_uniform_density'
    proposition = 'The constant Herglotz function iM has the uniform representing function t M / 2pi.'
    reference = 'Thm herglotz'
    tol = 1e-6

    def __call__(self, rng):
        m = random_positive(rng, int(rng.integers(2, 5)))
        angles, sigma = herglotz_extract(MatrixFunction.constant(1j * m), 0.9, 64)
        return float(np.max(np.abs(sigma - angles[:, None, None] * m / (2 * np.pi))))
