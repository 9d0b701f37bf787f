import numpy as np

from MIntPy.MatCore import random_matrix
from MIntPy.MatCore import random_unitary
from MIntPy.MatCore import spectral_norm
from MIntPy.ProdInt import ConstantKernel
from MIntPy.ProdInt import ProductIntegrator
from MIntPy.ProdInt import additive_stieltjes_bound
from MIntPy.ProdInt import cauchy_gap
from MIntPy.ProdInt import gram_product
from MIntPy.ProdInt import ode_integral
from MIntPy.ProdInt import prod_integral
from MIntPy.ProdInt import split_product
from MIntPy.ProdInt import taylor_certificate
from MIntPy.ProdInt import telescoping_difference
from MIntPy.ProdInt.reference_examples import random_density_integrator
from MIntPy.ProdInt.reference_examples import random_herglotz_kernel
from MIntPy.ProdInt.reference_examples import random_instance
from MIntPy.ProdInt.reference_examples import random_linear_integrator
from MIntPy.ProdInt.reference_examples import random_smooth_kernel
from .suite_abc import SuiteABC


class DeterminantFormulaSuite(SuiteABC):
    name = 'determinant_formula'
    proposition = 'det int exp(f dE) = exp(int f d tr E).'
    reference = 'Prop mintdet'
    tol = 1e-8

    def __call__(self, rng):
        f, E = random_instance(rng, int(rng.integers(2, 5)))
        return ProductIntegrator(tol=1e-9, test_mode=True).integrate(f, E).det_residual


class SplittingSuite(SuiteABC):
    name = 'splitting'
    proposition = 'int_a^b exp(f dE) = int_a^c exp(f dE) int_c^b exp(f dE) for every a <= c <= b.'
    reference = 'Prop mintsep'

    def __call__(self, rng):
        E = random_linear_integrator(rng, int(rng.integers(2, 5)), scale=0.5)
        f = random_smooth_kernel(rng)
        c = rng.uniform(0.2, 0.8)
        full = prod_integral(f, E, tol=1e-10).value
        left, right = split_product(f, E, c, tol=1e-10)
        return spectral_norm(left.value @ right.value - full)


class GramIdentitySuite(SuiteABC):
    name = 'gram_identity'
    proposition = 'A A* = int exp(2 Re f dE) for A = int exp(f dE) and a Hermitian integrator E.'
    reference = 'Prop mintgram'

    def __call__(self, rng):
        E = random_linear_integrator(rng, 2)
        f = random_herglotz_kernel(rng, E.a, E.b)
        value = prod_integral(f, E, tol=1e-10).value
        return spectral_norm(value @ value.conj().T - gram_product(f, E, tol=1e-10))


class NormBoundSuite(SuiteABC):
    name = 'norm_bound'
    proposition = '||int exp(f dE)|| <= exp(int |f| d|E|).'
    reference = 'Prop mintest'

    def __call__(self, rng):
        f, E = random_instance(rng, int(rng.integers(2, 5)))
        return ProductIntegrator(tol=1e-9, test_mode=True).integrate(f, E).norm_excess


class TaylorCertificateSuite(SuiteABC):
    """Residual: the amount by which ||int exp(f dE) - I - int f dE|| exceeds exp(s) - 1 - s, s = int |f| d|E|."""
    name = 'taylor_certificate'
    proposition = '||int exp(f dE) - I - int f dE|| <= exp(s) - 1 - s with s = int |f| d|E|.'
    reference = 'Prop minttaylorest'

    def __call__(self, rng):
        E = random_linear_integrator(rng, int(rng.integers(2, 5)), scale=0.2)
        f = random_smooth_kernel(rng)
        value = prod_integral(f, E, tol=1e-10).value
        linear_part, remainder = taylor_certificate(f, E)
        return max(0.0, spectral_norm(value - linear_part) - remainder)


class OdeAgreementSuite(SuiteABC):
    name = 'ode_agreement'
    proposition = 'The multiplicative integral of a smooth density solves F\' = F A(t), F(a) = I.'
    reference = 'Prop mintode'
    tol = 1e-6

    def __call__(self, rng):
        E = random_density_integrator(rng, int(rng.integers(2, 5)))
        ode = ode_integral(E.density, E.a, E.b, steps=512, vectorized=True)
        return spectral_norm(ode - prod_integral(ConstantKernel(1.0), E).value)


class TelescopingSuite(SuiteABC):
    name = 'telescoping'
    proposition = 'prod P_l - prod Q_l = sum_l P_1 ... P_{l-1} (P_l - Q_l) Q_{l+1} ... Q_m.'
    reference = 'Lemma telescoping'
    tol = 1e-10

    def __call__(self, rng):
        n, m = int(rng.integers(2, 5)), int(rng.integers(1, 7))
        ps = [random_matrix(rng, n) for _ in range(m)]
        qs = [random_matrix(rng, n) for _ in range(m)]
        lhs, rhs = telescoping_difference(ps, qs)
        return spectral_norm(lhs - rhs) / max(1.0, spectral_norm(lhs))


class StieltjesBoundSuite(SuiteABC):
    name = 'stieltjes_bound'
    proposition = '||int f dE|| <= sup |f| ||E(b) - E(a)|| for an increasing integrator E.'
    reference = 'Lemma addstieltjesest'
    tol = 1e-9

    def __call__(self, rng):
        E = random_linear_integrator(rng, int(rng.integers(2, 5)))
        integral, bound = additive_stieltjes_bound(random_smooth_kernel(rng), E)
        return max(0.0, integral - bound) / max(1.0, bound)


class ConjugationSuite(SuiteABC):
    name = 'conjugation'
    proposition = 'U int exp(f dE) U^{-1} = int exp(f d(U E U^{-1})) for a constant invertible U.'
    reference = 'Prop mintunitaryconst'
    tol = 1e-8

    def __call__(self, rng):
        n = int(rng.integers(2, 5))
        E = random_linear_integrator(rng, n)
        f = random_smooth_kernel(rng)
        u = random_unitary(rng, n)
        lhs = u @ prod_integral(f, E, tol=1e-10).value @ u.conj().T
        return spectral_norm(lhs - prod_integral(f, E.conjugated(u), tol=1e-10).value)


class CauchyCriterionSuite(SuiteABC):
    """Residual: the gap between two random products of about 2048 cells, or inf when it does not improve on the gap
    at 8 cells."""
    name = 'cauchy_criterion'
    proposition = 'Products over independent tagged partitions get closer as the mesh shrinks.'
    reference = 'Lemma cauchycrit'
    tol = 1e-2

    def __call__(self, rng):
        E = random_density_integrator(rng, 2)
        f = random_smooth_kernel(rng)
        seed = int(rng.integers(2 ** 31))
        coarse, fine = cauchy_gap(f, E, 8, seed=seed), cauchy_gap(f, E, 2048, seed=seed)
        return fine if fine < coarse else np.inf
