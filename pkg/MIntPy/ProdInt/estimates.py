import numpy as np

from MIntPy.MatCore import spectral_norm
from .kernels import ConstantKernel


def stieltjes_integral(f, E, a=None, b=None):
    """Additive Riemann-Stieltjes integral int_a^b f dE."""
    return E.stieltjes(f, a, b)


def determinant_formula(f, E, a=None, b=None):
    """exp(int_a^b f d(tr E)), the determinant of every multiplicative integral of f against E."""
    return complex(np.exp(np.trace(E.stieltjes(f, a, b))))


def variation(E, t):
    """Total variation of E over [E.a, t]."""
    return E.variation(t)


def norm_bound(f, E, a=None, b=None):
    """exp(int_a^b |f| d|E|), an upper bound for the norm of the multiplicative integral."""
    return float(np.exp(E.variation_integral(f.modulus(), a, b)))


def taylor_certificate(f, E, a=None, b=None):
    """First-order expansion of the multiplicative integral with its remainder bound.

    With s = int |f| d|E|, the multiplicative integral differs from I + int f dE by at most
    sum_{k >= 2} s^k / k! = exp(s) - 1 - s.

    Returns:
        A tuple (linear_part, remainder_bound).
    """
    s = E.variation_integral(f.modulus(), a, b)
    linear_part = np.eye(E.dim, dtype=complex) + E.stieltjes(f, a, b)
    return linear_part, float(np.expm1(s) - s)


def telescoping_difference(ps, qs):
    """Both sides of prod P_l - prod Q_l = sum_l P_1 ... P_{l-1} (P_l - Q_l) Q_{l+1} ... Q_m.

    Returns:
        A tuple (lhs, rhs).
    """
    assert len(ps) == len(qs), f'Factor lists of different lengths: {len(ps)} != {len(qs)}.'
    n = np.asarray(ps[0]).shape[-1] if len(ps) > 0 else 1
    eye = np.eye(n, dtype=complex)

    prefixes = [eye]
    for p in ps:
        prefixes.append(prefixes[-1] @ p)
    suffixes = [eye]
    for q in reversed(qs):
        suffixes.append(q @ suffixes[-1])
    suffixes = suffixes[::-1]

    lhs = prefixes[-1] - suffixes[0]
    rhs = sum((prefixes[i] @ (ps[i] - qs[i]) @ suffixes[i + 1] for i in range(len(ps))), np.zeros((n, n), complex))
    return lhs, rhs


def additive_stieltjes_bound(f, E, a=None, b=None):
    """Both sides of ||int f dE|| <= sup|f| ||E(b) - E(a)|| for an increasing integrator E.

    Returns:
        A tuple (norm_of_integral, bound).
    """
    a = E.a if a is None else a
    b = E.b if b is None else b
    integral = spectral_norm(E.stieltjes(f, a, b))
    return integral, f.sup_modulus(a, b) * spectral_norm(E.value(b) - E.value(a))


def product_estimate(factors):
    """Both sides of ||I - prod B_i|| <= prod (1 + ||I - B_i||) - 1.

    Returns:
        A tuple (distance_to_identity, bound).
    """
    n = np.asarray(factors[0]).shape[-1]
    eye = np.eye(n)
    product = eye.astype(complex)
    bound = 1.0
    for factor in factors:
        product = product @ factor
        bound *= 1 + spectral_norm(eye - factor)
    return spectral_norm(eye - product), bound - 1


def unit_kernel():
    return ConstantKernel(1.0, name='one')
