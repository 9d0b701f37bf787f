import numpy as np

from MIntPy.MatCore import mat_exp
from MIntPy.MatCore import random_positive
from .cantor_integrator import CantorIntegrator
from .density_integrator import DensityIntegrator
from .kernels import CallableKernel
from .kernels import ConstantKernel
from .kernels import HerglotzKernel
from .linear_integrator import LinearIntegrator
from .step_integrator import StepIntegrator

SWAP = np.array([[0, 1], [1, 0]], dtype=complex)
DIAG_12 = np.diag([1.0, 2.0]).astype(complex)


def cosh_sinh_example():
    """f = 1 against E(t) = t A on [0, 1], A = [[0, 1], [1, 0]], whose multiplicative integral is exp(A).

    Returns:
        A tuple (f, E, expected).
    """
    expected = np.array([[np.cosh(1), np.sinh(1)], [np.sinh(1), np.cosh(1)]], dtype=complex)
    return ConstantKernel(1.0, name='one'), LinearIntegrator.from_slope(0.0, 1.0, SWAP, name='tA'), expected


def noncommuting_example():
    """f = 1 against E(t) = t A on [-1, 0] and t B on [0, 1], A = [[0, 1], [1, 0]], B = diag(1, 2).

    The multiplicative integral is e^A e^B, which differs from exp(E(1) - E(-1)) = e^{A + B}.

    Returns:
        A tuple (f, E, product, naive), with product = e^A e^B and naive = e^{A + B}.
    """
    E = LinearIntegrator([-1.0, 0.0, 1.0], [-SWAP, np.zeros((2, 2)), DIAG_12], name='tA|tB')
    return ConstantKernel(1.0, name='one'), E, mat_exp(SWAP) @ mat_exp(DIAG_12), mat_exp(SWAP + DIAG_12)


def random_linear_integrator(rng, n, n_nodes=4, a=0.0, b=1.0, scale=1.0):
    """Increasing piecewise-linear integrator with random positive increments between random nodes."""
    nodes = np.concatenate([[a], np.sort(rng.uniform(a, b, n_nodes - 2)), [b]])
    increments = [random_positive(rng, n, scale / n_nodes) for _ in range(n_nodes - 1)]
    values = np.cumsum([np.zeros((n, n), dtype=complex)] + increments, axis=0)
    return LinearIntegrator(nodes, values, increasing=True, name='random-linear')


def random_step_integrator(rng, n, n_jumps=3, a=0.0, b=1.0, scale=1.0):
    """Increasing step integrator with random positive jumps at random locations in (a, b)."""
    locations = np.sort(rng.uniform(a, b, n_jumps))
    jumps = [random_positive(rng, n, scale / n_jumps) for _ in range(n_jumps)]
    return StepIntegrator(a, b, locations, jumps, increasing=True, name='random-step')


def random_density(rng, n, scale=1.0):
    """Smooth positive density t -> P0 + t^2 P1 + (1 + cos(2 pi t)) / 2 P2 (vectorized), with random positive P_i."""
    p0, p1, p2 = (random_positive(rng, n, scale / 3) for _ in range(3))

    def density(ts):
        ts = np.asarray(ts, dtype=float)[:, None, None]
        return p0 + ts ** 2 * p1 + (1 + np.cos(2 * np.pi * ts)) / 2 * p2

    return density


def random_density_integrator(rng, n, a=0.0, b=1.0, scale=1.0):
    return DensityIntegrator(random_density(rng, n, scale), a, b, vectorized=True, increasing=True,
                             name='random-density')


def random_cantor_integrator(rng, n, a=0.0, b=1.0, depth=6, scale=1.0):
    return CantorIntegrator(random_positive(rng, n, scale), a=a, b=b, depth=depth, name='random-cantor')


def random_smooth_kernel(rng, scale=1.0):
    """Kernel t -> c0 + c1 t + c2 cos(2 pi t) with random complex coefficients."""
    c = scale * (rng.standard_normal(3) + 1j * rng.standard_normal(3)) / 2
    return CallableKernel(lambda ts: c[0] + c[1] * ts + c[2] * np.cos(2 * np.pi * ts), name='random-smooth')


def random_herglotz_kernel(rng, a=0.0, b=1.0, max_modulus=0.5):
    """Herglotz kernel at a random point of the disk |z| <= max_modulus, composed with a linear angle map."""
    z = max_modulus * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
    start, span = rng.uniform(0, np.pi), rng.uniform(0, np.pi)
    return HerglotzKernel(z, theta=lambda ts: start + span * (ts - a) / (b - a), name='random-herglotz')


def random_instance(rng, n, kind=None, scale=0.25):
    """A random (f, E) pair; kind is one of 'linear', 'step', 'density' or 'cantor' (random if omitted).

    The default scale keeps the total variation of E around one, so that results have moderate norms.
    """
    kinds = ['linear', 'step', 'density', 'cantor']
    kind = kinds[rng.integers(len(kinds))] if kind is None else kind
    if kind == 'linear':
        E = random_linear_integrator(rng, n, scale=scale)
    elif kind == 'step':
        E = random_step_integrator(rng, n, scale=scale)
    elif kind == 'density':
        E = random_density_integrator(rng, n, scale=scale)
    elif kind == 'cantor':
        E = random_cantor_integrator(rng, n, scale=scale)
    else:
        raise Exception(f'There is no random instance corresponding to the name "{kind}". Available: {kinds}.')
    f = random_smooth_kernel(rng) if rng.uniform() < 0.5 else random_herglotz_kernel(rng, E.a, E.b)
    return f, E
