import numpy as np

from .matrix_ops import adjoint
from .matrix_ops import numerical_rank
from .matrix_ops import spectral_norm


def subharmonic_check(fn, center, radius, n_samples=64, tol=1e-10):
    """Sampled sub-mean-value check of z -> ||A(z)|| on a circle inside the disk.

    Args:
        fn: A MatrixFunction.
        center: Complex centre of the circle.
        radius: Positive radius, with |center| + radius < 1.
        n_samples: Number of equally spaced circle samples. Default: 64.
        tol: Absolute slack. Default: 1e-10.

    Returns:
        A tuple (holds, center_norm, circle_mean).
    """
    assert radius > 0, f'The radius ({radius}) should be > 0.'
    assert abs(center) + radius < 1, f'The circle |z - {center}| = {radius} leaves the unit disk.'
    zs = center + radius * np.exp(2j * np.pi * np.arange(n_samples) / n_samples)
    values = fn.evaluate_many(zs)
    circle_mean = float(np.mean(np.linalg.norm(values, ord=2, axis=(-2, -1))))
    center_norm = spectral_norm(fn(center))
    return center_norm <= circle_mean + tol, center_norm, circle_mean


def rank_invariance_check(fn, points, rtol=1e-8):
    """Checks that the numerical rank of I - A(z)A(z)* is the same at every sample point.

    Returns:
        A tuple (holds, ranks).
    """
    values = fn.evaluate_many(points)
    eye = np.eye(fn.dim)
    ranks = [numerical_rank(eye - v @ adjoint(v), rtol=rtol) for v in values]
    return len(set(ranks)) <= 1, ranks


def unitary_constant_check(fn, points, unitary_tol=1e-12, const_tol=1e-9):
    """Maximum principle on a contraction: if A(z) is unitary at an interior point, A must be constant.

    A sample counts as unitary when its smallest singular value is >= 1 - unitary_tol. The check is vacuous (and
    passes) when no sample is unitary.

    Returns:
        A tuple (holds, touches_one, max_deviation), where max_deviation is the largest distance between samples of A
        and the value at the first sample point that is unitary.
    """
    values = fn.evaluate_many(points)
    smallest = np.linalg.svd(values, compute_uv=False)[:, -1]
    touching = np.flatnonzero(smallest >= 1 - unitary_tol)
    if len(touching) == 0:
        return True, False, 0.0
    reference = values[touching[0]]
    max_deviation = float(np.max(np.linalg.norm(values - reference, ord=2, axis=(-2, -1))))
    return max_deviation <= const_tol, True, max_deviation
