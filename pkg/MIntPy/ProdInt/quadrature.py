import numpy as np
import scipy.integrate

GL_ORDER = 8


def gauss_legendre_cells(fn, lefts, rights, order=3):
    """Integrals of fn over many cells with a fixed Gauss-Legendre rule per cell.

    Args:
        fn: Vectorized callable mapping a 1-d array of N points to an array of shape (N, ...).
        lefts: Left end points of the k cells.
        rights: Right end points of the k cells.
        order: Number of Gauss-Legendre nodes per cell. Default: 3.

    Returns:
        An array of shape (k, ...).
    """
    lefts, rights = np.asarray(lefts, dtype=float), np.asarray(rights, dtype=float)
    nodes, weights = np.polynomial.legendre.leggauss(order)
    half = (rights - lefts) / 2
    xs = (lefts + half)[:, None] + half[:, None] * nodes[None, :]
    values = np.asarray(fn(xs.ravel()))
    values = values.reshape((len(lefts), order) + values.shape[1:])
    weighted = np.tensordot(weights, np.moveaxis(values, 1, 0), axes=(0, 0))
    return weighted * half.reshape((-1,) + (1,) * (weighted.ndim - 1))


def interval_integrals(fn, lefts, rights, rtol=1e-13, max_level=12, order=GL_ORDER):
    """Integrals of fn over many intervals with composite Gauss-Legendre rules, doubling the number of subcells of
    every interval until two successive levels agree within rtol.

    The intervals must not contain discontinuities of fn in their interior.
    """
    lefts, rights = np.asarray(lefts, dtype=float), np.asarray(rights, dtype=float)
    if len(lefts) == 0:
        return np.zeros(0, dtype=complex)

    prev = None
    for level in range(max_level + 1):
        m = 2 ** level
        steps = np.arange(m + 1) / m
        edges = lefts[:, None] + (rights - lefts)[:, None] * steps[None, :]
        cells = gauss_legendre_cells(fn, edges[:, :-1].ravel(), edges[:, 1:].ravel(), order=order)
        res = cells.reshape((len(lefts), m) + cells.shape[1:]).sum(axis=1)
        if prev is not None:
            scale = np.maximum(1.0, np.abs(res).reshape(len(lefts), -1).max(axis=1))
            diff = np.abs(res - prev).reshape(len(lefts), -1).max(axis=1)
            if np.all(diff <= rtol * scale):
                return res
        prev = res
    return res


def scalar_quad(fn, a, b, points=None, epsabs=1e-13, epsrel=1e-12, limit=500):
    """Integral of a complex scalar function through two real scipy quad calls."""
    if a == b:
        return 0j
    points = None if points is None or len(points) == 0 else [p for p in points if a < p < b] or None
    re = scipy.integrate.quad(lambda t: np.real(fn(t)), a, b, points=points, epsabs=epsabs, epsrel=epsrel,
                              limit=limit)[0]
    im = scipy.integrate.quad(lambda t: np.imag(fn(t)), a, b, points=points, epsabs=epsabs, epsrel=epsrel,
                              limit=limit)[0]
    return re + 1j * im


def matrix_quad(fn, a, b, points=None, epsabs=1e-13, epsrel=1e-12):
    """Integral of a complex matrix-valued function with scipy quad_vec on stacked real and imaginary parts."""
    sample = np.asarray(fn(a), dtype=complex)
    if a == b:
        return np.zeros_like(sample)

    def stacked(t):
        v = np.asarray(fn(t), dtype=complex)
        return np.concatenate([v.real.ravel(), v.imag.ravel()])

    points = None if points is None else [p for p in points if a < p < b] or None
    res = scipy.integrate.quad_vec(stacked, a, b, epsabs=epsabs, epsrel=epsrel, points=points)[0]
    half = sample.size
    return (res[:half] + 1j * res[half:]).reshape(sample.shape)
