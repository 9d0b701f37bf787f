import numpy as np
from scipy.integrate import solve_ivp

from .riemann_sums import ordered_product

ODE_METHODS = ('rk4', 'dop853')


def _density_samples(density, ts, vectorized):
    ts = np.asarray(ts, dtype=float).ravel()
    if vectorized:
        values = np.asarray(density(ts), dtype=complex)
        return values.reshape(len(ts), values.shape[-2], values.shape[-1])
    return np.array([np.asarray(density(t), dtype=complex) for t in ts])


def rk4_step_matrices(density, lefts, h, vectorized=False, step_norm_cap=2.5):
    """One classical Runge-Kutta step of F' = F A(t) per left end point, written as F_new = F M.

    Args:
        density: Callable t -> A(t).
        lefts: Left end points of the steps.
        h: Step lengths (a scalar or one per step).
        vectorized: Optional boolean indicating if density accepts arrays. Default: False.
        step_norm_cap: Steps with h ||A(t)|| above this value are rejected. Default: 2.5.

    Returns:
        An array of shape (len(lefts), n, n) with the step matrices M.
    """
    lefts = np.asarray(lefts, dtype=float)
    h = np.broadcast_to(np.asarray(h, dtype=float), lefts.shape)
    k = len(lefts)
    samples = _density_samples(density, np.concatenate([lefts, lefts + h / 2, lefts + h]), vectorized)
    a0, a_half, a1 = samples[:k], samples[k:2 * k], samples[2 * k:]

    worst = float(np.max(h * np.linalg.norm(samples.reshape(3, k, *samples.shape[1:]), ord=2, axis=(-2, -1))))
    if worst > step_norm_cap:
        raise StepOverflowException(f'A step has local norm h||A|| = {worst:.3e} above the cap {step_norm_cap}; '
                                    f'use more steps.')

    eye = np.eye(samples.shape[-1], dtype=complex)
    hh = h[:, None, None]
    m1 = a0
    m2 = (eye + hh / 2 * m1) @ a_half
    m3 = (eye + hh / 2 * m2) @ a_half
    m4 = (eye + hh * m3) @ a1
    return eye + hh / 6 * (m1 + 2 * m2 + 2 * m3 + m4)


def _segment_steps(segments, steps):
    """Distributes the requested steps over the segments proportionally to their lengths (at least one each)."""
    lengths = np.diff(segments)
    counts = np.maximum(1, np.round(steps * lengths / np.sum(lengths)).astype(int))
    lefts, hs = [], []
    for left, length, count in zip(segments[:-1], lengths, counts):
        lefts.append(left + length * np.arange(count) / count)
        hs.append(np.full(count, length / count))
    return np.concatenate(lefts), np.concatenate(hs)


def _dop853_segment(density, left, right, start, rtol, atol):
    n = start.shape[0]

    def rhs(t, y):
        f = (y[:n * n] + 1j * y[n * n:]).reshape(n, n)
        d = f @ np.asarray(density(t), dtype=complex)
        return np.concatenate([d.real.ravel(), d.imag.ravel()])

    y0 = np.concatenate([start.real.ravel(), start.imag.ravel()])
    sol = solve_ivp(rhs, (left, right), y0, method='DOP853', rtol=rtol, atol=atol)
    if not sol.success:
        raise StepOverflowException(f'DOP853 failed on [{left}, {right}]: {sol.message}')
    y = sol.y[:, -1]
    return (y[:n * n] + 1j * y[n * n:]).reshape(n, n)


def ode_integral(density, a, b, steps=256, breakpoints=(), vectorized=False, method='rk4', step_norm_cap=2.5,
                 rtol=1e-12, atol=1e-14):
    """Solves the Cauchy problem F'(t) = F(t) A(t), F(a) = I, whose value F(b) is the multiplicative Lebesgue
    integral of the density A over [a, b].

    Args:
        density: Callable t -> A(t), an n x n matrix (or, if vectorized, a 1-d array -> (k, n, n) array).
        a: Left end point.
        b: Right end point.
        steps: Total number of fixed RK4 steps (ignored by dop853). Default: 256.
        breakpoints: Optional points where A is not smooth; steps never straddle them. Default: ().
        vectorized: Optional boolean indicating if density accepts arrays. Default: False.
        method: Either 'rk4' (fixed steps) or 'dop853' (scipy's adaptive Dormand-Prince). Default: 'rk4'.
        step_norm_cap: RK4 steps with h ||A(t)|| above this value are rejected. Default: 2.5.
        rtol: Relative tolerance of dop853. Default: 1e-12.
        atol: Absolute tolerance of dop853. Default: 1e-14.

    Returns:
        F(b) as a complex matrix.
    """
    assert a <= b, f'The left end point ({a}) should be <= the right end point ({b}).'
    assert steps >= 1, f'The number of steps ({steps}) should be >= 1.'
    if method not in ODE_METHODS:
        raise Exception(f'There is no ODE method corresponding to the name "{method}". '
                        f'Available methods: {ODE_METHODS}.')

    n = _density_samples(density, [a], vectorized).shape[-1]
    if a == b:
        return np.eye(n, dtype=complex)
    bps = np.asarray(breakpoints, dtype=float).ravel()
    segments = np.union1d([a, b], bps[(bps > a) & (bps < b)])

    if method == 'dop853':
        value = np.eye(n, dtype=complex)
        for left, right in zip(segments[:-1], segments[1:]):
            value = _dop853_segment(density, left, right, value, rtol, atol)
        return value

    lefts, hs = _segment_steps(segments, steps)
    return ordered_product(rk4_step_matrices(density, lefts, hs, vectorized, step_norm_cap))


class StepOverflowException(Exception):
    pass
