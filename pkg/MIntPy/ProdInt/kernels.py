from abc import ABC
from abc import abstractmethod
import numpy as np


def herglotz_kernel(z, theta):
    """Herglotz kernel h_z(theta) = (z + e^{i theta}) / (z - e^{i theta}), vectorized over theta.

    At z = 0 it is identically -1. Its real part is minus the Poisson kernel of the unit disk.
    """
    e = np.exp(1j * np.asarray(theta, dtype=float))
    return (z + e) / (z - e)


def _check_angles(angles):
    angles = np.asarray(angles, dtype=float)
    if np.any(angles < 0) or np.any(angles > 2 * np.pi):
        raise InvalidKernelException(f'The angles of a Herglotz kernel should lie in [0, 2pi], found '
                                     f'[{np.min(angles):.6g}, {np.max(angles):.6g}].')


class StepFunction:
    """Right-continuous step function taking values[j] on [jump_points[j - 1], jump_points[j]).

    Args:
        jump_points: Increasing reals where the function changes value.
        values: Array-like with len(jump_points) + 1 values.
    """
    def __init__(self, jump_points, values):
        self.jump_points = np.asarray(jump_points, dtype=float).ravel()
        self.values = np.asarray(values, dtype=float).ravel()
        assert len(self.values) == len(self.jump_points) + 1, \
            f'Expected {len(self.jump_points) + 1} values, found {len(self.values)}.'
        assert np.all(np.diff(self.jump_points) > 0), 'The jump points should be strictly increasing.'

    def __call__(self, ts):
        return self.values[np.searchsorted(self.jump_points, ts, side='right')]

    def is_nondecreasing(self):
        return bool(np.all(np.diff(self.values) >= 0))


class KernelABC(ABC):
    """Base class of the scalar integrands f(t) of a multiplicative integral.

    Kernels are vectorized: calling a kernel on an array of points returns the complex array of its values.
    """
    def __init__(self, **kwds):
        self.name = kwds.get('name', self.__class__.__name__)

    def __call__(self, ts):
        ts = np.asarray(ts, dtype=float)
        return np.array(self._evaluate(ts.ravel()), dtype=complex).reshape(ts.shape)

    @abstractmethod
    def _evaluate(self, ts):
        pass

    def breakpoints(self):
        """Discontinuity points of the kernel, which are always used as partition points."""
        return np.array([])

    def modulus(self):
        return CallableKernel(lambda ts: np.abs(self(ts)), breakpoints=self.breakpoints(), name=f'|{self.name}|')

    def real_part(self, factor=1.0):
        return CallableKernel(lambda ts: factor * np.real(self(ts)), breakpoints=self.breakpoints(),
                              name=f'{factor}Re({self.name})')

    def shifted(self, c):
        """The kernel t -> f(t) + c."""
        return CallableKernel(lambda ts: self(ts) + c, breakpoints=self.breakpoints(), name=f'{self.name}+{c}')

    def composed(self, phi):
        """The kernel t -> f(phi(t)) for a MonotoneMap phi."""
        preimages = phi.generalized_inverse(self.breakpoints()) if len(self.breakpoints()) > 0 else np.array([])
        return CallableKernel(lambda ts: self(phi(ts)), breakpoints=np.union1d(phi.jump_knots(), preimages),
                              name=f'{self.name}o{phi.name}')

    def sup_modulus(self, a, b, n_samples=4097):
        """Sampled sup of |f| over [a, b], including the breakpoints."""
        grid = np.union1d(np.linspace(a, b, n_samples), [p for p in self.breakpoints() if a <= p <= b])
        return float(np.max(np.abs(self(grid))))


class ConstantKernel(KernelABC):
    def __init__(self, c, **kwds):
        super(ConstantKernel, self).__init__(**kwds)
        self.c = complex(c)

    def _evaluate(self, ts):
        return np.full(len(ts), self.c)


class HerglotzKernel(KernelABC):
    """The kernel t -> h_z(theta(t)).

    Args:
        z: A complex number with |z| < 1.
        theta: Optional angle data: None for theta(t) = t, a real for a constant angle, a StepFunction, or a
            vectorized callable. Default: None. Real and step angles should lie in [0, 2pi] and step angles should be
            nondecreasing, otherwise InvalidKernelException is raised. Callables are not checked.
    """
    def __init__(self, z, theta=None, **kwds):
        super(HerglotzKernel, self).__init__(**kwds)
        assert abs(z) < 1, f'The Herglotz kernel needs |z| < 1, found |z| = {abs(z)}.'
        if isinstance(theta, StepFunction):
            if not theta.is_nondecreasing():
                raise InvalidKernelException('The angle function theta should be nondecreasing.')
            _check_angles(theta.values)
        elif theta is not None and np.isscalar(theta):
            _check_angles([theta])
        self.z = complex(z)
        self.theta = theta

    def angles(self, ts):
        if self.theta is None:
            return ts
        if np.isscalar(self.theta):
            return np.full(len(ts), float(self.theta))
        return np.asarray(self.theta(ts), dtype=float)

    def _evaluate(self, ts):
        return herglotz_kernel(self.z, self.angles(ts))

    def breakpoints(self):
        if isinstance(self.theta, StepFunction):
            return self.theta.jump_points.copy()
        return np.array([])


class TabulatedKernel(KernelABC):
    """Piecewise-linear interpolant of complex samples (ts[i], values[i])."""
    def __init__(self, ts, values, **kwds):
        super(TabulatedKernel, self).__init__(**kwds)
        self.ts = np.asarray(ts, dtype=float).ravel()
        self.values = np.asarray(values, dtype=complex).ravel()
        assert len(self.ts) == len(self.values) and len(self.ts) >= 2, 'Expected at least two matching samples.'
        assert np.all(np.diff(self.ts) > 0), 'The sample abscissas should be strictly increasing.'

    def _evaluate(self, ts):
        return np.interp(ts, self.ts, self.values.real) + 1j * np.interp(ts, self.ts, self.values.imag)


class CallableKernel(KernelABC):
    """Wraps a callable t -> f(t).

    Args:
        fn: A callable. If vectorized, it receives a 1-d array of points.
        breakpoints: Optional discontinuity points. Default: ().
        vectorized: Optional boolean indicating if fn accepts arrays. Default: True.
    """
    def __init__(self, fn, breakpoints=(), vectorized=True, **kwds):
        super(CallableKernel, self).__init__(**kwds)
        self.fn = fn
        self.vectorized = vectorized
        self._breakpoints = np.asarray(breakpoints, dtype=float).ravel()

    def _evaluate(self, ts):
        if self.vectorized:
            return np.broadcast_to(self.fn(ts), ts.shape)
        return np.array([self.fn(t) for t in ts], dtype=complex)

    def breakpoints(self):
        return self._breakpoints.copy()


class InvalidKernelException(Exception):
    pass
