from abc import ABC
from abc import abstractmethod
import numpy as np

from MIntPy.MatCore import hermitian_part
from MIntPy.MatCore import adjoint
from MIntPy.MatCore import stack_norms
from .partition import dyadic_points


class IntegratorABC(ABC):
    """Base class of the matrix-valued integrators E: [a, b] -> M_n of bounded variation.

    An integrator is split into a continuous part, given by `_continuous_values`, and a finite list of jumps located
    in (a, b]. Its value at t is the continuous part plus the sum of the jumps located at points <= t, so that E is
    right-continuous.

    Args:
        a: Left end point of the domain.
        b: Right end point of the domain.
        dim: An integer representing the matrix dimension.
        increasing: Optional boolean declaring E Hermitian with positive increments. Default: False.
        hermitian: Optional boolean declaring E Hermitian-valued. Default: True.
        name: Optional string used in logs. Default: the class name.
    """
    def __init__(self, a, b, dim, **kwds):
        assert a <= b, f'The left end point ({a}) should be <= the right end point ({b}).'
        assert dim >= 1, f'The matrix dimension ({dim}) should be >= 1.'
        self.a = float(a)
        self.b = float(b)
        self.dim = dim
        self.increasing = kwds.get('increasing', False)
        self.hermitian = kwds.get('hermitian', True) or self.increasing
        self.name = kwds.get('name', self.__class__.__name__)

    @property
    def domain(self):
        return self.a, self.b

    @abstractmethod
    def _continuous_values(self, ts):
        """Continuous part evaluated on a 1-d array of points, shape (k, n, n)."""
        pass

    def jumps(self):
        """Jump locations (in (a, b]) and jump matrices."""
        return np.array([]), np.zeros((0, self.dim, self.dim), dtype=complex)

    def breakpoints(self):
        """Points where the continuous part is not smooth; always used as partition points."""
        return np.array([])

    def derivative(self, ts):
        raise InvalidIntegratorException(f'The integrator "{self.name}" has no density.')

    def _check_domain(self, ts):
        ts = np.asarray(ts, dtype=float)
        slack = 1e-12 * max(1.0, abs(self.a), abs(self.b))
        assert np.all((ts >= self.a - slack) & (ts <= self.b + slack)), \
            f'Points outside the domain [{self.a}, {self.b}] of "{self.name}".'
        return np.clip(ts, self.a, self.b)

    def value(self, ts):
        """E(t) for a scalar t (n x n matrix) or an array of points (stack of matrices)."""
        scalar = np.isscalar(ts)
        ts = np.atleast_1d(self._check_domain(ts))
        values = np.array(self._continuous_values(ts), dtype=complex)
        locs, mats = self.jumps()
        if len(locs) > 0:
            active = (locs[None, :] <= ts[:, None]).astype(float)
            values += np.tensordot(active, mats, axes=(1, 0))
        return values[0] if scalar else values

    def continuous_increments(self, points):
        """Increments of the continuous part over the consecutive cells of the given points."""
        return np.diff(self._continuous_values(np.asarray(points, dtype=float)), axis=0)

    def jumps_in(self, s, t):
        """Jumps located in the half-open interval (s, t]."""
        locs, mats = self.jumps()
        mask = (locs > s) & (locs <= t)
        return locs[mask], mats[mask]

    def trace(self, ts):
        return np.trace(self.value(ts), axis1=-2, axis2=-1)

    def _segments(self, s, t, extra=()):
        """Sorted union of s, t and every breakpoint strictly between them."""
        candidates = np.concatenate([self.breakpoints(), self.jumps()[0], np.asarray(extra, dtype=float)])
        return np.union1d([s, t], candidates[(candidates > s) & (candidates < t)])

    def stieltjes(self, f, s=None, t=None, rtol=1e-12, max_level=16):
        """Additive Riemann-Stieltjes integral of the scalar kernel f against E over [s, t].

        This generic version uses midpoint sums over dyadic refinements with Richardson extrapolation; subclasses
        override it with exact or quadrature-based forms.
        """
        s = self.a if s is None else s
        t = self.b if t is None else t
        total = np.zeros((self.dim, self.dim), dtype=complex)
        locs, mats = self.jumps_in(s, t)
        if len(locs) > 0:
            total += np.tensordot(f(locs), mats, axes=(0, 0))
        if s == t:
            return total

        forced = self._segments(s, t, extra=f.breakpoints())
        return total + self._richardson(lambda pts: np.tensordot(f((pts[:-1] + pts[1:]) / 2),
                                                                 self.continuous_increments(pts), axes=(0, 0)),
                                        forced, rtol, max_level)

    def variation_integral(self, g, s=None, t=None, rtol=1e-12, max_level=16):
        """Integral of a nonnegative scalar function g against the total variation |E| over [s, t]."""
        s = self.a if s is None else s
        t = self.b if t is None else t
        locs, mats = self.jumps_in(s, t)
        total = float(np.sum(np.real(g(locs)) * stack_norms(mats))) if len(locs) > 0 else 0.0
        if s == t:
            return total

        extra = g.breakpoints() if hasattr(g, 'breakpoints') else ()
        forced = self._segments(s, t, extra=extra)
        return total + float(np.real(self._richardson(
            lambda pts: np.sum(np.real(g((pts[:-1] + pts[1:]) / 2)) * stack_norms(self.continuous_increments(pts))),
            forced, rtol, max_level)))

    def variation(self, t):
        """Total variation |E|(t) of E over [a, t]."""
        t = float(self._check_domain(t))
        return self.variation_integral(lambda ts: np.ones(np.shape(ts)), self.a, t)

    @staticmethod
    def _richardson(level_sum, forced, rtol, max_level):
        prev_sum, prev_extrapolated = None, None
        for level in range(2, max_level + 1):
            current = level_sum(dyadic_points(forced, level))
            if prev_sum is not None:
                extrapolated = (4 * current - prev_sum) / 3
                if prev_extrapolated is not None and \
                        np.max(np.abs(extrapolated - prev_extrapolated)) <= rtol * max(1.0, np.max(np.abs(extrapolated))):
                    return extrapolated
                prev_extrapolated = extrapolated
            prev_sum = current
        return prev_extrapolated

    def is_increasing_on(self, n_samples=257, tol=1e-12):
        """Sampled check that every increment (and every jump) is Hermitian and positive within tol."""
        points = np.union1d(np.linspace(self.a, self.b, n_samples), self.breakpoints())
        increments = self.continuous_increments(points)
        stack = np.concatenate([increments, self.jumps()[1]])
        if len(stack) == 0:
            return True
        scales = np.maximum(1.0, np.max(np.abs(stack), axis=(-2, -1)))
        if np.any(np.max(np.abs(stack - adjoint(stack)), axis=(-2, -1)) > tol * scales):
            return False
        return bool(np.all(np.linalg.eigvalsh(hermitian_part(stack))[:, 0] >= -tol * scales))

    def lipschitz_constant(self, n_samples=1025):
        """Sampled Lipschitz constant max ||E(t) - E(s)|| / |t - s| over a uniform grid (inf with jumps)."""
        if len(self.jumps()[0]) > 0:
            return np.inf
        if self.a == self.b:
            return 0.0
        points = np.union1d(np.linspace(self.a, self.b, n_samples), self.breakpoints())
        return float(np.max(stack_norms(self.continuous_increments(points)) / np.diff(points)))

    def conjugated(self, u):
        """The integrator t -> U E(t) U^{-1}."""
        from .derived_integrators import ConjugatedIntegrator
        return ConjugatedIntegrator(self, u)

    def _validate_node_values(self, values, increasing):
        """Shared validation of Hermitian node data (and of positive differences when increasing)."""
        if self.hermitian:
            residual = np.max(np.abs(values - np.conj(np.swapaxes(values, -1, -2)))) if len(values) else 0.0
            if residual > 1e-12 * max(1.0, float(np.max(np.abs(values)))):
                raise InvalidIntegratorException(f'The node values of "{self.name}" are not Hermitian.')
        if increasing and len(values) > 1:
            diffs = hermitian_part(np.diff(values, axis=0))
            scales = np.maximum(1.0, np.max(np.abs(diffs), axis=(-2, -1)))
            if np.any(np.linalg.eigvalsh(diffs)[:, 0] < -1e-12 * scales):
                raise InvalidIntegratorException(f'The integrator "{self.name}" is not increasing.')


class InvalidIntegratorException(Exception):
    pass
