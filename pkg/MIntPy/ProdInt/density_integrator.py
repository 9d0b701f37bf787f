import numpy as np

from MIntPy.MatCore import is_hermitian
from MIntPy.MatCore import min_eigenvalue
from .integrator_abc import IntegratorABC
from .integrator_abc import InvalidIntegratorException
from .quadrature import gauss_legendre_cells
from .quadrature import interval_integrals
from .quadrature import matrix_quad
from .quadrature import scalar_quad


class DensityIntegrator(IntegratorABC):
    """Absolutely continuous integrator E(t) = int_a^t M(s) ds.

    Cell increments use a 3-node Gauss-Legendre rule per cell; point values use adaptive composite Gauss-Legendre
    rules; Stieltjes integrals and variations use scipy's adaptive quadrature, so that the three routes are computed
    independently.

    Args:
        density: Callable t -> M(t), an n x n matrix (or, if vectorized, a 1-d array -> (k, n, n) array).
        a: Left end point of the domain.
        b: Right end point of the domain.
        breakpoints: Optional points where M is not smooth. Default: ().
        vectorized: Optional boolean indicating if density accepts arrays. Default: False.
        lower_bound: Optional real; when given, the least eigenvalue of M is checked against it at samples.
            Default: None.
        hermitian: Optional boolean requiring M(t) Hermitian at samples. Default: True.
        increasing: Optional boolean requiring M(t) >= 0 at samples. Default: False.
    """
    def __init__(self, density, a, b, breakpoints=(), vectorized=False, lower_bound=None, **kwds):
        self.density = density
        self.vectorized = vectorized
        sample = np.asarray(self._density_stack(np.array([a]))[0])
        if sample.ndim != 2 or sample.shape[0] != sample.shape[1]:
            raise InvalidIntegratorException(f'The density should return square matrices, found shape {sample.shape}.')
        super(DensityIntegrator, self).__init__(a, b, sample.shape[0], **kwds)
        bps = np.asarray(breakpoints, dtype=float).ravel()
        self._breakpoints = np.unique(bps[(bps > self.a) & (bps < self.b)])
        self.lower_bound = lower_bound
        self._validate_samples()

    def _density_stack(self, ts):
        ts = np.asarray(ts, dtype=float).ravel()
        if self.vectorized:
            values = np.asarray(self.density(ts), dtype=complex)
            return values.reshape(len(ts), values.shape[-2], values.shape[-1])
        return np.array([np.asarray(self.density(t), dtype=complex) for t in ts])

    def _validate_samples(self, n_samples=9):
        ts = np.linspace(self.a, self.b, n_samples)
        for m in self._density_stack(ts):
            if self.hermitian and not is_hermitian(m, tol=1e-10 * max(1.0, float(np.max(np.abs(m))))):
                raise InvalidIntegratorException(f'The density of "{self.name}" is not Hermitian.')
            if self.increasing and min_eigenvalue(m) < -1e-9:
                raise InvalidIntegratorException(f'The density of "{self.name}" is not positive.')
            if self.lower_bound is not None and min_eigenvalue(m) < self.lower_bound - 1e-9:
                raise InvalidIntegratorException(f'The density of "{self.name}" is below {self.lower_bound}.')

    def breakpoints(self):
        return self._breakpoints.copy()

    def derivative(self, ts):
        return self._density_stack(ts)

    def continuous_increments(self, points):
        points = np.asarray(points, dtype=float)
        if len(points) < 2:
            return np.zeros((0, self.dim, self.dim), dtype=complex)
        return gauss_legendre_cells(self._density_stack, points[:-1], points[1:], order=3)

    def _continuous_values(self, ts):
        ts = np.asarray(ts, dtype=float)
        grid = np.union1d(np.union1d([self.a], self._breakpoints), ts)
        pieces = interval_integrals(self._density_stack, grid[:-1], grid[1:])
        cumulative = np.concatenate([np.zeros((1, self.dim, self.dim), dtype=complex),
                                     np.cumsum(pieces, axis=0)]) if len(pieces) else \
            np.zeros((1, self.dim, self.dim), dtype=complex)
        return cumulative[np.searchsorted(grid, ts)]

    def stieltjes(self, f, s=None, t=None, **kwds):
        s = self.a if s is None else s
        t = self.b if t is None else t
        points = np.union1d(self._breakpoints, f.breakpoints())
        return matrix_quad(lambda x: f(x) * self._density_stack([x])[0], s, t, points=points)

    def variation_integral(self, g, s=None, t=None, **kwds):
        s = self.a if s is None else s
        t = self.b if t is None else t
        extra = g.breakpoints() if hasattr(g, 'breakpoints') else ()
        points = np.union1d(self._breakpoints, extra)
        return float(np.real(scalar_quad(
            lambda x: np.real(g(np.array([x]))[0]) * np.linalg.norm(self._density_stack([x])[0], 2), s, t,
            points=points, epsabs=1e-11, epsrel=1e-10)))
