import numpy as np

from MIntPy.MatCore import stack_norms
from .integrator_abc import IntegratorABC
from .integrator_abc import InvalidIntegratorException


class StepIntegrator(IntegratorABC):
    """Piecewise-constant integrator: E(t) = base + sum of the jumps J_j located at t_j <= t.

    Args:
        a: Left end point of the domain.
        b: Right end point of the domain.
        locations: Strictly increasing jump locations inside (a, b].
        jumps: Array-like of shape (m, n, n) with the jump matrices.
        base: Optional value E(a). Default: the zero matrix.
        increasing: Optional boolean requiring every jump to be positive. Default: False.
    """
    def __init__(self, a, b, locations, jumps, base=None, **kwds):
        jumps = np.asarray(jumps, dtype=complex)
        if jumps.ndim == 2:
            jumps = jumps[None]
        locations = np.asarray(locations, dtype=float).ravel()
        dim = jumps.shape[-1] if jumps.size > 0 else np.asarray(base).shape[-1]
        super(StepIntegrator, self).__init__(a, b, dim, **kwds)

        if len(locations) != len(jumps):
            raise InvalidIntegratorException(f'Found {len(locations)} jump locations and {len(jumps)} jump matrices.')
        if np.any(np.diff(locations) <= 0):
            raise InvalidIntegratorException('The jump locations should be strictly increasing.')
        if len(locations) > 0 and (locations[0] <= self.a or locations[-1] > self.b):
            raise InvalidIntegratorException(f'Jump locations should lie in ({self.a}, {self.b}].')

        self.locations = locations
        self.jump_matrices = jumps
        self.base = np.zeros((dim, dim), dtype=complex) if base is None else np.asarray(base, dtype=complex)
        self._validate_node_values(np.concatenate([self.base[None], self.jump_matrices]), increasing=False)
        if self.increasing:
            self._validate_node_values(np.cumsum(np.concatenate([self.base[None], self.jump_matrices]), axis=0),
                                       increasing=True)

    def _continuous_values(self, ts):
        return np.broadcast_to(self.base, (len(ts), self.dim, self.dim)).copy()

    def continuous_increments(self, points):
        return np.zeros((max(len(points) - 1, 0), self.dim, self.dim), dtype=complex)

    def jumps(self):
        return self.locations.copy(), self.jump_matrices.copy()

    def stieltjes(self, f, s=None, t=None, **kwds):
        s = self.a if s is None else s
        t = self.b if t is None else t
        locs, mats = self.jumps_in(s, t)
        if len(locs) == 0:
            return np.zeros((self.dim, self.dim), dtype=complex)
        return np.tensordot(f(locs), mats, axes=(0, 0))

    def variation_integral(self, g, s=None, t=None, **kwds):
        s = self.a if s is None else s
        t = self.b if t is None else t
        locs, mats = self.jumps_in(s, t)
        if len(locs) == 0:
            return 0.0
        return float(np.sum(np.real(g(locs)) * stack_norms(mats)))
