import numpy as np

from MIntPy.MatCore import as_cmat
from MIntPy.MatCore import is_unitary
from .integrator_abc import IntegratorABC
from .integrator_abc import InvalidIntegratorException


class ConjugatedIntegrator(IntegratorABC):
    """The integrator t -> U E(t) U^{-1} for an invertible constant U."""
    def __init__(self, base, u, **kwds):
        self.u = as_cmat(u)
        assert self.u.shape[0] == base.dim, f'Dimension mismatch: {self.u.shape[0]} != {base.dim}.'
        self.u_inv = np.linalg.inv(self.u)
        unitary = is_unitary(self.u)
        kwds.setdefault('increasing', base.increasing and unitary)
        kwds.setdefault('hermitian', base.hermitian and unitary)
        kwds.setdefault('name', f'U({base.name})U^-1')
        super(ConjugatedIntegrator, self).__init__(base.a, base.b, base.dim, **kwds)
        self.base = base

    def _conj(self, stack):
        return self.u @ stack @ self.u_inv

    def _continuous_values(self, ts):
        return self._conj(self.base._continuous_values(ts))

    def continuous_increments(self, points):
        return self._conj(self.base.continuous_increments(points))

    def jumps(self):
        locs, mats = self.base.jumps()
        return locs, self._conj(mats)

    def breakpoints(self):
        return self.base.breakpoints()

    def derivative(self, ts):
        return self._conj(self.base.derivative(ts))

    def stieltjes(self, f, s=None, t=None, **kwds):
        return self._conj(self.base.stieltjes(f, s, t, **kwds))


class ComposedIntegrator(IntegratorABC):
    """The integrator s -> E(phi^dagger(s)) on the image of a MonotoneMap phi, for a continuous integrator E.

    The jumps of phi become intervals where the composed integrator is constant.
    """
    def __init__(self, base, phi, **kwds):
        if len(base.jumps()[0]) > 0:
            raise InvalidIntegratorException('Change of variables needs a continuous integrator.')
        lo, hi = phi.domain
        if abs(lo - base.a) > 1e-12 or abs(hi - base.b) > 1e-12:
            raise InvalidIntegratorException(f'The map domain [{lo}, {hi}] differs from [{base.a}, {base.b}].')
        alpha, beta = phi.image
        kwds.setdefault('increasing', base.increasing)
        kwds.setdefault('hermitian', base.hermitian)
        kwds.setdefault('name', f'{base.name}o{phi.name}^dagger')
        super(ComposedIntegrator, self).__init__(alpha, beta, base.dim, **kwds)
        self.base = base
        self.phi = phi

    def _continuous_values(self, ss):
        return self.base._continuous_values(self.phi.generalized_inverse(ss))

    def continuous_increments(self, points):
        return self.base.continuous_increments(self.phi.generalized_inverse(points))

    def breakpoints(self):
        images = self.phi(self.base.breakpoints()) if len(self.base.breakpoints()) > 0 else np.array([])
        candidates = np.concatenate([self.phi.start_values, self.phi.end_values, images])
        return np.unique(candidates[(candidates > self.a) & (candidates < self.b)])
