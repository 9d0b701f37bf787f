import numpy as np

from MIntPy.MatCore import spectral_norm
from .linear_integrator import LinearIntegrator
from .integrator_abc import InvalidIntegratorException


def cantor_nodes(depth):
    """Breakpoints of the depth-d approximant of the Cantor function on [0, 1] and the values it takes there.

    The approximant is linear on each of the 2^d intervals of length 3^{-d} kept after d middle-third removals, and
    constant on the removed gaps. Its sup distance to the Cantor function is at most 2^{-d}.

    Returns:
        A tuple (nodes, values) of arrays with 2^{d + 1} entries.
    """
    assert depth >= 0, f'The Cantor depth ({depth}) should be >= 0.'
    j = np.arange(2 ** depth)
    lefts = np.zeros(len(j))
    for k in range(1, depth + 1):
        bit = (j >> (depth - k)) & 1
        lefts += 2 * bit / 3 ** k
    rights = lefts + 3.0 ** -depth
    nodes = np.column_stack([lefts, rights]).ravel()
    values = np.column_stack([j, j + 1]).ravel() / 2 ** depth
    return nodes, values


def cantor_function(ts, depth=20):
    """Cantor function approximant of the given depth, vectorized over ts in [0, 1]."""
    nodes, values = cantor_nodes(depth)
    return np.interp(ts, nodes, values)


class CantorIntegrator(LinearIntegrator):
    """Singular-continuous integrator E(t) = C_d((t - a)/(b - a)) * scale, with C_d the depth-d Cantor approximant.

    Args:
        scale: Positive semidefinite Hermitian matrix.
        a: Left end point. Default: 0.
        b: Right end point. Default: 2pi.
        depth: Depth of the Cantor approximant. Default: 14.
    """
    def __init__(self, scale, a=0.0, b=2 * np.pi, depth=14, **kwds):
        scale = np.atleast_2d(np.asarray(scale, dtype=complex))
        if not b > a:
            raise InvalidIntegratorException(f'The Cantor integrator needs a < b, found [{a}, {b}].')
        unit_nodes, unit_values = cantor_nodes(depth)
        kwds.setdefault('increasing', True)
        super(CantorIntegrator, self).__init__(a + (b - a) * unit_nodes, unit_values[:, None, None] * scale, **kwds)
        self.scale = scale
        self.depth = depth

    @property
    def sup_error(self):
        """Sup distance between this approximant and the limit singular integrator."""
        return 2.0 ** -self.depth * spectral_norm(self.scale)

    def variation(self, t):
        t = float(self._check_domain(t))
        return float(cantor_function((t - self.a) / (self.b - self.a), self.depth)) * spectral_norm(self.scale)
