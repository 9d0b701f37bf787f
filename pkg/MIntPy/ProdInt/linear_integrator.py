import numpy as np

from MIntPy.MatCore import stack_norms
from .integrator_abc import IntegratorABC
from .integrator_abc import InvalidIntegratorException
from .quadrature import interval_integrals


class LinearIntegrator(IntegratorABC):
    """Continuous integrator interpolating node values linearly: E(t_k) = values[k].

    Variations and Stieltjes integrals are computed segment by segment, since every increment inside a segment is a
    multiple of the segment slope.

    Args:
        nodes: Strictly increasing reals t_0 < ... < t_m (m >= 1).
        values: Array-like of shape (m + 1, n, n).
        increasing: Optional boolean requiring positive successive differences. Default: False.
        hermitian: Optional boolean requiring Hermitian node values. Default: True.
    """
    def __init__(self, nodes, values, **kwds):
        nodes = np.asarray(nodes, dtype=float).ravel()
        values = np.asarray(values, dtype=complex)
        if len(nodes) < 2 or values.shape[0] != len(nodes) or values.ndim != 3:
            raise InvalidIntegratorException(f'Expected at least two nodes with matching (n, n) values, found '
                                             f'{len(nodes)} nodes and values of shape {values.shape}.')
        if np.any(np.diff(nodes) <= 0):
            raise InvalidIntegratorException('The nodes should be strictly increasing.')
        super(LinearIntegrator, self).__init__(nodes[0], nodes[-1], values.shape[-1], **kwds)

        self.nodes = nodes
        self.values = values
        self._validate_node_values(values, increasing=self.increasing)
        self.slopes = np.diff(values, axis=0) / np.diff(nodes)[:, None, None]
        self.slope_norms = stack_norms(self.slopes)

    @staticmethod
    def from_slope(a, b, slope, base=None, **kwds):
        """The integrator E(t) = base + (t - a) * slope on [a, b]."""
        slope = np.asarray(slope, dtype=complex)
        base = np.zeros_like(slope) if base is None else np.asarray(base, dtype=complex)
        return LinearIntegrator([a, b], [base, base + (b - a) * slope], **kwds)

    def _piece_index(self, ts):
        return np.clip(np.searchsorted(self.nodes, ts, side='right') - 1, 0, len(self.nodes) - 2)

    def _continuous_values(self, ts):
        ts = np.asarray(ts, dtype=float)
        piece = self._piece_index(ts)
        return self.values[piece] + (ts - self.nodes[piece])[:, None, None] * self.slopes[piece]

    def breakpoints(self):
        return self.nodes[1:-1].copy()

    def derivative(self, ts):
        return self.slopes[self._piece_index(np.asarray(ts, dtype=float))]

    def _pieces(self, s, t, extra):
        """Sub-intervals of [s, t] free of breakpoints, restricted to segments with a nonzero slope."""
        points = self._segments(s, t, extra=extra)
        piece = self._piece_index((points[:-1] + points[1:]) / 2)
        active = self.slope_norms[piece] > 0
        return points[:-1][active], points[1:][active], piece[active]

    def stieltjes(self, f, s=None, t=None, **kwds):
        s = self.a if s is None else s
        t = self.b if t is None else t
        if s == t:
            return np.zeros((self.dim, self.dim), dtype=complex)
        lefts, rights, piece = self._pieces(s, t, f.breakpoints())
        if len(piece) == 0:
            return np.zeros((self.dim, self.dim), dtype=complex)
        return np.tensordot(interval_integrals(f, lefts, rights), self.slopes[piece], axes=(0, 0))

    def variation_integral(self, g, s=None, t=None, **kwds):
        s = self.a if s is None else s
        t = self.b if t is None else t
        if s == t:
            return 0.0
        extra = g.breakpoints() if hasattr(g, 'breakpoints') else ()
        lefts, rights, piece = self._pieces(s, t, extra)
        if len(piece) == 0:
            return 0.0
        integrals = interval_integrals(lambda x: np.real(g(x)), lefts, rights)
        return float(np.sum(np.real(integrals) * self.slope_norms[piece]))
