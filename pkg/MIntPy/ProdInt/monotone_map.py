import numpy as np


class MonotoneMap:
    """Strictly increasing, piecewise-linear map phi: [a, b] -> [alpha, beta] with jump discontinuities allowed.

    Piece i maps [knots[i], knots[i + 1]] linearly from start_values[i] to end_values[i]. A jump at knots[i + 1]
    happens when end_values[i] < start_values[i + 1]. The map is right-continuous at its jumps.

    Args:
        knots: Strictly increasing reals a = knots[0] < ... < knots[k] = b.
        start_values: Value at the left end of every piece.
        end_values: Value at the right end of every piece.
    """
    def __init__(self, knots, start_values, end_values, name='phi'):
        self.knots = np.asarray(knots, dtype=float).ravel()
        self.start_values = np.asarray(start_values, dtype=float).ravel()
        self.end_values = np.asarray(end_values, dtype=float).ravel()
        self.name = name

        n_pieces = len(self.knots) - 1
        assert n_pieces >= 1, 'A monotone map needs at least two knots.'
        assert len(self.start_values) == n_pieces and len(self.end_values) == n_pieces, \
            f'Expected {n_pieces} start and end values.'
        if np.any(np.diff(self.knots) <= 0) or np.any(self.end_values <= self.start_values) or \
                np.any(self.start_values[1:] < self.end_values[:-1]):
            raise NotStrictlyIncreasingException(f'The map "{name}" is not strictly increasing.')

    @staticmethod
    def linear(a, b, alpha, beta, name='phi'):
        return MonotoneMap([a, b], [alpha], [beta], name=name)

    @staticmethod
    def identity(a, b):
        return MonotoneMap.linear(a, b, a, b, name='id')

    @property
    def domain(self):
        return self.knots[0], self.knots[-1]

    @property
    def image(self):
        return self.start_values[0], self.end_values[-1]

    def __call__(self, ts):
        ts = np.asarray(ts, dtype=float)
        piece = np.clip(np.searchsorted(self.knots, ts, side='right') - 1, 0, len(self.knots) - 2)
        left, right = self.knots[piece], self.knots[piece + 1]
        frac = (ts - left) / (right - left)
        return self.start_values[piece] + frac * (self.end_values[piece] - self.start_values[piece])

    def jump_knots(self):
        """Knots where the map jumps."""
        return self.knots[1:-1][self.start_values[1:] > self.end_values[:-1]]

    def generalized_inverse(self, ss):
        """phi^dagger(s) = inf{t : phi(t) >= s}; continuous, constant on the gaps left by the jumps of phi."""
        xp = np.column_stack([self.start_values, self.end_values]).ravel()
        fp = np.column_stack([self.knots[:-1], self.knots[1:]]).ravel()
        return np.interp(np.asarray(ss, dtype=float), xp, fp)


class NotStrictlyIncreasingException(Exception):
    pass
