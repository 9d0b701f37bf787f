import numpy as np


class TaggedPartition:
    """A subdivision a = t_0 <= t_1 <= ... <= t_m = b of an interval together with one tag per cell.

    Args:
        points: An array-like of nondecreasing reals (at least one point).
        tags: Optional array-like with one real per cell, each tag inside its cell [t_{i-1}, t_i]. If not provided,
            the cell midpoints are used. Default: None.
    """
    def __init__(self, points, tags=None):
        points = np.asarray(points, dtype=float).ravel()
        assert len(points) >= 1, 'A partition needs at least one point.'
        assert np.all(np.diff(points) >= 0), 'The partition points should be nondecreasing.'
        self.points = points

        if tags is None:
            tags = (points[:-1] + points[1:]) / 2
        tags = np.asarray(tags, dtype=float).ravel()
        if len(tags) != len(points) - 1:
            raise TagOutsideCellException(f'Expected {len(points) - 1} tags, found {len(tags)}.')

        outside = np.flatnonzero((tags < points[:-1]) | (tags > points[1:]))
        if len(outside) > 0:
            i = outside[0]
            raise TagOutsideCellException(f'Tag {tags[i]} lies outside its cell [{points[i]}, {points[i + 1]}].')
        self.tags = tags

    @property
    def a(self):
        return self.points[0]

    @property
    def b(self):
        return self.points[-1]

    @property
    def n_cells(self):
        return len(self.points) - 1

    @property
    def deltas(self):
        return np.diff(self.points)

    @property
    def mesh(self):
        """Largest cell length, 0 for the degenerate single-point partition."""
        if self.n_cells == 0:
            return 0.0
        return float(np.max(self.deltas))

    def cells(self):
        """Yields (left, right, tag) for every cell."""
        for left, right, tag in zip(self.points[:-1], self.points[1:], self.tags):
            yield left, right, tag

    def refines(self, other):
        """Checks if every point of the other partition is also a point of this one."""
        return bool(np.all(np.isin(other.points, self.points)))

    @staticmethod
    def uniform(a, b, m):
        assert m >= 1, f'The number of cells ({m}) should be >= 1.'
        return TaggedPartition(np.linspace(a, b, m + 1))

    @staticmethod
    def dyadic(forced, level):
        """Splits every segment between consecutive forced points into 2^level equal cells, with midpoint tags."""
        forced = np.asarray(forced, dtype=float)
        assert level >= 0, f'The refinement level ({level}) should be >= 0.'
        return TaggedPartition(dyadic_points(forced, level))

    @staticmethod
    def random(a, b, m, rng, forced=None):
        """Random partition with m jittered cells (mesh at most 2(b - a)/m) and uniformly drawn tags.

        Args:
            a: Left end point.
            b: Right end point.
            m: Number of jittered cells before adding forced points.
            rng: A numpy Generator.
            forced: Optional array-like of points that must belong to the partition. Default: None.
        """
        assert m >= 1, f'The number of cells ({m}) should be >= 1.'
        inner = a + (b - a) * (np.arange(1, m) + rng.uniform(-0.45, 0.45, m - 1)) / m
        points = np.concatenate([[a], inner, [b]])
        if forced is not None:
            points = np.union1d(points, np.asarray(forced, dtype=float))
        points = np.sort(points)
        tags = points[:-1] + rng.uniform(0, 1, len(points) - 1) * np.diff(points)
        return TaggedPartition(points, np.clip(tags, points[:-1], points[1:]))


def dyadic_points(forced, level):
    """Points obtained by splitting each segment of `forced` into 2^level equal cells."""
    forced = np.asarray(forced, dtype=float)
    if len(forced) == 1:
        return forced.copy()
    steps = np.arange(2 ** level) / 2 ** level
    lefts, widths = forced[:-1], np.diff(forced)
    points = (lefts[:, None] + widths[:, None] * steps[None, :]).ravel()
    return np.concatenate([points, forced[-1:]])


class TagOutsideCellException(Exception):
    pass
