import numpy as np

from MIntPy.logging_mixin import LoggingMixin

SECTOR_OFFSET = 0.3


def det_many(A, zs):
    """det A(z) for every point of zs, using the determinant callable of A when available."""
    zs = np.asarray(zs, dtype=complex).ravel()
    if A.det_fn is not None:
        return np.array([A.det(z) for z in zs], dtype=complex)
    return np.linalg.det(A.evaluate_many(zs))


class DetZeroFinder(LoggingMixin):
    """Locates the zeros of det A in the disk |z| <= search_radius.

    The disk is covered by a quadtree of polar boxes {r0 <= |z| <= r1, phi0 <= arg z <= phi1}; the central box is a
    full disk. The number of zeros inside a box is its winding number, computed on a boundary path refined until
    consecutive phase increments stay below pi/4. Boxes without zeros are dropped, the others are split in four
    until they are small enough for Newton's method (with the winding number as multiplicity) to converge inside.

    Args:
        search_radius: Optional radius of the searched disk, < 1. Default: 0.95.
        grid_density: Optional number of initial samples per box edge. Default: 16.
        newton_box: Optional box diameter below which Newton's method is attempted. Default: 0.05.
        min_box: Optional box diameter below which a box is accepted at its centre. Default: 1e-7.
        max_boxes: Optional budget of examined boxes. Default: 4096.
        det_tol: Optional bound on |det A| at accepted zeros. Default: 1e-8.
        boundary_margin: Optional distance to the unit circle below which zeros are flagged unreliable.
            Default: 1e-2.
        verbose: Optional boolean indicating if the search should be logged. Default: False.
    """
    def __init__(self, **kwds):
        self.search_radius = kwds.get('search_radius', 0.95)
        self.grid_density = kwds.get('grid_density', 16)
        self.newton_box = kwds.get('newton_box', 0.05)
        self.min_box = kwds.get('min_box', 1e-7)
        self.max_boxes = kwds.get('max_boxes', 4096)
        self.det_tol = kwds.get('det_tol', 1e-8)
        self.boundary_margin = kwds.get('boundary_margin', 1e-2)
        self.max_path_points = kwds.get('max_path_points', 2 ** 15)
        assert 0 < self.search_radius < 1, f'The search radius ({self.search_radius}) should lie in (0, 1).'
        assert self.grid_density >= 4, f'The grid density ({self.grid_density}) should be >= 4.'
        self._setup_logging(**kwds)
        self.unreliable = []

    def find(self, A):
        """Zeros of det A, each repeated according to its multiplicity."""
        self.unreliable = []
        found, n_boxes = [], 0
        stack = [(0.0, self.search_radius, 0.0, 2 * np.pi)]
        while stack:
            box = stack.pop()
            n_boxes += 1
            if n_boxes > self.max_boxes:
                raise ZeroSearchBudgetException(f'More than {self.max_boxes} boxes examined for "{A.name}" '
                                                f'({len(found)} zeros found so far).')
            winding = self._winding_number(A, box)
            if winding <= 0:
                continue
            diameter = self._diameter(box)
            if diameter <= self.newton_box:
                zero = self._newton(A, self._center(box), winding, diameter)
                if zero is not None and self._contains(box, zero):
                    found.extend([zero] * winding)
                    continue
                if diameter <= self.min_box:
                    found.extend([self._center(box)] * winding)
                    continue
            stack.extend(self._split(box))

        for zero in found:
            if 1 - abs(zero) < self.boundary_margin:
                self.unreliable.append(zero)
        if len(self.unreliable) > 0:
            self._warn(f'[{A.name}] zeros close to the unit circle are unreliable: {self.unreliable}.')
        self._info(f'[{A.name}] {len(found)} zeros found after examining {n_boxes} boxes.')
        return sorted(found, key=lambda z: (abs(z), np.angle(z)))

    @staticmethod
    def _center(box):
        r0, r1, phi0, phi1 = box
        if r0 == 0 and phi1 - phi0 >= 2 * np.pi:
            return 0j
        return (r0 + r1) / 2 * np.exp(1j * (phi0 + phi1) / 2)

    @staticmethod
    def _contains(box, z, slack=1e-10):
        r0, r1, phi0, phi1 = box
        if not r0 - slack <= abs(z) <= r1 + slack:
            return False
        if r0 == 0 and phi1 - phi0 >= 2 * np.pi:
            return True
        offset = (np.angle(z) - phi0) % (2 * np.pi)
        return offset <= phi1 - phi0 + slack or offset >= 2 * np.pi - slack

    @staticmethod
    def _diameter(box):
        r0, r1, phi0, phi1 = box
        if r0 == 0 and phi1 - phi0 >= 2 * np.pi:
            return 2 * r1
        return max(r1 - r0, 2 * r1 * np.sin(min(phi1 - phi0, np.pi) / 2)) + (r1 - r0)

    @staticmethod
    def _split(box):
        r0, r1, phi0, phi1 = box
        if r0 == 0 and phi1 - phi0 >= 2 * np.pi:
            quarter, offset = np.pi / 2, SECTOR_OFFSET
            return [(0.0, r1 / 2, 0.0, 2 * np.pi)] + [(r1 / 2, r1, offset + k * quarter, offset + (k + 1) * quarter)
                                                    for k in range(4)]
        rm, phim = (r0 + r1) / 2, (phi0 + phi1) / 2
        return [(r0, rm, phi0, phim), (r0, rm, phim, phi1), (rm, r1, phi0, phim), (rm, r1, phim, phi1)]

    def _boundary(self, box):
        """Positively oriented closed boundary path of a box."""
        r0, r1, phi0, phi1 = box
        m = self.grid_density
        if r0 == 0 and phi1 - phi0 >= 2 * np.pi:
            return r1 * np.exp(1j * np.linspace(0, 2 * np.pi, 4 * m + 1))
        t = np.linspace(0, 1, m + 1)
        outer = r1 * np.exp(1j * (phi0 + (phi1 - phi0) * t))
        down = (r1 + (r0 - r1) * t) * np.exp(1j * phi1)
        inner = r0 * np.exp(1j * (phi1 + (phi0 - phi1) * t))
        up = (r0 + (r1 - r0) * t) * np.exp(1j * phi0)
        return np.concatenate([outer, down[1:], inner[1:], up[1:]])

    def _winding_number(self, A, box):
        path = self._boundary(box)
        values = det_many(A, path)
        while True:
            if np.any(values == 0):
                raise ZeroSearchBudgetException(f'det "{A.name}" vanishes on the boundary of the box {box}.')
            steps = np.angle(values[1:] / values[:-1])
            coarse = np.flatnonzero(np.abs(steps) > np.pi / 4)
            if len(coarse) == 0:
                return int(np.rint(np.sum(steps) / (2 * np.pi)))
            if len(path) + len(coarse) > self.max_path_points:
                raise ZeroSearchBudgetException(f'The boundary path of the box {box} needs more than '
                                                f'{self.max_path_points} points for "{A.name}".')
            midpoints = (path[coarse] + path[coarse + 1]) / 2
            path = np.insert(path, coarse + 1, midpoints)
            values = np.insert(values, coarse + 1, det_many(A, midpoints))

    def _newton(self, A, start, multiplicity, diameter, max_iter=60):
        """Newton's method on det A with the given multiplicity; None when it leaves the box or does not converge."""
        z = start
        h = max(1e-4 * diameter, 1e-9)
        offsets = h * np.array([1, 1j, -1, -1j])
        for _ in range(max_iter):
            values = det_many(A, np.concatenate([[z], z + offsets]))
            if values[0] == 0:
                break
            derivative = np.sum(values[1:] * np.conj(offsets)) / (4 * h * h)
            if derivative == 0:
                return None
            step = multiplicity * values[0] / derivative
            z = z - step
            if abs(z - start) > diameter or abs(z) >= 1:
                return None
            if abs(step) <= 1e-15 * max(1.0, abs(z)):
                break
        if abs(det_many(A, [z])[0]) <= self.det_tol:
            return complex(z)
        return None


def find_det_zeros(A, search_radius=0.95, grid_density=16, **kwds):
    """Zeros of det A in |z| <= search_radius (see :obj:`MIntPy.Blaschke.DetZeroFinder`)."""
    return DetZeroFinder(search_radius=search_radius, grid_density=grid_density, **kwds).find(A)


class ZeroSearchBudgetException(Exception):
    pass
