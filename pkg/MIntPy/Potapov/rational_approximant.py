from joblib import dump
from joblib import load
import numpy as np
import pandas as pd

from MIntPy.logging_mixin import LoggingMixin
from MIntPy.MatCore import MatrixFunction
from MIntPy.MatCore import stack_norms
from MIntPy.ProdInt import ConvergenceTracker
from .cayley import CayleyData
from .cayley import SingularCayleyException
from .cayley import cayley_mvf
from .cayley import choose_rotation
from .herglotz import ExtractionBudgetException
from .herglotz import herglotz_extract_adaptive
from .herglotz import herglotz_offset


def default_radius(k):
    """Radius r_k = 1 - 2^{-k-1} of the disk on which the k-th approximant is certified."""
    return 1 - 2.0 ** (-k - 1)


def polar_grid(radius, n_radii, n_angles, angle_offset=0.0):
    radii = radius * np.arange(1, n_radii + 1) / n_radii
    angles = angle_offset + 2 * np.pi * np.arange(n_angles) / n_angles
    return (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()


class RationalApproximant:
    """The k-th rational approximant A_k = w (T_k - iI)(T_k + iI)^{-1} of a contractive function A, where T_k is a
    Riemann-Stieltjes sum of the Herglotz integral of the Cayley transform of A.

    A_k is contractive on the disk and unitary on the unit circle away from the tags of T_k.

    Attributes:
        cayley: The CayleyData holding w, T0, the tags and the masses of T_k.
        k: The approximant index.
        radius: Radius of the disk where ||T - T_k|| <= certificate was checked.
        certificate: The largest ||T(z) - T_k(z)|| observed on the certificate grid.
        extraction_radius: Radius of the circle on which the masses were extracted.
        boundaries: Cell boundaries of the angle partition, from 0 to 2pi.
        tracker: The ConvergenceTracker of the schedule that produced the approximant, if any.
    """
    def __init__(self, cayley, k, radius, certificate, extraction_radius, boundaries):
        self.cayley = cayley
        self.k = k
        self.radius = radius
        self.certificate = certificate
        self.extraction_radius = extraction_radius
        self.boundaries = np.asarray(boundaries, dtype=float)
        self.dim = cayley.dim
        self.tracker = None

    def __call__(self, z):
        return self.cayley.contraction(z)

    def evaluate_many(self, zs):
        return self.cayley.contraction_many(zs)

    def herglotz(self, z):
        return self.cayley.herglotz(z)

    @property
    def n_cells(self):
        return len(self.cayley.angles)

    def boundary_unitarity_defect(self, n_samples=32):
        """Largest ||A_k A_k* - I|| over n_samples points of the unit circle."""
        zs = np.exp(2j * np.pi * (np.arange(n_samples) + 0.5) / n_samples)
        values = self.evaluate_many(zs)
        return float(np.max(stack_norms(values @ np.conj(np.swapaxes(values, -1, -2)) - np.eye(self.dim))))

    def to_mvf(self):
        return MatrixFunction(self.__call__, self.dim, contractive=True, batch_fn=self.evaluate_many,
                              name=f'A_{self.k}')

    def save(self, save_path):
        """Exports the approximant with joblib."""
        dump(self, save_path)

    @staticmethod
    def load(load_path):
        return load(load_path)

    def __repr__(self):
        return f'RationalApproximant(k={self.k}, radius={self.radius:.6g}, n_cells={self.n_cells}, ' \
               f'certificate={self.certificate:.3e})'


class ApproximantBuilder(LoggingMixin):
    """Builds the rational approximants A_k of a contractive matrix function A.

    A rotation w is chosen so that wI - A(0) is invertible and T = i (wI - A)^{-1} (wI + A) is a Herglotz function.
    The masses of T are extracted on the circle of radius rho, where rho starts at 1 - (1 - r_k) / 4 and is pushed
    towards 1 while ||T(z) - T(rho z)|| exceeds half the target 1/k on the certificate grid of |z| <= r_k. The
    extraction grid is uniform, then refined where Im T(rho e^{is}) is peaked (see
    :func:`MIntPy.Potapov.herglotz_extract_adaptive`), so rho is pushed until the target is met or the number of
    extraction cells exceeds max_angles. The angle partition starts with uniform cells and the cells with the largest
    width times mass are bisected until ||T - T_k|| <= 1/k on the grid. Each cell is tagged at the centroid of its mass.

    Args:
        grid_size: Optional number of radii and of angles of the polar certificate grid. Default: 16.
        initial_cells: Optional number of cells of the initial uniform partition. Default: 8.
        bisect_ratio: Optional fraction of the largest cell contribution above which cells are bisected. Default: 0.5.
        max_cells: Optional budget of partition cells. Default: 8192.
        min_gap: Optional smallest value of 1 - rho. Default: 1e-12.
        min_angles: Optional smallest number of cells of the uniform extraction grid. Default: 1024.
        base_angles: Optional largest number of cells of the uniform extraction grid. Default: 2^13.
        max_angles: Optional budget of extraction cells after local refinement. Default: 2^20.
        extraction_rtol: Optional relative tolerance on the extracted cell masses. Default: 1e-10.
        cond_limit: Optional bound on the condition number of T_k + iI on the grid. Default: 1e12.
        radius_shift: Optional amount by which r_k is increased when the grid meets a singularity. Default: 1e-4.
        max_shifts: Optional number of such increases. Default: 3.
        verbose: Optional boolean indicating if the refinement should be logged. Default: False.
        log_file: Optional boolean indicating if a log file should be created. Default: False.
    """
    def __init__(self, **kwds):
        self.grid_size = kwds.get('grid_size', 16)
        self.initial_cells = kwds.get('initial_cells', 8)
        self.bisect_ratio = kwds.get('bisect_ratio', 0.5)
        self.max_cells = kwds.get('max_cells', 8192)
        self.min_gap = kwds.get('min_gap', 1e-12)
        self.min_angles = kwds.get('min_angles', 1024)
        self.base_angles = kwds.get('base_angles', 2 ** 13)
        self.max_angles = kwds.get('max_angles', 2 ** 20)
        self.extraction_rtol = kwds.get('extraction_rtol', 1e-10)
        self.cond_limit = kwds.get('cond_limit', 1e12)
        self.radius_shift = kwds.get('radius_shift', 1e-4)
        self.max_shifts = kwds.get('max_shifts', 3)
        assert 0 < self.bisect_ratio <= 1, f'The bisection ratio ({self.bisect_ratio}) should lie in (0, 1].'
        assert self.initial_cells >= 1, f'The number of initial cells ({self.initial_cells}) should be >= 1.'
        self._setup_logging(**kwds)
        self.tracker = ConvergenceTracker()

    def build(self, A, k, radius=None, partition=None, extraction_gap=None):
        """Builds A_k.

        Args:
            A: A contractive MatrixFunction.
            k: A positive integer; the certificate target is 1/k.
            radius: Optional radius of the certified disk, or a callable k -> radius. Default: 1 - 2^{-k-1}.
            partition: Optional initial cell boundaries in [0, 2pi], refined further when needed. Default: uniform.
            extraction_gap: Optional upper bound on 1 - rho, used to keep rho nondecreasing along a schedule.

        Returns:
            A RationalApproximant.
        """
        assert k >= 1, f'The approximant index ({k}) should be >= 1.'
        if radius is None:
            radius = default_radius(k)
        elif callable(radius):
            radius = radius(k)
        assert 0 < radius < 1, f'The certificate radius ({radius}) should lie in (0, 1).'

        w = choose_rotation(A(0))
        T = cayley_mvf(A, w)
        offset = herglotz_offset(T)
        for shift in range(self.max_shifts + 1):
            r = radius + shift * self.radius_shift
            if r >= 1:
                break
            try:
                return self._build_on_radius(A, T, w, offset, k, r, partition, extraction_gap)
            except SingularCayleyException as e:
                self._warn(f'[{A.name}] k = {k}: singular Cayley transform on |z| <= {r:.6g} ({e}), shifting r.')
        raise SingularCayleyException(f'The certificate grid of A_{k} meets singularities of the Cayley transform '
                                      f'after {self.max_shifts} radius shifts.')

    def _build_on_radius(self, A, T, w, offset, k, r, partition, extraction_gap):
        target = 1.0 / k
        grid = polar_grid(r, self.grid_size, self.grid_size)
        reference = T.evaluate_many(grid)

        one_minus_rho = (1 - r) / 4 if extraction_gap is None else min((1 - r) / 4, extraction_gap)
        while True:
            smoothing = float(np.max(stack_norms(reference - T.evaluate_many((1 - one_minus_rho) * grid))))
            if smoothing <= target / 2:
                break
            one_minus_rho /= 4
            if one_minus_rho < self.min_gap:
                raise PartitionBudgetException(f'[{A.name}] k = {k}: ||T(z) - T(rho z)|| = {smoothing:.3e} > '
                                               f'{target / 2:.3e} with 1 - rho down to {self.min_gap:.1e}.')
        rho = 1 - one_minus_rho

        num_angles = min(max(self.min_angles, 2 ** int(np.ceil(np.log2(8 / one_minus_rho)))), self.base_angles)
        try:
            angles, sigma = herglotz_extract_adaptive(T, rho, num_angles, rtol=self.extraction_rtol,
                                                      max_angles=self.max_angles)
        except ExtractionBudgetException as e:
            raise PartitionBudgetException(f'[{A.name}] k = {k}: {e}') from e
        self._info(f'[{A.name}] k = {k}: extracted on rho = {rho:.12f} with {len(angles) - 1} cells.')
        weights = np.real(np.trace(np.diff(sigma, axis=0), axis1=-2, axis2=-1))
        cum_weights = np.concatenate([[0.0], np.cumsum(weights)])
        cum_moments = np.concatenate([[0.0], np.cumsum(weights * (angles[1:] + angles[:-1]) / 2)])

        cells = self._initial_indices(partition, angles)
        while True:
            masses = sigma[cells[1:]] - sigma[cells[:-1]]
            cell_weights = cum_weights[cells[1:]] - cum_weights[cells[:-1]]
            midpoints = (angles[cells[1:]] + angles[cells[:-1]]) / 2
            centroids = (cum_moments[cells[1:]] - cum_moments[cells[:-1]]) / np.where(cell_weights > 0, cell_weights, 1)
            tags = np.mod(np.where(cell_weights > 0, centroids, midpoints), 2 * np.pi)
            data = CayleyData(w, offset, tags, masses)

            values = data.herglotz_many(grid)
            conds = np.linalg.cond(values + 1j * np.eye(data.dim))
            if np.max(conds) > self.cond_limit:
                raise SingularCayleyException(f'T_k + iI has condition number {np.max(conds):.3e}.')
            certificate = float(np.max(stack_norms(reference - values)))
            self._info(f'[{A.name}] k = {k}: {len(tags)} cells, certificate {certificate:.3e} (target {target:.3e})')
            if certificate <= target:
                return RationalApproximant(data, k, r, certificate, rho, angles[cells])

            contributions = np.diff(angles[cells]) * stack_norms(masses)
            widths = np.diff(cells)
            selected = np.flatnonzero((contributions >= self.bisect_ratio * np.max(contributions)) & (widths > 1))
            if len(selected) == 0 or len(tags) + len(selected) > self.max_cells:
                raise PartitionBudgetException(f'[{A.name}] k = {k}: certificate {certificate:.3e} > {target:.3e} '
                                               f'with {len(tags)} cells (budget {self.max_cells}, '
                                               f'{len(angles) - 1} extraction cells).')
            cells = np.sort(np.concatenate([cells, cells[selected] + widths[selected] // 2]))

    def _initial_indices(self, partition, angles):
        if partition is None:
            points = 2 * np.pi * np.arange(self.initial_cells + 1) / self.initial_cells
        else:
            points = np.clip(np.asarray(partition, dtype=float), 0, 2 * np.pi)
        upper = np.clip(np.searchsorted(angles, points), 1, len(angles) - 1)
        nearest = np.where(points - angles[upper - 1] <= angles[upper] - points, upper - 1, upper)
        return np.unique(np.concatenate([[0, len(angles) - 1], nearest]))

    def schedule(self, A, ks, eval_radius=0.5, radius=None, max_extra_rounds=4):
        """Builds A_k for every k in ks, refining each partition from the previous one, and records the largest
        ||A(z) - A_k(z)|| on |z| <= eval_radius in the tracker. When that error grows from one approximant to the
        next, the partition is bisected uniformly and 1 - rho is divided by 4, up to max_extra_rounds times. The
        extraction radius never decreases along the schedule.

        Returns:
            A tuple (approximants, table) with table a pandas DataFrame with one row per k.
        """
        self.tracker.reset()
        zs = polar_grid(eval_radius, 8, 32, angle_offset=np.pi / 32)
        target = A.evaluate_many(zs)
        approximants, rows, partition, previous, gap = [], [], None, np.inf, None
        for k in ks:
            approximant = self.build(A, k, radius=radius, partition=partition, extraction_gap=gap)
            error = float(np.max(stack_norms(target - approximant.evaluate_many(zs))))
            for _ in range(max_extra_rounds):
                if error <= previous:
                    break
                bounds = approximant.boundaries
                refined = np.sort(np.concatenate([bounds, (bounds[1:] + bounds[:-1]) / 2]))
                approximant = self.build(A, k, radius=radius, partition=refined,
                                         extraction_gap=(1 - approximant.extraction_radius) / 4)
                error = float(np.max(stack_norms(target - approximant.evaluate_many(zs))))
            if error > previous:
                self._warn(f'[{A.name}] the error of A_{k} ({error:.3e}) exceeds the previous one ({previous:.3e}).')

            approximant.tracker = self.tracker
            self.tracker.add_step(k, error)
            self.tracker.add_series_value('certificate', approximant.certificate)
            rows.append({'k': k, 'radius': approximant.radius, 'extraction_radius': approximant.extraction_radius,
                         'n_cells': approximant.n_cells, 'certificate': approximant.certificate, 'error': error})
            approximants.append(approximant)
            partition, previous, gap = approximant.boundaries, error, 1 - approximant.extraction_radius
        return approximants, pd.DataFrame(rows, columns=['k', 'radius', 'extraction_radius', 'n_cells',
                                                         'certificate', 'error'])


def rational_approximant(A, k, radius=None, partition=None, **kwds):
    """The k-th rational approximant of A (see :obj:`MIntPy.Potapov.ApproximantBuilder`)."""
    return ApproximantBuilder(**kwds).build(A, k, radius=radius, partition=partition)


def approximant_schedule(A, ks, eval_radius=0.5, radius=None, **kwds):
    return ApproximantBuilder(**kwds).schedule(A, ks, eval_radius=eval_radius, radius=radius)


class PartitionBudgetException(Exception):
    pass
