import numpy as np

from MIntPy.logging_mixin import LoggingMixin
from MIntPy.MatCore import EXP_NORM_CAP
from MIntPy.MatCore import spectral_norm
from .convergence_tracker import ConvergenceTracker
from .derived_integrators import ComposedIntegrator
from .density_integrator import DensityIntegrator
from .estimates import determinant_formula
from .estimates import norm_bound
from .estimates import unit_kernel
from .partition import TaggedPartition
from .riemann_sums import forced_points
from .riemann_sums import jump_factors
from .riemann_sums import level_product
from .riemann_sums import riemann_product


class ProdIntResult:
    """Outcome of a multiplicative integral evaluation.

    Attributes:
        value: The n x n result.
        partitions_used: Number of dyadic refinement levels evaluated.
        error_certificate: A posteriori bound, twice the distance between the last two refinement levels.
        n_cells: Number of cells of the finest partition used.
        det_residual: Relative distance between det(value) and the determinant formula (test mode only).
        norm_excess: Amount by which ||value|| exceeds the exponential norm bound (test mode only).
    """
    def __init__(self, value, partitions_used, error_certificate, n_cells, det_residual=None, norm_excess=None):
        self.value = value
        self.partitions_used = partitions_used
        self.error_certificate = error_certificate
        self.n_cells = n_cells
        self.det_residual = det_residual
        self.norm_excess = norm_excess

    def __repr__(self):
        return f'ProdIntResult(partitions_used={self.partitions_used}, error_certificate={self.error_certificate:.3e}, ' \
               f'n_cells={self.n_cells})'


class ProductIntegrator(LoggingMixin):
    """Evaluates multiplicative Stieltjes integrals int_a^b exp(f dE) as limits of ordered products
    prod exp(f(xi_i) (E(t_i) - E(t_{i-1}))) over dyadic refinements.

    Every refinement contains the breakpoints of f and E and the jump locations of E. Each segment between these
    forced points is split into 2^L equal cells tagged at their midpoints. Jumps of E located at t_j in (a, b] are
    applied exactly as factors exp(f(t_j) J_j) after the segment ending at t_j. Refinement stops once twice the
    distance between two consecutive levels is below tol.

    Args:
        tol: Optional positive real, the target error certificate. Default: 1e-8.
        max_refinements: Optional integer, the maximum dyadic level. Default: 24.
        min_levels: Optional integer, the minimum dyadic level evaluated before stopping. Default: 2.
        exp_norm_cap: Optional cap on the norm of each exponentiated cell matrix. Default: 1e3.
        test_mode: Optional boolean; when True, every result is cross-checked against the determinant formula and
            the exponential norm bound. Default: False.
        verbose: Optional boolean indicating if refinement progress should be logged. Default: False.
        log_file: Optional boolean indicating if a log file should be created. Default: False.
    """
    def __init__(self, **kwds):
        self.tol = kwds.get('tol', 1e-8)
        self.max_refinements = kwds.get('max_refinements', 24)
        self.min_levels = kwds.get('min_levels', 2)
        self.exp_norm_cap = kwds.get('exp_norm_cap', EXP_NORM_CAP)
        self.test_mode = kwds.get('test_mode', False)
        assert self.tol > 0, f'The tolerance ({self.tol}) should be > 0.'
        assert 1 <= self.min_levels <= self.max_refinements, \
            f'Expected 1 <= min_levels ({self.min_levels}) <= max_refinements ({self.max_refinements}).'
        self._setup_logging(**kwds)
        self.tracker = ConvergenceTracker()

    def integrate(self, f, E, a=None, b=None):
        """Evaluates int_a^b exp(f dE).

        Args:
            f: A kernel (see :obj:`MIntPy.ProdInt.KernelABC`).
            E: An integrator (see :obj:`MIntPy.ProdInt.IntegratorABC`).
            a: Optional left end point inside the domain of E. Default: E.a.
            b: Optional right end point inside the domain of E. Default: E.b.

        Returns:
            A ProdIntResult.
        """
        a = E.a if a is None else float(a)
        b = E.b if b is None else float(b)
        assert E.a <= a <= b <= E.b, f'The interval [{a}, {b}] is not inside the domain [{E.a}, {E.b}].'
        self.tracker.reset()

        if a == b:
            return self._checked(ProdIntResult(np.eye(E.dim, dtype=complex), 0, 0.0, 0), f, E, a, b)

        forced = forced_points(f, E, a, b)
        jumps = jump_factors(f, E, forced, a, b, self.exp_norm_cap)
        prev = level_product(f, E, forced, jumps, 0, self.exp_norm_cap)
        for level in range(1, self.max_refinements + 1):
            current = level_product(f, E, forced, jumps, level, self.exp_norm_cap)
            certificate = 2 * spectral_norm(current - prev)
            self.tracker.add_step(level, certificate)
            self._info(f'[{E.name}] level {level}: {(len(forced) - 1) * 2 ** level} cells, '
                       f'certificate {certificate:.3e}')
            if level >= self.min_levels and certificate <= self.tol:
                return self._checked(ProdIntResult(current, level + 1, certificate, (len(forced) - 1) * 2 ** level),
                                     f, E, a, b)
            prev = current

        raise NonConvergenceException(f'No convergence to {self.tol} after {self.max_refinements} dyadic levels '
                                      f'(last certificate: {self.tracker.last_difference()}).')

    def _checked(self, result, f, E, a, b):
        if not self.test_mode:
            return result

        expected = determinant_formula(f, E, a, b)
        result.det_residual = abs(np.linalg.det(result.value) - expected) / max(abs(expected), 1e-300)
        result.norm_excess = max(0.0, spectral_norm(result.value) - norm_bound(f, E, a, b))
        if result.det_residual > 10 * self.tol:
            self._warn(f'[{E.name}] determinant formula mismatch: relative residual {result.det_residual:.3e}.')
        if result.norm_excess > 10 * self.tol:
            self._warn(f'[{E.name}] exponential norm bound exceeded by {result.norm_excess:.3e}.')
        return result


def prod_integral(f, E, tol=1e-8, a=None, b=None, **kwds):
    """Evaluates int_a^b exp(f dE) with a ProductIntegrator configured by tol and the extra keyword arguments."""
    return ProductIntegrator(tol=tol, **kwds).integrate(f, E, a, b)


def split_product(f, E, c, tol=1e-8, **kwds):
    """Evaluates the multiplicative integrals over [a, c] and [c, b], whose product is the integral over [a, b].

    Returns:
        A tuple (left, right) of ProdIntResult.
    """
    assert E.a <= c <= E.b, f'The split point ({c}) should lie in [{E.a}, {E.b}].'
    integrator = ProductIntegrator(tol=tol, **kwds)
    return integrator.integrate(f, E, E.a, c), integrator.integrate(f, E, c, E.b)


def gram_product(f, E, tol=1e-8, **kwds):
    """Evaluates int exp(2 Re f dE), which equals A A* for A = int exp(f dE) when E is Hermitian."""
    assert E.hermitian, f'The integrator "{E.name}" should be Hermitian.'
    return prod_integral(f.real_part(2.0), E, tol=tol, **kwds).value


def change_of_variables(f, E, phi, tol=1e-8, **kwds):
    """Evaluates int_alpha^beta exp(f(s) dE(phi^dagger(s))) for a strictly increasing map phi: [a, b] -> [alpha,
    beta], which equals int_a^b exp(f(phi(t)) dE(t)).

    Args:
        f: A kernel defined on the image of phi.
        E: A continuous integrator on the domain of phi.
        phi: A MonotoneMap.

    Returns:
        A ProdIntResult.
    """
    return prod_integral(f, ComposedIntegrator(E, phi), tol=tol, **kwds)


def lebesgue_form(f, E, tol=1e-8, **kwds):
    """Evaluates an integral against an absolutely continuous integrator both as a Stieltjes integral and as the
    multiplicative Lebesgue integral of the density f(t) E'(t).

    Returns:
        A tuple (stieltjes_result, lebesgue_result) of ProdIntResult.
    """
    density = DensityIntegrator(lambda ts: f(ts)[:, None, None] * E.derivative(ts), E.a, E.b,
                                breakpoints=np.union1d(E.breakpoints(), f.breakpoints()), vectorized=True,
                                hermitian=False, name=f'{f.name}*d{E.name}')
    return prod_integral(f, E, tol=tol, **kwds), prod_integral(unit_kernel(), density, tol=tol, **kwds)


def cauchy_gap(f, E, m, seed=0):
    """Distance between the Riemann products of two independent random tagged partitions with about m cells each,
    both containing the forced points of f and E."""
    rng = np.random.default_rng(seed)
    forced = forced_points(f, E, E.a, E.b)
    first = riemann_product(f, E, TaggedPartition.random(E.a, E.b, m, rng, forced=forced))
    second = riemann_product(f, E, TaggedPartition.random(E.a, E.b, m, rng, forced=forced))
    return spectral_norm(first - second)


class NonConvergenceException(Exception):
    pass
