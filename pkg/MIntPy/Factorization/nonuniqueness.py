import numpy as np

from MIntPy.MatCore import spectral_norm
from MIntPy.MatCore import stack_norms
from MIntPy.ProdInt import DensityIntegrator
from MIntPy.ProdInt import herglotz_kernel
from .inner import PpInnerSpec
from .inner import eval_pp_inner

FUNCTION_GAP_TOL = 1e-8
INTEGRATOR_GAP_MIN = 0.2


def _diagonal_density(first):
    """t -> diag(t, 1 - t) (first=True) or diag(1 - t, t), vectorized over t."""
    def density(ts):
        ts = np.asarray(ts, dtype=float)
        out = np.zeros((len(ts), 2, 2))
        out[:, 0, 0] = ts if first else 1 - ts
        out[:, 1, 1] = 1 - ts if first else ts
        return out
    return density


def nonuniqueness_pair():
    """Two pp-inner specs on a single block (l = 1, theta = 0) with integrators E1(t) = diag(t^2/2, t - t^2/2) and
    E2(t) = diag(t - t^2/2, t^2/2), which differ for every t in (0, 1) but define the same function
    exp(h_z(0) / 2) I."""
    E1 = DensityIntegrator(_diagonal_density(True), 0.0, 1.0, vectorized=True, increasing=True, name='E1')
    E2 = DensityIntegrator(_diagonal_density(False), 0.0, 1.0, vectorized=True, increasing=True, name='E2')
    return PpInnerSpec([(1.0, 0.0, E1)]), PpInnerSpec([(1.0, 0.0, E2)])


def demo_grid(radii=(0.1, 0.3, 0.5, 0.7, 0.9), n_angles=10):
    angles = 2 * np.pi * (np.arange(n_angles) + 0.5) / n_angles
    return (np.asarray(radii)[:, None] * np.exp(1j * angles)[None, :]).ravel()


def nonuniqueness_demo(tol=1e-10, n_times=101):
    """Evaluates both functions of the pair on a 50-point grid and measures how far apart they and their
    integrators are.

    Returns:
        A dict with the keys 'function_gap' (max distance between the two functions), 'closed_form_gap' (max distance
        to exp(h_z(0) / 2) I), 'integrator_gap' (sup_t ||E1(t) - E2(t)||), 'trace_residual' (max |tr E_i(t) - t|),
        'n_points' and 'passed'.
    """
    first, second = nonuniqueness_pair()
    grid = demo_grid()
    function_gap, closed_form_gap = 0.0, 0.0
    for z in grid:
        a = eval_pp_inner(first, z, tol)
        b = eval_pp_inner(second, z, tol)
        expected = np.exp(herglotz_kernel(z, 0.0) / 2) * np.eye(2)
        function_gap = max(function_gap, spectral_norm(a - b))
        closed_form_gap = max(closed_form_gap, spectral_norm(a - expected), spectral_norm(b - expected))

    ts = np.linspace(0, 1, n_times)
    E1, E2 = first.blocks[0][2], second.blocks[0][2]
    integrator_gap = float(np.max(stack_norms(E1.value(ts) - E2.value(ts))))
    trace_residual = float(max(np.max(np.abs(E.trace(ts) - ts)) for E in (E1, E2)))

    return {
        'function_gap': float(function_gap),
        'closed_form_gap': float(closed_form_gap),
        'integrator_gap': integrator_gap,
        'trace_residual': trace_residual,
        'n_points': len(grid),
        'passed': bool(function_gap <= FUNCTION_GAP_TOL and integrator_gap >= INTEGRATOR_GAP_MIN)
    }
