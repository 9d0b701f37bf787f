import numpy as np
import scipy.interpolate

from MIntPy.MatCore import MatrixFunction
from MIntPy.MatCore import adjoint
from MIntPy.MatCore import hermitian_part
from MIntPy.MatCore import stack_norms
from MIntPy.ProdInt import DensityIntegrator
from MIntPy.ProdInt import HerglotzKernel
from MIntPy.ProdInt import herglotz_kernel
from MIntPy.ProdInt import ode_integral
from MIntPy.ProdInt import prod_integral
from .inner import _tail

OUTER_METHODS = ('prodint', 'ode')
DET_NODES = 2 ** 16


class OuterSpec:
    """Data U, M of the outer function U int_0^{2pi} exp(h_z(phi) M(phi) dphi).

    Args:
        density: Callable phi -> M(phi), Hermitian n x n matrices on [0, 2pi] (or, if vectorized, a 1-d array of
            angles -> (k, n, n) array).
        tail_unitary: Optional unitary constant U. Default: the identity.
        lower_bound: Optional real bounding the least eigenvalue of M from below. Default: None (the sampled least
            eigenvalue is used).
        vectorized: Optional boolean indicating if density accepts arrays. Default: False.
        breakpoints: Optional angles where M is not smooth. Default: ().
    """
    def __init__(self, density, tail_unitary=None, lower_bound=None, vectorized=False, breakpoints=()):
        if lower_bound is None:
            probe = DensityIntegrator(density, 0.0, 2 * np.pi, breakpoints=breakpoints, vectorized=vectorized)
            samples = probe.derivative(np.linspace(0, 2 * np.pi, 65))
            lower_bound = float(np.min(np.linalg.eigvalsh(hermitian_part(samples))))
        assert np.isfinite(lower_bound), f'The lower bound ({lower_bound}) should be finite.'
        self.lower_bound = float(lower_bound)
        self.integrator = DensityIntegrator(density, 0.0, 2 * np.pi, breakpoints=breakpoints, vectorized=vectorized,
                                            lower_bound=self.lower_bound, hermitian=True, name='M')
        self.density = density
        self.vectorized = vectorized
        self.dim = self.integrator.dim
        self.tail_unitary = _tail(tail_unitary, self.dim)
        self.samples = None
        self._trace_nodes = None

    @staticmethod
    def from_samples(angles, values, tail_unitary=None):
        """Spec whose density linearly interpolates Hermitian samples M(angles[k]) = values[k] on [0, 2pi]."""
        angles = np.asarray(angles, dtype=float).ravel()
        values = np.asarray(values, dtype=complex)
        assert len(angles) >= 2 and values.shape[0] == len(angles), 'Expected at least two matching samples.'
        assert np.isclose(angles[0], 0) and np.isclose(angles[-1], 2 * np.pi), \
            'The sample angles should start at 0 and end at 2pi.'
        table = scipy.interpolate.interp1d(angles, np.stack([values.real, values.imag], axis=-1), axis=0,
                                           assume_sorted=True)

        def density(ts):
            parts = table(np.clip(ts, angles[0], angles[-1]))
            return parts[..., 0] + 1j * parts[..., 1]

        spec = OuterSpec(density, tail_unitary, vectorized=True, breakpoints=angles[1:-1])
        spec.samples = (angles, values)
        return spec

    @property
    def contractive(self):
        return self.lower_bound >= 0

    def trace_integral(self):
        """int_0^{2pi} tr M(phi) dphi."""
        return float(np.real(np.trace(self.integrator.value(2 * np.pi))))

    def det(self, z):
        """det U exp(int h_z(phi) tr M(phi) dphi), by the periodic trapezoidal rule on 2^16 nodes."""
        if self._trace_nodes is None:
            angles = 2 * np.pi * np.arange(DET_NODES) / DET_NODES
            traces = np.real(np.trace(self.integrator.derivative(angles), axis1=-2, axis2=-1))
            self._trace_nodes = (angles, traces)
        angles, traces = self._trace_nodes
        exponent = np.sum(herglotz_kernel(complex(z), angles) * traces) * 2 * np.pi / DET_NODES
        return complex(np.exp(exponent) * np.linalg.det(self.tail_unitary))

    def to_mvf(self, tol=1e-8, **kwds):
        return MatrixFunction(lambda z: eval_outer(self, z, tol, **kwds), self.dim, contractive=self.contractive,
                              det_fn=self.det, name='outer')

    def __repr__(self):
        return f'OuterSpec(dim={self.dim}, lower_bound={self.lower_bound:.6g}, tabulated={self.samples is not None})'


def eval_outer(spec, z, tol=1e-8, method='prodint', **kwds):
    """Evaluates an outer function at a point of the open disk.

    Args:
        spec: An OuterSpec.
        z: A complex number with |z| < 1.
        tol: Optional target error certificate ('prodint'), or the relative tolerance of the adaptive solver
            ('ode'). Default: 1e-8.
        method: Optional string, either 'prodint' (dyadic multiplicative integral) or 'ode' (Cauchy problem solved
            with scipy's DOP853). Default: 'prodint'.

    Returns:
        An n x n complex matrix.
    """
    assert abs(z) < 1, f'Outer functions are evaluated inside the disk, found |z| = {abs(z)}.'
    if method == 'prodint':
        value = prod_integral(HerglotzKernel(z), spec.integrator, tol, **kwds).value
    elif method == 'ode':
        M = spec.integrator
        value = ode_integral(lambda t: herglotz_kernel(complex(z), t) * M.derivative([t])[0], 0.0, 2 * np.pi,
                             breakpoints=M.breakpoints(), method='dop853', rtol=min(tol, 1e-10),
                             atol=kwds.get('atol', 1e-14))
    else:
        raise Exception(f'There is no evaluation method corresponding to the name "{method}". '
                        f'Available methods: {OUTER_METHODS}.')
    return spec.tail_unitary @ value


def gram_margins(A, B, points):
    """Least eigenvalue of A(z)*A(z) - B(z)*B(z) at every point."""
    a = A.evaluate_many(points)
    b = B.evaluate_many(points)
    gap = adjoint(a) @ a - adjoint(b) @ b
    return np.linalg.eigvalsh(hermitian_part(gap))[:, 0]


def outer_maximality_check(A, B, grid, boundary_points=None, boundary_tol=1e-6, tol=1e-7, eval_tol=1e-8):
    """Checks B*(z)B(z) <= A*(z)A(z) at the interior grid points, for A outer and B sharing its boundary Gram data.

    Args:
        A: An OuterSpec or a MatrixFunction handle of an outer function.
        B: A MatrixFunction handle.
        grid: Array of points of the open disk.
        boundary_points: Optional points at (or next to) the circle where the precondition B*B = A*A is verified.
            Default: None (the precondition is trusted).
        boundary_tol: Optional tolerance of the precondition. Default: 1e-6.
        tol: Optional positivity tolerance. Default: 1e-7.
        eval_tol: Optional error certificate used when A is an OuterSpec. Default: 1e-8.

    Returns:
        True if A*A - B*B >= -tol at every grid point.
    """
    if isinstance(A, OuterSpec):
        A = A.to_mvf(eval_tol)
    assert A.dim == B.dim, f'Dimension mismatch: {A.dim} != {B.dim}.'

    if boundary_points is not None and len(boundary_points) > 0:
        a = A.evaluate_many(boundary_points)
        b = B.evaluate_many(boundary_points)
        residual = float(np.max(stack_norms(adjoint(a) @ a - adjoint(b) @ b)))
        if residual > boundary_tol:
            raise BoundaryPreconditionException(f'B*B differs from A*A by {residual:.3e} on the boundary samples '
                                                f'(tolerance: {boundary_tol}).')

    return bool(np.min(gram_margins(A, B, np.asarray(grid, dtype=complex).ravel())) >= -tol)


class BoundaryPreconditionException(Exception):
    pass
