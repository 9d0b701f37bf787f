import numpy as np

from MIntPy.MatCore import MatrixFunction
from MIntPy.MatCore import as_cmat
from MIntPy.MatCore import is_unitary
from MIntPy.MatCore import scaled_hermitian_exp
from MIntPy.ProdInt import CantorIntegrator
from MIntPy.ProdInt import HerglotzKernel
from MIntPy.ProdInt import LinearIntegrator
from MIntPy.ProdInt import determinant_formula
from MIntPy.ProdInt import herglotz_kernel
from MIntPy.ProdInt import ordered_product
from MIntPy.ProdInt import prod_integral

TRACE_TOL = 1e-12


def _tail(tail_unitary, dim):
    if tail_unitary is None:
        return np.eye(dim, dtype=complex)
    tail = as_cmat(tail_unitary)
    assert is_unitary(tail, tol=1e-10), 'The tail constant should be unitary.'
    return tail


class PpInnerSpec:
    """Data U, (l_k, theta_k, E_k) of the pp-inner function U prod_k int_0^{l_k} exp(h_z(theta_k) dE_k(t)).

    Every E_k is an increasing integrator on [0, l_k] normalized by tr E_k(t) = t.

    Args:
        blocks: List of tuples (length, angle, integrator). An integrator set to None stands for t I / n.
        tail_unitary: Optional unitary constant U. Default: the identity.
        dim: Matrix dimension, required when every integrator is None or when there are no blocks. Default: None.
    """
    def __init__(self, blocks, tail_unitary=None, dim=None):
        blocks = list(blocks)
        if dim is None:
            dims = [E.dim for _, _, E in blocks if E is not None]
            dim = dims[0] if dims else (as_cmat(tail_unitary).shape[0] if tail_unitary is not None else None)
        assert dim is not None, 'The matrix dimension could not be inferred, please provide dim.'
        self.dim = dim
        self.tail_unitary = _tail(tail_unitary, dim)
        assert self.tail_unitary.shape == (dim, dim), f'The tail should be {dim} x {dim}.'

        self.blocks = []
        for length, angle, E in blocks:
            length, angle = float(length), float(angle)
            assert length > 0, f'Block lengths should be > 0, found {length}.'
            assert 0 <= angle < 2 * np.pi, f'Block angles should lie in [0, 2pi), found {angle}.'
            if E is None:
                E = LinearIntegrator.from_slope(0.0, length, np.eye(dim) / dim, increasing=True, name='tI/n')
            self._validate_block(length, E)
            self.blocks.append((length, angle, E))

    def _validate_block(self, length, E, n_samples=33):
        assert E.dim == self.dim, f'Integrator "{E.name}" has dimension {E.dim}, expected {self.dim}.'
        assert abs(E.a) <= TRACE_TOL and abs(E.b - length) <= TRACE_TOL * max(1.0, length), \
            f'Integrator "{E.name}" should be defined on [0, {length}], found [{E.a}, {E.b}].'
        assert E.increasing or E.is_increasing_on(), f'Integrator "{E.name}" should be increasing.'
        ts = np.linspace(E.a, E.b, n_samples)
        residual = float(np.max(np.abs(E.trace(ts) - ts)))
        assert residual <= TRACE_TOL * max(1.0, length), \
            f'Integrator "{E.name}" is not trace normalized: max |tr E(t) - t| = {residual:.3e}.'

    @property
    def total_length(self):
        return float(sum(length for length, _, _ in self.blocks))

    def det(self, z):
        """det U exp(sum_k l_k h_z(theta_k))."""
        exponent = sum((length * herglotz_kernel(complex(z), angle) for length, angle, _ in self.blocks), 0j)
        return complex(np.exp(exponent) * np.linalg.det(self.tail_unitary))

    def to_mvf(self, tol=1e-8, **kwds):
        return MatrixFunction(lambda z: eval_pp_inner(self, z, tol, **kwds), self.dim, contractive=True,
                              det_fn=self.det, name='pp-inner')

    def __repr__(self):
        return f'PpInnerSpec(dim={self.dim}, n_blocks={len(self.blocks)}, total_length={self.total_length:.6g})'


class ScInnerSpec:
    """Data U, S of the sc-inner function U int_0^{2pi} exp(h_z(phi) dS(phi)).

    Args:
        integrator: Continuous increasing integrator S on [0, 2pi], e.g. a CantorIntegrator.
        tail_unitary: Optional unitary constant U. Default: the identity.
    """
    def __init__(self, integrator, tail_unitary=None):
        E = integrator
        assert abs(E.a) <= TRACE_TOL and abs(E.b - 2 * np.pi) <= TRACE_TOL * 2 * np.pi, \
            f'Integrator "{E.name}" should be defined on [0, 2pi], found [{E.a}, {E.b}].'
        assert len(E.jumps()[0]) == 0, f'Integrator "{E.name}" should be continuous.'
        assert E.increasing or E.is_increasing_on(), f'Integrator "{E.name}" should be increasing.'
        self.integrator = E
        self.dim = E.dim
        self.tail_unitary = _tail(tail_unitary, self.dim)

    @staticmethod
    def cantor(scale, depth=14, tail_unitary=None):
        """Spec whose integrator is scale times the depth-d Cantor function approximant on [0, 2pi]."""
        return ScInnerSpec(CantorIntegrator(scale, 0.0, 2 * np.pi, depth=depth, name='S'), tail_unitary)

    @property
    def singular(self):
        return isinstance(self.integrator, CantorIntegrator)

    def det(self, z):
        """det U exp(int h_z d tr S)."""
        return determinant_formula(HerglotzKernel(z), self.integrator) * complex(np.linalg.det(self.tail_unitary))

    def to_mvf(self, tol=1e-8, **kwds):
        return MatrixFunction(lambda z: eval_sc_inner(self, z, tol, **kwds), self.dim, contractive=True,
                              det_fn=self.det, name='sc-inner')

    def __repr__(self):
        return f'ScInnerSpec(dim={self.dim}, integrator={self.integrator.name})'


def _block_product(z, angle, E, tol, **kwds):
    """int_0^l exp(h_z(theta) dE(t)) for a single angle theta."""
    h = herglotz_kernel(complex(z), angle)
    if isinstance(E, LinearIntegrator):
        # the kernel is constant, so every linear piece contributes exp(h * slope * dt) exactly
        increments = E.slopes * np.diff(E.nodes)[:, None, None]
        return ordered_product(scaled_hermitian_exp(np.full(len(increments), h), increments))
    return prod_integral(HerglotzKernel(z, angle), E, tol, **kwds).value


def eval_pp_inner(spec, z, tol=1e-8, **kwds):
    """Evaluates a pp-inner function at a point of the open disk.

    Blocks whose integrator is piecewise linear are evaluated exactly; the other blocks go through a dyadic
    multiplicative integral with error certificate tol.

    Args:
        spec: A PpInnerSpec.
        z: A complex number with |z| < 1.
        tol: Optional target error certificate of every block. Default: 1e-8.

    Returns:
        An n x n complex matrix.
    """
    assert abs(z) < 1, f'pp-inner functions are evaluated inside the disk, found |z| = {abs(z)}.'
    value = spec.tail_unitary.copy()
    for _, angle, E in spec.blocks:
        value = value @ _block_product(z, angle, E, tol, **kwds)
    return value


def eval_sc_inner(spec, z, tol=1e-8, **kwds):
    """Evaluates U int_0^{2pi} exp(h_z(phi) dS(phi)) at a point of the open disk."""
    assert abs(z) < 1, f'sc-inner functions are evaluated inside the disk, found |z| = {abs(z)}.'
    result = prod_integral(HerglotzKernel(z), spec.integrator, tol, **kwds)
    return spec.tail_unitary @ result.value
