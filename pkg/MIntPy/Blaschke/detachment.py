from tqdm import tqdm
import numpy as np

from MIntPy.logging_mixin import LoggingMixin
from MIntPy.MatCore import MatrixFunction
from MIntPy.MatCore import spectral_norm
from MIntPy.MatCore import svd
from .bp_factor import BPFactor
from .bp_product import BPProduct


def detachable(A, b, z0=None, detach_tol=None):
    """Checks whether the B.P. factor b can be detached from the left of A, i.e. whether b^{-1} A stays analytic at z0.

    This holds iff the range of A(z0) lies in ker P, i.e. iff the top r rows of U* A(z0) vanish.

    Args:
        A: A MatrixFunction.
        b: A BPFactor.
        z0: Optional point where the check is made. Default: the zero of b.
        detach_tol: Optional absolute tolerance on ||P A(z0)||. Default: 1e-9 ||A(z0)|| + 1e-12.

    Returns:
        A boolean.
    """
    z0 = b.zero if z0 is None else complex(z0)
    value = A(z0)
    detach_tol = 1e-9 * spectral_norm(value) + 1e-12 if detach_tol is None else detach_tol
    top_rows = (b.frame.conj().T @ value)[:b.rank]
    return bool(np.linalg.norm(top_rows, 2) <= detach_tol)


class BPFactorizer(LoggingMixin):
    """Detaches Blaschke-Potapov factors from the left of a contractive matrix function.

    At a zero z0 of det A, the singular value decomposition A(z0) = W diag(s) V* gives the numerical defect r (number
    of singular values <= defect_tol * s_max) and the left singular vectors spanning the complement of the range of
    A(z0). The maximal factor b has P equal to the projection onto that complement, so that ker P = range A(z0).
    The remainder b^{-1} A is evaluated directly away from z0, and by Cauchy averaging over a circle of radius
    2 sing_radius around z0 inside its removable-singularity disk.

    Args:
        defect_tol: Optional relative threshold on singular values counted as zero. Default: 1e-8.
        sing_radius: Optional radius of the removable-singularity disk. Default: 1e-3.
        cauchy_nodes: Optional number of nodes of the Cauchy averaging circle. Default: 64.
        zero_tol: Optional threshold on the smallest relative singular value used to decide if a listed zero is
            still present. Default: 1e-8.
        max_passes: Optional maximum number of detachments per listed zero. Default: 8.
        verbose: Optional boolean indicating if detachment progress should be logged. Default: False.
        log_file: Optional boolean indicating if a log file should be created. Default: False.
    """
    def __init__(self, **kwds):
        self.defect_tol = kwds.get('defect_tol', 1e-8)
        self.sing_radius = kwds.get('sing_radius', 1e-3)
        self.cauchy_nodes = kwds.get('cauchy_nodes', 64)
        self.zero_tol = kwds.get('zero_tol', 1e-8)
        self.max_passes = kwds.get('max_passes', 8)
        assert 0 < self.defect_tol < 1, f'The defect tolerance ({self.defect_tol}) should lie in (0, 1).'
        assert self.sing_radius > 0, f'The singularity radius ({self.sing_radius}) should be > 0.'
        self._setup_logging(**kwds)

    def defect(self, value, tol=None):
        """Number of singular values of value at or below tol times the largest one."""
        s = np.linalg.svd(value, compute_uv=False)
        tol = self.defect_tol if tol is None else tol
        if s[0] == 0:
            return len(s)
        return int(np.sum(s <= tol * s[0]))

    def detach_max(self, A, z0):
        """Detaches the maximal B.P. factor at z0 from the left of A.

        Args:
            A: A MatrixFunction with det A(z0) = 0.
            z0: A point of the open disk.

        Returns:
            A tuple (b, remainder) with b a BPFactor and remainder a MatrixFunction such that A = b remainder.
        """
        z0 = complex(z0)
        assert abs(z0) < 1, f'The zero ({z0}) should lie in the open disk.'
        w, s, _ = svd(A(z0))
        n, smax = len(s), s[0]
        threshold = self.defect_tol * smax
        rank = n if smax == 0 else int(np.sum(s <= threshold))
        if rank == 0:
            raise NoZeroException(f'A({z0}) has no numerical defect: smallest singular value {s[-1]:.3e} for '
                                  f'largest {smax:.3e}.')
        if smax > 0 and np.any((s > threshold) & (s <= 1e3 * threshold)):
            raise IllConditionedFrameException(f'Singular values of A({z0}) fall between {threshold:.3e} and '
                                               f'{1e3 * threshold:.3e}: {s.tolist()}.')

        frame = np.concatenate([w[:, n - rank:], w[:, :n - rank]], axis=1)
        b = BPFactor(z0, frame, rank)
        self._info(f'[{A.name}] detached factor at {z0:.6g} of rank {rank} (singular values {np.around(s, 12)}).')
        return b, self._remainder(A, b)

    def _remainder(self, A, b):
        z0 = b.zero
        radius = min(self.sing_radius, (1 - abs(z0)) / 4)
        nodes = z0 + 2 * radius * np.exp(2j * np.pi * np.arange(self.cauchy_nodes) / self.cauchy_nodes)
        cache = {}

        def circle_values():
            if 'values' not in cache:
                cache['values'] = np.array([b.inverse(zeta) @ A(zeta) for zeta in nodes])
            return cache['values']

        def fn(z):
            if abs(z - z0) > radius:
                return b.inverse(z) @ A(z)
            weights = (nodes - z0) / (nodes - z) / self.cauchy_nodes
            return np.tensordot(weights, circle_values(), axes=(0, 0))

        return MatrixFunction(fn, A.dim, contractive=A.contractive, name=f'{A.name}/b[{z0:.4g}]')

    def factor_out_zeros(self, A, zeros):
        """Detaches maximal factors at every listed zero until the local defect vanishes.

        Args:
            A: A MatrixFunction.
            zeros: Sequence of zeros of det A in the open disk; repeated entries are allowed.

        Returns:
            A tuple (B, remainder) with B a BPProduct and A = B remainder.
        """
        current, factors = A, []
        for z0 in tqdm(list(dict.fromkeys(complex(z) for z in zeros)), disable=not self.verbose):
            for _ in range(self.max_passes):
                if self.defect(current(z0), tol=self.zero_tol) == 0:
                    break
                b, current = self.detach_max(current, z0)
                factors.append(b)

        unconsumed = [complex(z) for z in zeros if self.defect(current(z), tol=self.zero_tol) > 0]
        if len(unconsumed) > 0:
            raise UnconsumedZerosException(f'det of the remainder still vanishes at {unconsumed} after '
                                           f'{self.max_passes} passes.')
        self._info(f'[{A.name}] factored out {len(factors)} factors at {len(zeros)} listed zeros.')
        return BPProduct(factors, dim=A.dim), current


def detach_max(A, z0, **kwds):
    return BPFactorizer(**kwds).detach_max(A, z0)


def factor_out_zeros(A, zeros, zero_tol=1e-8, **kwds):
    return BPFactorizer(zero_tol=zero_tol, **kwds).factor_out_zeros(A, zeros)


class NoZeroException(Exception):
    pass


class IllConditionedFrameException(Exception):
    pass


class UnconsumedZerosException(Exception):
    pass
