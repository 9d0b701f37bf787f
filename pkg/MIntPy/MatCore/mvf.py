import numpy as np


class MatrixFunction:
    """Evaluable handle of a matrix-valued function on the open unit disk.

    Analyticity of the wrapped function is trusted, not verified. The optional metadata allows faster or more
    accurate evaluations downstream: a determinant callable (e.g. from a determinant formula) and a batch evaluator.

    Args:
        fn: A callable mapping a complex number z to an n x n matrix.
        dim: An integer representing the matrix dimension n.
        contractive: Optional boolean declaring whether the function is contractive on the disk. Default: False.
        det_fn: Optional callable mapping z to det fn(z). Default: None (computed from fn).
        batch_fn: Optional callable mapping an array of k points to a (k, n, n) array. Default: None.
        name: Optional string used in logs and reports. Default: 'MatrixFunction'.
    """
    def __init__(self, fn, dim, contractive=False, det_fn=None, batch_fn=None, name=None):
        assert dim >= 1, f'The matrix dimension ({dim}) should be >= 1.'
        self.fn = fn
        self.dim = dim
        self.contractive = contractive
        self.det_fn = det_fn
        self.batch_fn = batch_fn
        self.name = 'MatrixFunction' if name is None else name

    def __call__(self, z):
        value = np.asarray(self.fn(complex(z)), dtype=complex)
        if value.shape != (self.dim, self.dim):
            raise Exception(f'Function "{self.name}" returned shape {value.shape}, expected {(self.dim, self.dim)}.')
        return value

    def det(self, z):
        if self.det_fn is not None:
            return complex(self.det_fn(complex(z)))
        return complex(np.linalg.det(self(z)))

    def evaluate_many(self, zs):
        zs = np.asarray(zs, dtype=complex).ravel()
        if self.batch_fn is not None:
            return np.asarray(self.batch_fn(zs), dtype=complex)
        if len(zs) == 0:
            return np.zeros((0, self.dim, self.dim), dtype=complex)
        return np.array([self(z) for z in zs])

    def __matmul__(self, other):
        """Pointwise product z -> self(z) other(z)."""
        assert self.dim == other.dim, f'Dimension mismatch: {self.dim} != {other.dim}.'

        det_fn = None
        if self.det_fn is not None and other.det_fn is not None:
            det_fn = lambda z: self.det_fn(z) * other.det_fn(z)

        batch_fn = None
        if self.batch_fn is not None and other.batch_fn is not None:
            batch_fn = lambda zs: self.batch_fn(zs) @ other.batch_fn(zs)

        return MatrixFunction(lambda z: self(z) @ other(z), self.dim,
                              contractive=self.contractive and other.contractive, det_fn=det_fn,
                              batch_fn=batch_fn, name=f'{self.name}*{other.name}')

    @staticmethod
    def constant(mat, contractive=None, name='constant'):
        mat = np.array(mat, dtype=complex)
        if contractive is None:
            contractive = bool(np.linalg.norm(mat, 2) <= 1 + 1e-12)
        det = complex(np.linalg.det(mat))
        return MatrixFunction(lambda z: mat.copy(), mat.shape[0], contractive=contractive, det_fn=lambda z: det,
                              batch_fn=lambda zs: np.broadcast_to(mat, (len(zs),) + mat.shape).copy(), name=name)

    @staticmethod
    def identity(dim):
        return MatrixFunction.constant(np.eye(dim), contractive=True, name='identity')
