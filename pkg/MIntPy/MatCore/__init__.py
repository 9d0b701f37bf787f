from .matrix_ops import EXP_NORM_CAP
from .matrix_ops import as_cmat
from .matrix_ops import adjoint
from .matrix_ops import spectral_norm
from .matrix_ops import stack_norms
from .matrix_ops import is_hermitian
from .matrix_ops import hermitian_part
from .matrix_ops import imaginary_part
from .matrix_ops import is_positive
from .matrix_ops import min_eigenvalue
from .matrix_ops import mat_exp
from .matrix_ops import mat_exp_batch
from .matrix_ops import scaled_hermitian_exp
from .matrix_ops import svd
from .matrix_ops import is_unitary
from .matrix_ops import is_contraction
from .matrix_ops import contraction_routes
from .matrix_ops import numerical_rank
from .matrix_ops import solve_right
from .matrix_ops import DimensionMismatchException
from .matrix_ops import NonFiniteMatrixException
from .matrix_ops import MatrixExpOverflowException
from .matrix_ops import SVDConvergenceException
from .matrix_ops import ContractionRouteException
from .norm_properties import matrix_norm_clauses
from .norm_properties import norm_contraction_agreement
from .norm_properties import random_matrix
from .norm_properties import random_unitary
from .norm_properties import random_positive
from .mvf import MatrixFunction
from .function_checks import subharmonic_check
from .function_checks import rank_invariance_check
from .function_checks import unitary_constant_check

__all__ = [
    'EXP_NORM_CAP',
    'as_cmat',
    'adjoint',
    'spectral_norm',
    'stack_norms',
    'is_hermitian',
    'hermitian_part',
    'imaginary_part',
    'is_positive',
    'min_eigenvalue',
    'mat_exp',
    'mat_exp_batch',
    'scaled_hermitian_exp',
    'svd',
    'is_unitary',
    'is_contraction',
    'contraction_routes',
    'numerical_rank',
    'solve_right',
    'DimensionMismatchException',
    'NonFiniteMatrixException',
    'MatrixExpOverflowException',
    'SVDConvergenceException',
    'ContractionRouteException',
    'matrix_norm_clauses',
    'norm_contraction_agreement',
    'random_matrix',
    'random_unitary',
    'random_positive',
    'MatrixFunction',
    'subharmonic_check',
    'rank_invariance_check',
    'unitary_constant_check'
]
