from .cayley import herglotz_kernel_matrix
from .cayley import choose_rotation
from .cayley import cayley_forward
from .cayley import cayley_inverse
from .cayley import cayley_mvf
from .cayley import CayleyData
from .cayley import SingularCayleyException
from .herglotz import herglotz_extract
from .herglotz import herglotz_extract_adaptive
from .herglotz import herglotz_offset
from .herglotz import NegativeImaginaryPartException
from .herglotz import ExtractionBudgetException
from .rational_approximant import default_radius
from .rational_approximant import polar_grid
from .rational_approximant import RationalApproximant
from .rational_approximant import ApproximantBuilder
from .rational_approximant import rational_approximant
from .rational_approximant import approximant_schedule
from .rational_approximant import PartitionBudgetException
from .representation import PotapovRepr
from .representation import bp_to_repr
from .representation import repr_eval
from .representation import modified_product_bound
from .representation import modified_product_error
from .representation import InvalidRepresentationException

__all__ = [
    'herglotz_kernel_matrix',
    'choose_rotation',
    'cayley_forward',
    'cayley_inverse',
    'cayley_mvf',
    'CayleyData',
    'SingularCayleyException',
    'herglotz_extract',
    'herglotz_extract_adaptive',
    'herglotz_offset',
    'NegativeImaginaryPartException',
    'ExtractionBudgetException',
    'default_radius',
    'polar_grid',
    'RationalApproximant',
    'ApproximantBuilder',
    'rational_approximant',
    'approximant_schedule',
    'PartitionBudgetException',
    'PotapovRepr',
    'bp_to_repr',
    'repr_eval',
    'modified_product_bound',
    'modified_product_error',
    'InvalidRepresentationException'
]
