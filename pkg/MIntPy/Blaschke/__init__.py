from .bp_factor import beta
from .bp_factor import BPFactor
from .bp_factor import eval_factor
from .bp_factor import random_bp_factor
from .bp_product import BPProduct
from .bp_product import eval_product
from .bp_product import scalar_blaschke_product
from .bp_product import random_bp_product
from .detachment import detachable
from .detachment import BPFactorizer
from .detachment import detach_max
from .detachment import factor_out_zeros
from .detachment import NoZeroException
from .detachment import IllConditionedFrameException
from .detachment import UnconsumedZerosException
from .zeros import DetZeroFinder
from .zeros import find_det_zeros
from .zeros import ZeroSearchBudgetException

__all__ = [
    'beta',
    'BPFactor',
    'eval_factor',
    'random_bp_factor',
    'BPProduct',
    'eval_product',
    'scalar_blaschke_product',
    'random_bp_product',
    'detachable',
    'BPFactorizer',
    'detach_max',
    'factor_out_zeros',
    'NoZeroException',
    'IllConditionedFrameException',
    'UnconsumedZerosException',
    'DetZeroFinder',
    'find_det_zeros',
    'ZeroSearchBudgetException'
]
