from .inner import PpInnerSpec
from .inner import ScInnerSpec
from .inner import eval_pp_inner
from .inner import eval_sc_inner
from .outer import OuterSpec
from .outer import eval_outer
from .outer import gram_margins
from .outer import outer_maximality_check
from .outer import BoundaryPreconditionException
from .scalar import herglotz_arc_integral
from .scalar import linear_measure_herglotz
from .scalar import singular_inner_value
from .scalar import ScalarFactorization
from .scalar import scalar_inner_outer
from .scalar import recover_singular_masses
from .scalar import LogIntegrabilityException
from .classification import LABELS
from .classification import det_ring_samples
from .classification import classify_by_det
from .nonuniqueness import nonuniqueness_pair
from .nonuniqueness import nonuniqueness_demo

__all__ = [
    'PpInnerSpec',
    'ScInnerSpec',
    'eval_pp_inner',
    'eval_sc_inner',
    'OuterSpec',
    'eval_outer',
    'gram_margins',
    'outer_maximality_check',
    'BoundaryPreconditionException',
    'herglotz_arc_integral',
    'linear_measure_herglotz',
    'singular_inner_value',
    'ScalarFactorization',
    'scalar_inner_outer',
    'recover_singular_masses',
    'LogIntegrabilityException',
    'LABELS',
    'det_ring_samples',
    'classify_by_det',
    'nonuniqueness_pair',
    'nonuniqueness_demo'
]
