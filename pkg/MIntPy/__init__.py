from MIntPy import MatCore
from MIntPy import ProdInt
from MIntPy import Blaschke
from MIntPy import Potapov
from MIntPy import Factorization
from MIntPy import IO
from MIntPy import Verification

__all__ = [
    'MatCore',
    'ProdInt',
    'Blaschke',
    'Potapov',
    'Factorization',
    'IO',
    'Verification'
]
