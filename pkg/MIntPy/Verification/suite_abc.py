from abc import ABC
from abc import abstractmethod


class SuiteABC(ABC):
    """Verification suite base class.

    A suite checks one property on random instances. Subclasses must implement the __call__ method, which builds an
    instance from the given numpy Generator and returns its nonnegative residual; the instance passes when the
    residual is <= tol.

    Subclasses set the class attributes `name` (the lookup name used by the CLI), `proposition` (the property being
    exercised, reported with every run), `reference` (the short identifier of the result it exercises, such as
    'Prop mintdet') and `tol`. Suites whose instances ignore the generator set `randomized = False` and are run
    once.
    """
    name = None
    proposition = None
    reference = None
    tol = 1e-7
    randomized = True

    def __init__(self, **kwds):
        self.tol = kwds.get('tol', self.tol)
        assert self.tol >= 0, f'The tolerance ({self.tol}) should be >= 0.'

    @abstractmethod
    def __call__(self, rng):
        pass

    def __repr__(self):
        return f'{self.__class__.__name__}(name={self.name!r}, tol={self.tol:g})'
