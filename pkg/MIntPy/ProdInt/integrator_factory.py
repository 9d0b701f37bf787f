from .cantor_integrator import CantorIntegrator
from .density_integrator import DensityIntegrator
from .kernels import ConstantKernel
from .kernels import HerglotzKernel
from .kernels import StepFunction
from .kernels import TabulatedKernel
from .kernels import InvalidKernelException
from .linear_integrator import LinearIntegrator
from .step_integrator import StepIntegrator
from .integrator_abc import InvalidIntegratorException

INTEGRATOR_VARIANTS = ('step', 'piecewise_linear', 'density', 'cantor_singular')
KERNEL_VARIANTS = ('constant', 'herglotz', 'tabulated')


class IntegratorFactory:
    """IntegratorFactory creates integrator instances from a variant name and its data.

    Args:
        variant: One of 'step', 'piecewise_linear', 'density' or 'cantor_singular'.
        a: Left end point of the domain (ignored by 'piecewise_linear', whose first node is used).
        b: Right end point of the domain (ignored by 'piecewise_linear', whose last node is used).
        locations: Jump locations in (a, b] ('step').
        jumps: Jump matrices ('step').
        base: Optional value at a ('step').
        nodes: Strictly increasing nodes ('piecewise_linear').
        values: Node values ('piecewise_linear').
        density: Callable t -> M(t) ('density').
        scale: Positive semidefinite matrix ('cantor_singular').
        depth: Depth of the Cantor approximant ('cantor_singular'). Default: 14.
        increasing: Optional boolean declaring E Hermitian with positive increments. Default: False, except for
            'cantor_singular'.
        name: Optional string used in logs.
    """
    def __new__(cls, variant, a=None, b=None, **kwds):
        try:
            if variant == 'step':
                return StepIntegrator(a, b, kwds.pop('locations'), kwds.pop('jumps'), base=kwds.pop('base', None),
                                      **kwds)
            elif variant == 'piecewise_linear':
                return LinearIntegrator(kwds.pop('nodes'), kwds.pop('values'), **kwds)
            elif variant == 'density':
                return DensityIntegrator(kwds.pop('density'), a, b, **kwds)
            elif variant == 'cantor_singular':
                return CantorIntegrator(kwds.pop('scale'), a=0.0 if a is None else a, b=1.0 if b is None else b,
                                        depth=kwds.pop('depth', 14), **kwds)
        except KeyError as e:
            raise InvalidIntegratorException(f'Missing the argument {e} of the "{variant}" integrator.')

        raise InvalidIntegratorException(f'There is no integrator variant corresponding to the name "{variant}". '
                                         f'Available variants: {INTEGRATOR_VARIANTS}.')


class KernelFactory:
    """KernelFactory creates kernel instances from a variant name and its data.

    Args:
        variant: One of 'constant', 'herglotz' or 'tabulated'.
        c: Complex constant ('constant').
        z: Point of the open unit disk ('herglotz').
        theta: Optional angle data ('herglotz'): None, a real, a StepFunction or a dict with the keys 'jump_points'
            and 'values'. Default: None.
        ts: Sample abscissas ('tabulated').
        values: Complex samples ('tabulated').
        name: Optional string used in logs.
    """
    def __new__(cls, variant, **kwds):
        try:
            if variant == 'constant':
                return ConstantKernel(kwds.pop('c'), **kwds)
            elif variant == 'herglotz':
                theta = kwds.pop('theta', None)
                if isinstance(theta, dict):
                    theta = StepFunction(theta['jump_points'], theta['values'])
                return HerglotzKernel(kwds.pop('z'), theta=theta, **kwds)
            elif variant == 'tabulated':
                return TabulatedKernel(kwds.pop('ts'), kwds.pop('values'), **kwds)
        except KeyError as e:
            raise InvalidKernelException(f'Missing the argument {e} of the "{variant}" kernel.')

        raise InvalidKernelException(f'There is no kernel variant corresponding to the name "{variant}". '
                                     f'Available variants: {KERNEL_VARIANTS}.')
