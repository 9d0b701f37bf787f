from .partition import TaggedPartition
from .partition import TagOutsideCellException
from .kernels import herglotz_kernel
from .kernels import StepFunction
from .kernels import KernelABC
from .kernels import ConstantKernel
from .kernels import HerglotzKernel
from .kernels import TabulatedKernel
from .kernels import CallableKernel
from .kernels import InvalidKernelException
from .monotone_map import MonotoneMap
from .monotone_map import NotStrictlyIncreasingException
from .integrator_abc import IntegratorABC
from .integrator_abc import InvalidIntegratorException
from .step_integrator import StepIntegrator
from .linear_integrator import LinearIntegrator
from .density_integrator import DensityIntegrator
from .cantor_integrator import CantorIntegrator
from .cantor_integrator import cantor_function
from .derived_integrators import ConjugatedIntegrator
from .derived_integrators import ComposedIntegrator
from .integrator_factory import IntegratorFactory as Integrator
from .integrator_factory import KernelFactory as Kernel
from .riemann_sums import riemann_product
from .riemann_sums import ordered_product
from .convergence_tracker import ConvergenceTracker
from .estimates import stieltjes_integral
from .estimates import determinant_formula
from .estimates import variation
from .estimates import norm_bound
from .estimates import taylor_certificate
from .estimates import telescoping_difference
from .estimates import additive_stieltjes_bound
from .estimates import product_estimate
from .product_integral import ProdIntResult
from .product_integral import ProductIntegrator
from .product_integral import prod_integral
from .product_integral import split_product
from .product_integral import gram_product
from .product_integral import change_of_variables
from .product_integral import lebesgue_form
from .product_integral import cauchy_gap
from .product_integral import NonConvergenceException
from .ode_integral import ode_integral
from .ode_integral import StepOverflowException
from .helly import helly_convergence_harness

__all__ = [
    'TaggedPartition',
    'TagOutsideCellException',
    'herglotz_kernel',
    'StepFunction',
    'KernelABC',
    'ConstantKernel',
    'HerglotzKernel',
    'TabulatedKernel',
    'CallableKernel',
    'InvalidKernelException',
    'MonotoneMap',
    'NotStrictlyIncreasingException',
    'IntegratorABC',
    'InvalidIntegratorException',
    'StepIntegrator',
    'LinearIntegrator',
    'DensityIntegrator',
    'CantorIntegrator',
    'cantor_function',
    'ConjugatedIntegrator',
    'ComposedIntegrator',
    'Integrator',
    'Kernel',
    'riemann_product',
    'ordered_product',
    'ConvergenceTracker',
    'stieltjes_integral',
    'determinant_formula',
    'variation',
    'norm_bound',
    'taylor_certificate',
    'telescoping_difference',
    'additive_stieltjes_bound',
    'product_estimate',
    'ProdIntResult',
    'ProductIntegrator',
    'prod_integral',
    'split_product',
    'gram_product',
    'change_of_variables',
    'lebesgue_form',
    'cauchy_gap',
    'NonConvergenceException',
    'ode_integral',
    'StepOverflowException',
    'helly_convergence_harness'
]
