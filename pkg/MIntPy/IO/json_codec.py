import json
import numbers

import numpy as np
import scipy.interpolate

from MIntPy.Blaschke import BPFactor
from MIntPy.Blaschke import BPProduct
from MIntPy.Factorization import OuterSpec
from MIntPy.Factorization import PpInnerSpec
from MIntPy.Factorization import ScInnerSpec
from MIntPy.MatCore import MatrixFunction
from MIntPy.Potapov import CayleyData
from MIntPy.Potapov import InvalidRepresentationException
from MIntPy.Potapov import PotapovRepr
from MIntPy.ProdInt import CantorIntegrator
from MIntPy.ProdInt import ConstantKernel
from MIntPy.ProdInt import DensityIntegrator
from MIntPy.ProdInt import HerglotzKernel
from MIntPy.ProdInt import Integrator
from MIntPy.ProdInt import InvalidIntegratorException
from MIntPy.ProdInt import InvalidKernelException
from MIntPy.ProdInt import Kernel
from MIntPy.ProdInt import LinearIntegrator
from MIntPy.ProdInt import StepFunction
from MIntPy.ProdInt import StepIntegrator
from MIntPy.ProdInt import TabulatedKernel

SCHEMA = 1
FUNCTION_TYPES = ('bp_product', 'potapov_repr', 'cayley_data', 'pp_inner', 'sc_inner', 'outer', 'constant',
                  'compose')


""" Complex numbers and matrices """


def encode_complex(c):
    c = complex(c)
    return [c.real, c.imag]


def decode_complex(x):
    """Decodes a [re, im] pair; plain reals are accepted too."""
    if isinstance(x, numbers.Real) and not isinstance(x, bool):
        return complex(x)
    if isinstance(x, (list, tuple)) and len(x) == 2 and all(isinstance(p, numbers.Real) for p in x):
        return complex(x[0], x[1])
    raise MalformedSpecException(f'Expected a real number or a [re, im] pair, found {x!r}.')


def encode_matrix(m):
    return [[encode_complex(entry) for entry in row] for row in np.asarray(m)]


def decode_matrix(x):
    if not isinstance(x, list) or len(x) == 0 or not all(isinstance(row, list) for row in x):
        raise MalformedSpecException(f'Expected a matrix as a nonempty list of rows, found {x!r}.')
    if any(len(row) != len(x) for row in x):
        raise MalformedSpecException(f'Expected a square matrix, found rows of lengths {[len(row) for row in x]}.')
    return np.array([[decode_complex(entry) for entry in row] for row in x], dtype=complex)


def encode_stack(stack):
    return [encode_matrix(m) for m in stack]


def decode_stack(x, dim=None):
    if not isinstance(x, list):
        raise MalformedSpecException(f'Expected a list of matrices, found {x!r}.')
    if len(x) == 0:
        return np.zeros((0, dim or 0, dim or 0), dtype=complex)
    stack = np.array([decode_matrix(m) for m in x])
    if stack.ndim != 3:
        raise MalformedSpecException('The matrices of a list should share their dimension.')
    return stack


def _reals(x, key):
    try:
        return np.asarray(x, dtype=float).ravel()
    except (TypeError, ValueError):
        raise MalformedSpecException(f'Expected a list of reals for "{key}", found {x!r}.')


def _field(d, key, default=KeyError):
    if key in d:
        return d[key]
    if default is KeyError:
        raise MalformedSpecException(f'Missing the field "{key}" in the "{d.get("type", "?")}" document.')
    return default


""" Integrators and kernels """


def tabulated_density_integrator(ts, values, **kwds):
    """DensityIntegrator whose density linearly interpolates the matrices values[k] at the nodes ts[k]."""
    ts = np.asarray(ts, dtype=float).ravel()
    values = np.asarray(values, dtype=complex)
    if len(ts) < 2 or values.shape[0] != len(ts) or np.any(np.diff(ts) <= 0):
        raise InvalidIntegratorException('Expected at least two strictly increasing nodes with matching values.')
    table = scipy.interpolate.interp1d(ts, np.stack([values.real, values.imag], axis=-1), axis=0, assume_sorted=True)

    def density(points):
        parts = table(np.clip(points, ts[0], ts[-1]))
        return parts[..., 0] + 1j * parts[..., 1]

    E = DensityIntegrator(density, ts[0], ts[-1], breakpoints=ts[1:-1], vectorized=True, **kwds)
    E.samples = (ts, values)
    return E


def integrator_to_dict(E):
    base = {'type': 'integrator', 'increasing': bool(E.increasing), 'name': E.name}
    if isinstance(E, CantorIntegrator):
        return {**base, 'variant': 'cantor_singular', 'a': E.a, 'b': E.b, 'scale': encode_matrix(E.scale),
                'depth': int(E.depth)}
    if isinstance(E, LinearIntegrator):
        return {**base, 'variant': 'piecewise_linear', 'nodes': E.nodes.tolist(), 'values': encode_stack(E.values)}
    if isinstance(E, StepIntegrator):
        return {**base, 'variant': 'step', 'a': E.a, 'b': E.b, 'locations': E.locations.tolist(),
                'jumps': encode_stack(E.jump_matrices), 'base': encode_matrix(E.base)}
    if isinstance(E, DensityIntegrator) and getattr(E, 'samples', None) is not None:
        return {**base, 'variant': 'density', 'ts': E.samples[0].tolist(), 'values': encode_stack(E.samples[1])}
    raise Exception(f'The integrator "{E.name}" wraps a user callable and cannot be serialized.')


def integrator_from_dict(d):
    variant = _field(d, 'variant')
    kwds = {'increasing': bool(d.get('increasing', variant == 'cantor_singular'))}
    if 'hermitian' in d:
        kwds['hermitian'] = bool(d['hermitian'])
    if 'name' in d:
        kwds['name'] = str(d['name'])
    try:
        if variant == 'step':
            jumps = decode_stack(_field(d, 'jumps'))
            base = decode_matrix(d['base']) if 'base' in d else None
            if len(jumps) == 0 and base is None:
                raise MalformedSpecException('A step integrator without jumps needs a "base" matrix.')
            return Integrator('step', float(_field(d, 'a')), float(_field(d, 'b')),
                              locations=_reals(_field(d, 'locations'), 'locations'), jumps=jumps, base=base, **kwds)
        elif variant == 'piecewise_linear':
            return Integrator('piecewise_linear', nodes=_reals(_field(d, 'nodes'), 'nodes'),
                              values=decode_stack(_field(d, 'values')), **kwds)
        elif variant == 'cantor_singular':
            return Integrator('cantor_singular', float(d.get('a', 0.0)), float(d.get('b', 2 * np.pi)),
                              scale=decode_matrix(_field(d, 'scale')), depth=int(d.get('depth', 14)), **kwds)
        elif variant == 'density':
            return tabulated_density_integrator(_reals(_field(d, 'ts'), 'ts'), decode_stack(_field(d, 'values')),
                                                **kwds)
        return Integrator(variant, **kwds)
    except (InvalidIntegratorException, AssertionError) as e:
        raise MalformedSpecException(f'Invalid "{variant}" integrator: {e}')


def kernel_to_dict(f):
    if isinstance(f, ConstantKernel):
        return {'type': 'kernel', 'variant': 'constant', 'c': encode_complex(f.c)}
    if isinstance(f, HerglotzKernel):
        theta = f.theta
        if isinstance(theta, StepFunction):
            theta = {'jump_points': theta.jump_points.tolist(), 'values': theta.values.tolist()}
        elif theta is not None and not np.isscalar(theta):
            raise Exception('A Herglotz kernel with a callable angle function cannot be serialized.')
        return {'type': 'kernel', 'variant': 'herglotz', 'z': encode_complex(f.z),
                'theta': theta if theta is None or isinstance(theta, dict) else float(theta)}
    if isinstance(f, TabulatedKernel):
        return {'type': 'kernel', 'variant': 'tabulated', 'ts': f.ts.tolist(),
                'values': [encode_complex(v) for v in f.values]}
    raise Exception(f'The kernel "{f.name}" wraps a user callable and cannot be serialized.')


def kernel_from_dict(d):
    variant = _field(d, 'variant')
    try:
        if variant == 'constant':
            return Kernel('constant', c=decode_complex(_field(d, 'c')))
        elif variant == 'herglotz':
            theta = d.get('theta')
            if theta is not None and not isinstance(theta, dict):
                theta = float(theta)
            return Kernel('herglotz', z=decode_complex(_field(d, 'z')), theta=theta)
        elif variant == 'tabulated':
            return Kernel('tabulated', ts=_reals(_field(d, 'ts'), 'ts'),
                          values=np.array([decode_complex(v) for v in _field(d, 'values')]))
        return Kernel(variant)
    except (InvalidKernelException, AssertionError) as e:
        raise MalformedSpecException(f'Invalid "{variant}" kernel: {e}')


""" Functions on the disk """


def _tail_to_json(tail):
    return encode_matrix(tail)


def _tail_from_json(d):
    return decode_matrix(d['tail_unitary']) if d.get('tail_unitary') is not None else None


def to_dict(obj):
    """Encodes a library object (integrator, kernel, B.P. product, Potapov representation, Cayley data or inner/outer
    spec) into a JSON-compatible dict tagged by its "type"."""
    if isinstance(obj, (StepIntegrator, LinearIntegrator, DensityIntegrator)):
        return integrator_to_dict(obj)
    if isinstance(obj, (ConstantKernel, HerglotzKernel, TabulatedKernel)):
        return kernel_to_dict(obj)
    if isinstance(obj, BPProduct):
        return {'type': 'bp_product', 'dim': obj.dim, 'tail_unitary': _tail_to_json(obj.tail_unitary),
                'factors': [{'zero': encode_complex(b.zero), 'frame': encode_matrix(b.frame), 'rank': b.rank}
                            for b in obj.factors]}
    if isinstance(obj, PotapovRepr):
        return {'type': 'potapov_repr', 'breakpoints': obj.breakpoints.tolist(),
                'jump_matrices': encode_stack(obj.jump_matrices), 'angles': obj.angles.tolist(),
                'tail_unitary': _tail_to_json(obj.tail_unitary), 'L': obj.L}
    if isinstance(obj, CayleyData):
        return {'type': 'cayley_data', 'rotation': encode_complex(obj.rotation), 'offset': encode_matrix(obj.offset),
                'angles': obj.angles.tolist(), 'masses': encode_stack(obj.masses)}
    if isinstance(obj, PpInnerSpec):
        return {'type': 'pp_inner', 'dim': obj.dim, 'tail_unitary': _tail_to_json(obj.tail_unitary),
                'blocks': [{'length': length, 'angle': angle, 'integrator': integrator_to_dict(E)}
                           for length, angle, E in obj.blocks]}
    if isinstance(obj, ScInnerSpec):
        return {'type': 'sc_inner', 'integrator': integrator_to_dict(obj.integrator),
                'tail_unitary': _tail_to_json(obj.tail_unitary)}
    if isinstance(obj, OuterSpec):
        if obj.samples is None:
            raise Exception('Only outer specs with a tabulated density can be serialized.')
        return {'type': 'outer', 'angles': obj.samples[0].tolist(), 'values': encode_stack(obj.samples[1]),
                'tail_unitary': _tail_to_json(obj.tail_unitary)}
    raise Exception(f'There is no JSON codec corresponding to the type "{type(obj).__name__}".')


def from_dict(d):
    """Decodes a dict produced by :func:`to_dict`."""
    if not isinstance(d, dict):
        raise MalformedSpecException(f'Expected a JSON object, found {type(d).__name__}.')
    kind = _field(d, 'type')
    try:
        if kind == 'integrator':
            return integrator_from_dict(d)
        elif kind == 'kernel':
            return kernel_from_dict(d)
        elif kind == 'bp_product':
            factors = [BPFactor(decode_complex(_field(f, 'zero')), decode_matrix(_field(f, 'frame')),
                                int(_field(f, 'rank'))) for f in _field(d, 'factors', [])]
            return BPProduct(factors, _tail_from_json(d), dim=d.get('dim'))
        elif kind == 'potapov_repr':
            return PotapovRepr(_reals(_field(d, 'breakpoints'), 'breakpoints'),
                               decode_stack(_field(d, 'jump_matrices'), d.get('dim')),
                               _reals(_field(d, 'angles'), 'angles'), _tail_from_json(d), L=d.get('L'),
                               dim=d.get('dim'))
        elif kind == 'cayley_data':
            offset = decode_matrix(_field(d, 'offset'))
            return CayleyData(decode_complex(_field(d, 'rotation')), offset, _reals(_field(d, 'angles'), 'angles'),
                              decode_stack(_field(d, 'masses'), offset.shape[0]))
        elif kind == 'pp_inner':
            blocks = [(float(_field(b, 'length')), float(_field(b, 'angle')),
                       integrator_from_dict(b['integrator']) if b.get('integrator') is not None else None)
                      for b in _field(d, 'blocks')]
            return PpInnerSpec(blocks, _tail_from_json(d), dim=d.get('dim'))
        elif kind == 'sc_inner':
            if 'integrator' in d:
                return ScInnerSpec(integrator_from_dict(d['integrator']), _tail_from_json(d))
            return ScInnerSpec.cantor(decode_matrix(_field(d, 'scale')), int(d.get('depth', 14)), _tail_from_json(d))
        elif kind == 'outer':
            return OuterSpec.from_samples(_reals(_field(d, 'angles'), 'angles'), decode_stack(_field(d, 'values')),
                                          _tail_from_json(d))
    except MalformedSpecException:
        raise
    except (AssertionError, InvalidIntegratorException, InvalidRepresentationException, ValueError, TypeError) as e:
        raise MalformedSpecException(f'Invalid "{kind}" document: {e}')

    raise MalformedSpecException(f'There is no document type corresponding to the name "{kind}".')


def function_from_dict(d, tol=1e-8):
    """Decodes a function document into a MatrixFunction.

    Besides the types handled by :func:`from_dict`, the document may be a 'constant' ({'matrix': ...}) or a
    'compose' ({'factors': [...]}), the left-to-right product of its factor functions.
    """
    kind = _field(d, 'type') if isinstance(d, dict) else None
    if kind not in FUNCTION_TYPES:
        raise MalformedSpecException(f'There is no function type corresponding to the name "{kind}". '
                                     f'Available types: {FUNCTION_TYPES}.')
    if kind == 'constant':
        return MatrixFunction.constant(decode_matrix(_field(d, 'matrix')))
    if kind == 'compose':
        factors = _field(d, 'factors')
        if not isinstance(factors, list) or len(factors) == 0:
            raise MalformedSpecException('A "compose" document needs a nonempty list of factors.')
        mvf = function_from_dict(factors[0], tol)
        for factor in factors[1:]:
            nxt = function_from_dict(factor, tol)
            if nxt.dim != mvf.dim:
                raise MalformedSpecException(f'Cannot compose functions of dimensions {mvf.dim} and {nxt.dim}.')
            mvf = mvf @ nxt
        return mvf

    obj = from_dict(d)
    if isinstance(obj, (PpInnerSpec, ScInnerSpec, OuterSpec)):
        return obj.to_mvf(tol=tol, **({'method': 'ode'} if isinstance(obj, OuterSpec) else {}))
    if isinstance(obj, CayleyData):
        return MatrixFunction(obj.contraction, obj.dim, contractive=True, batch_fn=obj.contraction_many,
                              name='cayley')
    return obj.to_mvf()


""" Documents """


def dump_document(doc, path):
    """Writes a JSON document tagged with the current schema."""
    with open(path, 'w') as fh:
        json.dump({'schema': SCHEMA, **doc}, fh, indent=2, sort_keys=True, default=_json_default)
        fh.write('\n')


def load_document(path):
    """Reads a JSON document, rejecting other schema versions."""
    try:
        with open(path, 'r') as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as e:
        raise MalformedSpecException(f'The file "{path}" is not valid JSON: {e}')
    if not isinstance(doc, dict):
        raise MalformedSpecException(f'The document "{path}" should hold a JSON object.')
    if doc.get('schema') != SCHEMA:
        raise MalformedSpecException(f'Unsupported schema {doc.get("schema")!r} in "{path}" (expected {SCHEMA}).')
    return doc


def _json_default(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, complex):
        return encode_complex(obj)
    raise TypeError(f'Object of type {type(obj).__name__} is not JSON serializable.')


class MalformedSpecException(Exception):
    pass
