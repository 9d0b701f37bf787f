from MIntPy.IO import MalformedSpecException
from MIntPy.IO import decode_complex
from MIntPy.IO import decode_matrix
from MIntPy.IO import dump_document
from MIntPy.IO import from_dict
from MIntPy.IO import function_from_dict
from MIntPy.IO import load_document
from MIntPy.IO import tabulated_density_integrator
from MIntPy.IO import to_dict
from MIntPy.Blaschke import random_bp_product
from MIntPy.Factorization import OuterSpec
from MIntPy.Factorization import PpInnerSpec
from MIntPy.Factorization import ScInnerSpec
from MIntPy.Potapov import CayleyData
from MIntPy.Potapov import bp_to_repr
from MIntPy.ProdInt import CantorIntegrator
from MIntPy.ProdInt import LinearIntegrator
from MIntPy.ProdInt import StepFunction
from MIntPy.ProdInt import StepIntegrator
from MIntPy.ProdInt import Kernel
import numpy as np
import pytest
import json
import os


@pytest.fixture
def resources_path():
    return os.path.join(os.path.dirname(__file__), 'resources')


@pytest.fixture
def rng():
    return np.random.default_rng(53)


def test_decode_complex_0():
    assert decode_complex(2) == 2 + 0j
    assert decode_complex([0.5, -1.5]) == 0.5 - 1.5j
    with pytest.raises(MalformedSpecException):
        decode_complex('1+2j')
    with pytest.raises(MalformedSpecException):
        decode_complex([1, 2, 3])
    with pytest.raises(MalformedSpecException):
        decode_complex(True)


def test_decode_matrix_0():
    """Entries may mix plain reals and [re, im] pairs."""
    assert np.allclose(decode_matrix([[1, [0, 1]], [[0, -1], 2]]), np.array([[1, 1j], [-1j, 2]]))
    with pytest.raises(MalformedSpecException):
        decode_matrix([[1, 2], [3]])
    with pytest.raises(MalformedSpecException):
        decode_matrix([])


def test_load_document_0(resources_path):
    doc = load_document(os.path.join(resources_path, 'cosh_sinh.json'))
    assert doc['command'] == 'prodint'
    E = from_dict(doc['inputs']['integrator'])
    assert isinstance(E, LinearIntegrator)
    assert np.allclose(E.value(0.5), 0.5 * np.array([[0, 1], [1, 0]]))
    assert from_dict(doc['inputs']['kernel']).c == 1


def test_load_document_1(resources_path, tmp_path):
    """Other schema versions and invalid JSON are rejected."""
    with pytest.raises(MalformedSpecException):
        load_document(os.path.join(resources_path, 'future_schema.json'))
    path = tmp_path / 'broken.json'
    path.write_text('{"schema": 1,')
    with pytest.raises(MalformedSpecException):
        load_document(str(path))


def test_dump_document_0(tmp_path):
    """Documents are written with the schema tag and numpy scalars converted."""
    path = str(tmp_path / 'report.json')
    dump_document({'value': np.float64(0.25), 'count': np.int64(3)}, path)
    with open(path) as fh:
        doc = json.load(fh)
    assert doc == {'schema': 1, 'value': 0.25, 'count': 3}
    assert load_document(path)['count'] == 3


def test_to_dict_0(rng):
    """B.P. products and their Potapov representations survive a JSON trip."""
    B = random_bp_product(rng, 2, 3)
    B2 = from_dict(json.loads(json.dumps(to_dict(B))))
    R = bp_to_repr(B)
    R2 = from_dict(json.loads(json.dumps(to_dict(R))))
    for z in (0.0, 0.3 - 0.4j):
        assert np.allclose(B2(z), B(z))
        assert np.isclose(R2.det(z), R.det(z))
    assert np.allclose(R2.breakpoints, R.breakpoints) and np.allclose(R2.jump_matrices, R.jump_matrices)


def test_to_dict_1():
    """Integrator variants keep their data."""
    step = StepIntegrator(0, 1, [0.5], [np.eye(2)], increasing=True)
    cantor = CantorIntegrator(np.diag([1.0, 0.5]), depth=5)
    tabulated = tabulated_density_integrator([0, 1, 2], [np.eye(2), 2 * np.eye(2), np.eye(2)], increasing=True)
    for E in (step, cantor, tabulated):
        E2 = from_dict(to_dict(E))
        assert type(E2) is type(E)
        assert np.allclose(E2.value(0.75), E.value(0.75))
    assert from_dict(to_dict(cantor)).depth == 5


def test_to_dict_2():
    """Kernels keep their data, including step angle functions."""
    f = Kernel('herglotz', z=0.3j, theta=StepFunction([1.0], [0.5, 2.0]))
    g = from_dict(to_dict(f))
    ts = np.array([0.2, 1.5])
    assert np.allclose(g(ts), f(ts))
    tab = Kernel('tabulated', ts=[0, 1], values=[1j, 2])
    assert np.allclose(from_dict(to_dict(tab))(ts[:1]), tab(ts[:1]))


def test_to_dict_3():
    """Inner and outer specs keep their data."""
    pp = PpInnerSpec([(0.5, 1.0, None), (0.25, 3.0, None)], dim=2)
    sc = ScInnerSpec.cantor(np.diag([0.2, 0.1]), depth=4)
    angles = np.linspace(0, 2 * np.pi, 5)
    outer = OuterSpec.from_samples(angles, [np.diag([0.2 + 0.1 * np.cos(t), 0.3]) for t in angles])
    for spec in (pp, sc, outer):
        spec2 = from_dict(json.loads(json.dumps(to_dict(spec))))
        assert type(spec2) is type(spec)
        assert np.isclose(spec2.det(0.2j), spec.det(0.2j))


def test_to_dict_4():
    cayley = CayleyData(1j, np.zeros((2, 2)), [0.5, 2.0], [np.eye(2), np.diag([1.0, 0.0])])
    cayley2 = from_dict(to_dict(cayley))
    assert np.allclose(cayley2.contraction(0.1), cayley.contraction(0.1))
    with pytest.raises(Exception):
        to_dict(OuterSpec(lambda t: np.eye(2) * 0.1))


def test_from_dict_0():
    with pytest.raises(MalformedSpecException):
        from_dict({'type': 'spline'})
    with pytest.raises(MalformedSpecException):
        from_dict({'type': 'integrator', 'variant': 'gaussian'})
    with pytest.raises(MalformedSpecException):
        from_dict({'type': 'integrator', 'variant': 'piecewise_linear', 'nodes': [0, 1]})
    with pytest.raises(MalformedSpecException):
        from_dict({'type': 'bp_product', 'factors': [{'zero': 1.5, 'frame': [[1, 0], [0, 1]], 'rank': 1}]})
    with pytest.raises(MalformedSpecException):
        from_dict([1, 2])


def test_function_from_dict_0():
    """Compositions multiply their factors left to right."""
    doc = {'type': 'compose', 'factors': [
        {'type': 'bp_product', 'factors': [{'zero': 0.5, 'frame': [[1, 0], [0, 1]], 'rank': 1}]},
        {'type': 'constant', 'matrix': [[0.5, 0], [0, [0, 0.5]]]}
    ]}
    A = function_from_dict(doc)
    z = 0.1 + 0.2j
    beta = (0.5 - z) / (1 - 0.5 * z)
    assert np.allclose(A(z), np.diag([0.5 * beta, 0.5j]))
    assert np.isclose(A.det(z), 0.25j * beta)
    with pytest.raises(MalformedSpecException):
        function_from_dict({'type': 'compose', 'factors': []})
    with pytest.raises(MalformedSpecException):
        function_from_dict({'type': 'integrator'})
