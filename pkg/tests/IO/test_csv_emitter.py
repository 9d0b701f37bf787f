from MIntPy.IO import emit_grid
from MIntPy.IO import grid_columns
from MIntPy.IO import grid_frame
from MIntPy.IO import parse_grid
from MIntPy.Blaschke import BPFactor
from MIntPy.Factorization import OuterSpec
from MIntPy.MatCore import MatrixFunction
from MIntPy.MatCore import random_unitary
import numpy as np
import pandas as pd
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(59)


def test_grid_columns_0():
    assert grid_columns(1) == ['r', 'phi', 'a00_re', 'a00_im', 'norm', 'unitarity_defect', 'abs_det']
    assert len(grid_columns(3)) == 2 + 18 + 3


def test_emit_grid_0(tmp_path):
    """The identity has unit norm and no unitarity defect on every row."""
    path = str(tmp_path / 'identity.csv')
    df = emit_grid(MatrixFunction.identity(2), [0.0, 0.5, 1.0], [0.0, np.pi], path)
    assert len(df) == 6
    assert np.allclose(df['norm'], 1) and np.allclose(df['unitarity_defect'], 0) and np.allclose(df['abs_det'], 1)
    with open(path, 'rb') as fh:
        content = fh.read()
    assert b'\r\n' not in content
    assert content.startswith(b'r,phi,a00_re,a00_im,a01_re,a01_im')


def test_emit_grid_1(rng, tmp_path):
    """A B.P. factor is nearly unitary on the ring r = 1 - 1e-6."""
    b = BPFactor(0.4 - 0.3j, random_unitary(rng, 2), 1).to_mvf()
    df = emit_grid(b, [1 - 1e-6], 2 * np.pi * np.arange(32) / 32, str(tmp_path / 'bp.csv'))
    assert np.all(df['unitarity_defect'] <= 1e-4)


def test_emit_grid_2(tmp_path):
    """Outer functions have a positive determinant column."""
    spec = OuterSpec(lambda t: np.diag([0.1 + 0.05 * np.cos(t), 0.2]))
    df = emit_grid(spec.to_mvf(method='ode'), [0.3, 0.6], [0.0, 2.0], str(tmp_path / 'outer.csv'))
    assert np.all(df['abs_det'] > 0)


def test_emit_grid_3(rng, tmp_path):
    """Written files are reproducible and keep full precision."""
    b = BPFactor(0.2 + 0.1j, random_unitary(rng, 3), 2).to_mvf()
    radii, angles = parse_grid({'radii': [0.1, 0.7], 'n_angles': 5})
    first, second = str(tmp_path / 'a.csv'), str(tmp_path / 'b.csv')
    emit_grid(b, radii, angles, first, max_concurrent_threads=1)
    emit_grid(b, radii, angles, second, max_concurrent_threads=4)
    with open(first, 'rb') as fa, open(second, 'rb') as fb:
        assert fa.read() == fb.read()
    loaded = pd.read_csv(first, float_precision='round_trip')
    assert np.array_equal(loaded.values, grid_frame(b, radii, angles).values)


def test_parse_grid_0():
    radii, angles = parse_grid()
    assert np.allclose(radii, [0.25, 0.5, 0.75, 0.9]) and len(angles) == 16
    radii, angles = parse_grid({'radii': [0.5], 'angles': [0.1, 0.2]})
    assert np.allclose(angles, [0.1, 0.2])
    with pytest.raises(AssertionError):
        grid_frame(MatrixFunction.identity(2), [1.5], [0.0])
