from multiprocessing.pool import ThreadPool

import numpy as np
import pandas as pd

from MIntPy.MatCore import stack_norms
from .file_utils import max_threads

FLOAT_FORMAT = '%.17g'


def grid_columns(dim):
    """r, phi, the matrix entries with real and imaginary parts interleaved, then ||A||, ||AA* - I|| and |det A|."""
    entries = [f'a{i}{j}_{part}' for i in range(dim) for j in range(dim) for part in ('re', 'im')]
    return ['r', 'phi'] + entries + ['norm', 'unitarity_defect', 'abs_det']


def _ring_rows(handle, r, angles):
    values = handle.evaluate_many(r * np.exp(1j * angles))
    dim = values.shape[-1]
    entries = np.stack([values.real, values.imag], axis=-1).reshape(len(angles), 2 * dim * dim)
    defects = stack_norms(values @ np.conj(np.swapaxes(values, -1, -2)) - np.eye(dim))
    if handle.det_fn is not None:
        dets = np.array([handle.det(r * np.exp(1j * phi)) for phi in angles])
    else:
        dets = np.linalg.det(values)
    return np.column_stack([np.full(len(angles), r), angles, entries, stack_norms(values), defects, np.abs(dets)])


def grid_frame(handle, radii, angles, max_concurrent_threads=None):
    """Evaluates a MatrixFunction on the polar grid radii x angles and returns one row per point (radius-major).

    Rings are evaluated by a thread pool; rows always come out in grid order.
    """
    radii = np.asarray(radii, dtype=float).ravel()
    angles = np.asarray(angles, dtype=float).ravel()
    assert len(radii) > 0 and len(angles) > 0, 'The grid should have at least one radius and one angle.'
    assert np.all((radii >= 0) & (radii <= 1)), 'The grid radii should lie in [0, 1].'
    threads = min(max_concurrent_threads or max_threads(), len(radii))

    with ThreadPool(processes=threads) as pool:
        blocks = pool.map(lambda r: _ring_rows(handle, r, angles), radii)
    return pd.DataFrame(np.concatenate(blocks), columns=grid_columns(handle.dim))


def write_csv(df, path):
    """Writes a DataFrame with 17 significant digits, a header row and LF line endings."""
    df.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
    return path


def emit_grid(handle, radii, angles, path, max_concurrent_threads=None):
    """Writes the grid evaluation of a MatrixFunction to a CSV file (see :func:`grid_frame` and :func:`grid_columns`).

    Returns:
        The DataFrame written to path.
    """
    df = grid_frame(handle, radii, angles, max_concurrent_threads)
    write_csv(df, path)
    return df


def parse_grid(d=None):
    """Polar grid from a JSON grid document: 'radii' (list) and either 'angles' (list) or 'n_angles' (uniform angles
    2pi k / n_angles). Default: radii (0.25, 0.5, 0.75, 0.9) and 16 angles."""
    d = d or {}
    radii = np.asarray(d.get('radii', (0.25, 0.5, 0.75, 0.9)), dtype=float).ravel()
    if 'angles' in d:
        angles = np.asarray(d['angles'], dtype=float).ravel()
    else:
        n_angles = int(d.get('n_angles', 16))
        assert n_angles > 0, f'The number of grid angles ({n_angles}) should be > 0.'
        angles = 2 * np.pi * np.arange(n_angles) / n_angles
    return radii, angles
