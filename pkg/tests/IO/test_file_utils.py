from MIntPy.IO import max_threads
from MIntPy.IO import output_path
import os
import pytest


def test_max_threads_0(monkeypatch):
    monkeypatch.delenv('MINTPY_MAX_THREADS', raising=False)
    assert max_threads() == 4
    monkeypatch.setenv('MINTPY_MAX_THREADS', '2')
    assert max_threads() == 2


def test_max_threads_1(monkeypatch):
    monkeypatch.setenv('MINTPY_MAX_THREADS', 'many')
    with pytest.raises(Exception):
        max_threads()
    monkeypatch.setenv('MINTPY_MAX_THREADS', '0')
    with pytest.raises(AssertionError):
        max_threads()


def test_output_path_0(tmp_path):
    out_dir = str(tmp_path / 'nested' / 'out')
    path = output_path(out_dir, 'grid.csv')
    assert os.path.isdir(out_dir)
    assert path == os.path.join(out_dir, 'grid.csv')
