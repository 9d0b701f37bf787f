import os

DEFAULT_MAX_THREADS = 4


def max_threads():
    """Auxiliary method to return the thread cap of the package thread pools (env var MINTPY_MAX_THREADS)."""
    value = os.environ.get('MINTPY_MAX_THREADS', DEFAULT_MAX_THREADS)
    try:
        value = int(value)
    except ValueError:
        raise Exception(f'MINTPY_MAX_THREADS should be an integer, found "{value}".')
    assert value > 0, f'MINTPY_MAX_THREADS ({value}) should be > 0.'
    return value


def output_path(out_dir, file_name):
    """Auxiliary method to create (if needed) the output directory and to return the path of one of its files."""
    if not os.path.exists(out_dir):
        os.makedirs(out_dir)
    return os.path.join(out_dir, file_name)
