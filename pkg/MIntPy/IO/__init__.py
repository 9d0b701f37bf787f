from .file_utils import max_threads
from .file_utils import output_path
from .json_codec import SCHEMA
from .json_codec import encode_complex
from .json_codec import decode_complex
from .json_codec import encode_matrix
from .json_codec import decode_matrix
from .json_codec import tabulated_density_integrator
from .json_codec import to_dict
from .json_codec import from_dict
from .json_codec import function_from_dict
from .json_codec import dump_document
from .json_codec import load_document
from .json_codec import MalformedSpecException
from .csv_emitter import grid_columns
from .csv_emitter import grid_frame
from .csv_emitter import write_csv
from .csv_emitter import emit_grid
from .csv_emitter import parse_grid

__all__ = [
    'max_threads',
    'output_path',
    'SCHEMA',
    'encode_complex',
    'decode_complex',
    'encode_matrix',
    'decode_matrix',
    'tabulated_density_integrator',
    'to_dict',
    'from_dict',
    'function_from_dict',
    'dump_document',
    'load_document',
    'MalformedSpecException',
    'grid_columns',
    'grid_frame',
    'write_csv',
    'emit_grid',
    'parse_grid'
]
