# Configuration file for the Sphinx documentation builder.
# Full list of options: http://www.sphinx-doc.org/en/master/config

import os
import sys
sys.path.insert(0, os.path.abspath('./../../'))

project = 'MIntPy'
copyright = '2026, MIntPy contributors'
author = 'MIntPy contributors'
version = '0.1'
release = '0.1.0'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = []

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'MIntPydoc'

latex_documents = [
    (master_doc, 'MIntPy.tex', 'MIntPy Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'mintpy', 'MIntPy Documentation', [author], 1)
]
