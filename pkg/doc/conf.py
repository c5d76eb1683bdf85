# Sphinx configuration for the nhqm manual.

from pathlib import Path
import sys

from packaging.version import Version
import pep517.meta

root = str(Path(__file__).parents[1])
sys.path.insert(0, root)

metadata = pep517.meta.load(root).metadata

project = metadata['name']
author = metadata['author']
release = metadata['version']
version = Version(release).public
copyright = '2026, The nhqm developers'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosectionlabel',
    'sphinx.ext.autosummary',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx_argparse_cli'
]

exclude_patterns = ['_build']
modindex_common_prefix = ['nhqm.']

# Section labels repeat across tool pages.
autosectionlabel_prefix_document = True

autodoc_default_options = {'members': True, 'show-inheritance': True}
autodoc_member_order = 'bysource'
autosummary_generate = True

intersphinx_mapping = {
    'astropy': ('https://docs.astropy.org/en/stable/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'python': ('https://docs.python.org/3/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}

html_theme = 'pydata_sphinx_theme'
html_use_modindex = True
