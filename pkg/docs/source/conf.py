# Configuration file for the Sphinx documentation builder.

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))

import qvote


# -- General configuration ---------------------------------------------------

extensions = [
    'recommonmark',
    'sphinxarg.ext',
    'sphinx_rtd_theme',
    'sphinx.ext.autosectionlabel',
]

source_suffix = {
    '.rst': 'restructuredtext',
    '.md': 'markdown',
}

master_doc = 'index'

project = 'qvote'
version = qvote.__version__
release = qvote.__version__

exclude_patterns = []
pygments_style = 'sphinx'
smartquotes = False

# make section labels unique across the documents
autosectionlabel_prefix_document = True


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'style_external_links': True,
    'collapse_navigation': False,
    'titles_only': True,
}

html_show_copyright = False
html_show_sphinx = False
html_show_sourcelink = False

htmlhelp_basename = 'qvotedoc'
