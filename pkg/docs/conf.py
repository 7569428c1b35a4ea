# -*- coding: utf-8 -*-
"""Sphinx configuration of the ladybug-axial documentation."""
from datetime import datetime
import os
import sys

import sphinx_bootstrap_theme

sys.path.insert(0, os.path.abspath('../'))

project = 'ladybug axial'
copyright = '{}, Ladybug Tools'.format(datetime.today().year)
author = 'Ladybug Tools'
release = ''
version = ''

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.imgmath',
    'sphinx.ext.viewcode',
    'sphinx.ext.githubpages',
    'sphinxcontrib.fulltoc',
    'sphinx.ext.napoleon',
    'sphinx_click.ext'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = ['_build']
toc_object_entries_show_parents = 'hide'

# the CLI pages in cli/ are written by hand with the sphinx-click directive
html_theme = 'bootstrap'
html_theme_path = sphinx_bootstrap_theme.get_html_theme_path()
html_theme_options = {
    'navbar_class': 'navbar navbar-inverse',
    'navbar_fixed_top': 'true',
    'navbar_pagenav': True,
    'source_link_position': 'nav',
    'bootswatch_theme': 'united',
    'bootstrap_version': '3',
}
html_sidebars = {'**': ['localtoc.html']}
htmlhelp_basename = 'lbaxialdoc'

autodoc_default_options = {'inherited-members': True}
autodoc_member_order = 'groupwise'
