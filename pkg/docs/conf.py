# Sphinx configuration of the ozkit documentation.
#
# The API pages are generated by autodoc from the Django apps, so Django is set up with the project settings before
# any module is imported. Build with ``make -C docs html`` or ``sphinx-build docs docs/_build``.

import os
import sys

import django

sys.path.insert(0, os.path.abspath('..'))
sys.path.append(os.curdir)
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'core.settings')
django.setup()

# -- Project information -----------------------------------------------------

project = 'ozkit'
author = 'ozkit developers'
copyright = f'2025, {author}'
release = '1.0.0'
version = '.'.join(release.split('.')[:2])

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.inheritance_diagram',
    'ext.hocks',
]

exclude_patterns = ['_build', 'ext']

# Library defaults are shown as written, e.g. ``tol=None`` instead of the resolved Tolerance.
autodoc_preserve_defaults = True
# Members in declaration order.
autodoc_member_order = 'bysource'
autodoc_default_options = {
    'members': True,
    'show-inheritance': True,
}
# Type hints such as ``TolLike`` stay in the signatures.
autodoc_typehints = 'signature'
# The diagrams prepended by ext.hocks to the error classes run left to right.
inheritance_graph_attrs = {'rankdir': 'LR', 'size': '"8.0, 4.0"'}
inheritance_node_attrs = {'fontsize': 10, 'shape': 'box'}

# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
html_title = 'ozkit: order zero maps between finite-dimensional C*-algebras'
html_theme_options = {
    'description': 'Detection, decomposition and invariants of order zero maps.',
    'fixed_sidebar': True,
}
