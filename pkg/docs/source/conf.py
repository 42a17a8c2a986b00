# Configuration file for the Sphinx documentation builder.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys
sys.path.insert(0, os.path.abspath('../../src'))


# -- Project information -----------------------------------------------------

project = 'coxpoly'
copyright = '2026, coxpoly developers'
author = 'coxpoly developers'
release = '0.1'


# -- General configuration ---------------------------------------------------

templates_path = ['_templates']
language = 'en'
exclude_patterns = []
pygments_style = 'sphinx'

# numpy style docstrings
extensions = ['sphinx.ext.napoleon', 'm2r', 'sphinx.ext.autodoc', 'sphinx.ext.autosummary']
source_suffix = ['.rst', '.md']
napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_use_param = False
napoleon_use_ivar = True


# -- Options for HTML output -------------------------------------------------

html_theme = "nature"
html_static_path = ['_static']
