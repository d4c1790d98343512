# Configuration file for the Sphinx documentation app.

# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import sys
from datetime import datetime

# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here.
sys.path.append("../")

from rrrpy import release as rrr_release

# Project information
project = "rrrpy"
copyright = "2023-" + str(datetime.now().year) + ", " + rrr_release.author + "."
author = rrr_release.author
version = rrr_release.version
release = rrr_release.version

master_doc = "index"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx_autodoc_typehints",
]

# Create links to references within rrrpy's documentation to these packages.
intersphinx_mapping = {
    "dask": ("https://docs.dask.org/en/latest", None),
    "networkx": ("https://networkx.org/documentation/stable", None),
    "numba": ("https://numba.readthedocs.io/en/stable", None),
    "numpy": ("https://numpy.org/doc/stable", None),
    "python": ("https://docs.python.org/3", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/reference", None),
}

templates_path = [
    "_templates",
]

exclude_patterns = [
    "_build",
]

html_theme = "sphinx_rtd_theme"

# Syntax highlighting
pygments_style = "friendly"

html_theme_options = {
    "prev_next_buttons_location": "bottom",
}

