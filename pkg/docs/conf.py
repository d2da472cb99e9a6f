# ruff: noqa: PTH100
# Configuration file for the Sphinx documentation builder.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

sys.path.insert(0, os.path.abspath(".."))
os.environ.setdefault("FAIRREPS_SETTINGS_MODULE", "config.settings.base")

# -- Project information -----------------------------------------------------

project = "fairreps"
copyright = """2025, The fairreps developers"""  # noqa: A001
author = "The fairreps developers"

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
]
autodoc_member_order = "bysource"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# -- Options for HTML output -------------------------------------------------

html_theme = "alabaster"
