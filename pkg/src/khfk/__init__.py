"""Khovanov and knot Floer homology engines with a Property FK checker."""

__version__ = "0.1.0"
