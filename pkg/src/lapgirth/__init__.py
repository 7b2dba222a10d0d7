"""Exact Laplacian spectra of small graphs and exhaustive checks of girth-based eigenvalue bounds."""

__version__ = "0.1.0"
