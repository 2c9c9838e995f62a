"""Exact-arithmetic engine for relation modules from coloured grids:
admissibility games, average kernel sizes over finite rings, closed-form
generating-function verification, and conjugacy-class counting."""

__version__ = "0.1.0"
