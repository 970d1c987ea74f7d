"""Exact computations for proper total difference labelings of graphs."""

__version__ = "0.1.0"
