"""Exact Littlewood-Richardson coefficients from puzzles, transfer matrices
and tableaux, with equivariant polynomial weights."""

__version__ = "0.1.0"
