"""Riordan paths, short bushes, pattern-avoiding derangements and the
bijections between them."""

from . import bijections, paths, permutations, sequences, trees

__version__ = "0.1.0"
