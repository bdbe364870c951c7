"""Braid monodromy of Brieskorn-Pham singularities: words, generators,
Hurwitz actions, discriminant polynomials and presentations."""

from .multiindex import ExponentVector, build_dynkin, enumerate_indices
from .words import BraidWord, FreeWord, artin_action, braids_equal

__version__ = "0.1.0"
