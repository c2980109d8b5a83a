"""Hochschild lattices: triwords, Dyck-path intervals, invariants and Coxeter polynomials."""

from .poset import FinitePoset, PosetError
from .triword import Triword, TriwordError, generate, validate

__all__ = ["FinitePoset", "PosetError", "Triword", "TriwordError", "generate", "validate"]
__version__ = "0.1.0"
