"""Exact computations in the Yangian Y_n and shifted Yangians over GF(p)."""

from .algebra import CommutativeAlgebra, ContextMismatch, Element, PrecisionError, commutator, pth_power
from .field import FieldElem, binom_mod_p
from .graded import current_algebra, leading_term, loop_degree
from .pbw import Yangian, yangian
from .series import MatrixSeries, Series, generator_series, invert, mul, shift_arg

__all__ = [
    "CommutativeAlgebra",
    "ContextMismatch",
    "Element",
    "FieldElem",
    "MatrixSeries",
    "PrecisionError",
    "Series",
    "Yangian",
    "binom_mod_p",
    "commutator",
    "current_algebra",
    "generator_series",
    "invert",
    "leading_term",
    "loop_degree",
    "mul",
    "pth_power",
    "shift_arg",
    "yangian",
]
