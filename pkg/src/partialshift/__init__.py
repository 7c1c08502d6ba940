"""Partial actions of free groups on shift spaces and their finite shadows."""
from .free_group import Letter, ReducedWord, reduce, multiply, invert, degree, one_sided_normal_form
from .shift_space import (ShiftPresentation, Point, Side, InputError, Inconclusive, Equality,
                          ev_periodic, two_sided_periodic, shift, two_sided_shift_inverse, point_equal)
from .partial_action import PartialAction

__version__ = "0.1.0"

__all__ = [
    "Letter", "ReducedWord", "reduce", "multiply", "invert", "degree", "one_sided_normal_form",
    "ShiftPresentation", "Point", "Side", "InputError", "Inconclusive", "Equality",
    "ev_periodic", "two_sided_periodic", "shift", "two_sided_shift_inverse", "point_equal",
    "PartialAction",
]
