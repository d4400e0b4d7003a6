"""Word automata over tuple-of-digit alphabets and their closure operations."""

from .dwa import Dwa, Nfa, membership, trivial
from .ops import (
    Connective,
    align,
    as_nfa,
    complement_set,
    cylindrify,
    determinize,
    product,
    project_exists,
)
from .minimize import equivalent, find_witness, is_empty_nonlambda, minimize, reachable, trim
from .dot import to_dot

__all__ = [
    "Dwa",
    "Nfa",
    "membership",
    "trivial",
    "Connective",
    "align",
    "as_nfa",
    "complement_set",
    "cylindrify",
    "determinize",
    "product",
    "project_exists",
    "equivalent",
    "find_witness",
    "is_empty_nonlambda",
    "minimize",
    "reachable",
    "trim",
    "to_dot",
]
