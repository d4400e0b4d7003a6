"""Presburger formulas: terms, syntax tree, parser and metrics."""

from .terms import VarId, LinearTerm, AffineTerm
from .syntax import (
    Rel,
    Cmp,
    Div,
    TrueLit,
    FalseLit,
    TRUE,
    FALSE,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Exists,
    Forall,
    Atom,
    Formula,
    normalize_atom,
    make_div,
    conj,
    disj,
    is_quantifier_free,
)
from .parser import parse
from .metrics import (
    LengthMeasure,
    MetricsReport,
    metrics,
    length,
    qn,
    qa,
    qbl,
    free_vars,
    bound_vars,
    all_vars,
    rename_apart,
    rename_vars,
    t_set,
    d_set,
)

__all__ = [
    "VarId",
    "LinearTerm",
    "AffineTerm",
    "Rel",
    "Cmp",
    "Div",
    "TrueLit",
    "FalseLit",
    "TRUE",
    "FALSE",
    "Not",
    "And",
    "Or",
    "Implies",
    "Iff",
    "Exists",
    "Forall",
    "Atom",
    "Formula",
    "normalize_atom",
    "make_div",
    "conj",
    "disj",
    "is_quantifier_free",
    "parse",
    "LengthMeasure",
    "MetricsReport",
    "metrics",
    "length",
    "qn",
    "qa",
    "qbl",
    "free_vars",
    "bound_vars",
    "all_vars",
    "rename_apart",
    "rename_vars",
    "t_set",
    "d_set",
]
