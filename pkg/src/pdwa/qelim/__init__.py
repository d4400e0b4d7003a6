"""Quantifier elimination, direct evaluation and growth-bound checks."""

from .rewrite import (
    Congruence,
    LowerBound,
    Unrelated,
    UpperBound,
    XClassifiedAtom,
    classify,
    simplify,
    step1_rewrite,
)
from .cooper import (
    QeTrace,
    eliminate_all,
    eliminate_exists,
    lcm_of,
    psi_minus_inf,
    substitute,
)
from .evaluate import eval_bounded, eval_qf
from .bounds import BIT_CAP, BoundCheck, BoundFamily, BoundsReport, check_bounds, pow_or_none

__all__ = [
    "Congruence",
    "LowerBound",
    "Unrelated",
    "UpperBound",
    "XClassifiedAtom",
    "classify",
    "simplify",
    "step1_rewrite",
    "QeTrace",
    "eliminate_all",
    "eliminate_exists",
    "lcm_of",
    "psi_minus_inf",
    "substitute",
    "eval_bounded",
    "eval_qf",
    "BIT_CAP",
    "BoundCheck",
    "BoundFamily",
    "BoundsReport",
    "check_bounds",
    "pow_or_none",
]
