"""Test utilities for pdwa."""

from .helpers import (
    VARS,
    X,
    Y,
    Z,
    corrupt,
    mixed_sign_term,
    oracle_mismatches,
    random_cmp,
    random_div,
    random_term,
    truth,
)

__all__ = [
    "VARS",
    "X",
    "Y",
    "Z",
    "corrupt",
    "mixed_sign_term",
    "oracle_mismatches",
    "random_cmp",
    "random_div",
    "random_term",
    "truth",
]
