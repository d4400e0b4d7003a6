"""Oracles for the tests. The corpus generators and `corrupt` are re-exported here."""

import random
from typing import Sequence

from ..automaton import Dwa, membership
from ..encoding import TupleWord, decode_int, enumerate_words
from ..engine.corpus import X, Y, Z, corrupt, random_cmp, random_div, random_term
from ..formula import Formula, LinearTerm, VarId
from ..qelim import eval_qf

VARS = (X, Y, Z)


def truth(phi: Formula, tracks: Sequence[VarId], w: TupleWord, base: int) -> bool:
    """Arithmetic truth of a quantifier-free φ at the tuple encoded by ``w``."""
    return eval_qf(phi, dict(zip(tracks, decode_int(w, base), strict=True)))


def oracle_mismatches(
    a: Dwa, phi: Formula, tracks: Sequence[VarId], max_len: int, min_len: int = 1
) -> list[TupleWord]:
    """Words of bounded length on which ``a`` disagrees with φ."""
    return [
        w for w in enumerate_words(a.arity, a.base, max_len, min_len)
        if membership(a, w) != truth(phi, tracks, w, a.base)
    ]


def mixed_sign_term(rng: random.Random, variables: Sequence[VarId], max_coef: int) -> LinearTerm:
    """A term with gcd 1 and at least one positive and one negative coefficient."""
    if len(variables) < 2:
        raise ValueError("mixed signs need at least two variables")
    while True:
        coeffs = [rng.randint(1, max_coef) for _ in variables]
        signs = [1, -1] + [rng.choice([-1, 1]) for _ in variables[2:]]
        rng.shuffle(signs)
        term = LinearTerm.of({v: s * k for v, s, k in zip(variables, signs, coeffs)})
        if term.content == 1:
            return term
