"""Automaton for d | t + c, tracking the residue of t[⟨w⟩] modulo d."""

from math import gcd

from ..automaton import Dwa
from ..errors import AtomError
from ..formula import Div
from .eta import letter_values


def build_div(atom: Div, base: int, gcd_filter: bool = False) -> Dwa:
    """
    States q_I and the residues 0..d-1; the residue q accepts iff d | q + c.

    With ``gcd_filter`` only the residues that are multiples of
    gcd(gcd(t), d) are kept, which are exactly the reachable ones.
    """
    d = atom.divisor
    if d < 2:
        raise AtomError(f"divisor must be at least 2, got {d}")
    step = gcd(atom.term.content, d) if gcd_filter else 1
    residues = list(range(0, d, step))

    def index(value: int) -> int:
        return 1 + (value % d) // step

    values = letter_values(atom.term, base)
    delta = [tuple(index(init) for init, _ in values)]
    for q in residues:
        delta.append(tuple(index(base * q + v) for _, v in values))
    accepting = frozenset(index(q) for q in residues if (q + atom.constant) % d == 0)
    return Dwa(
        arity=len(atom.term.coeffs),
        base=base,
        delta=tuple(delta),
        initial=0,
        accepting=accepting,
        labels=("qI", *(str(q) for q in residues)),
    )
