"""
The η transition system shared by the (in)equation automata.

For a homogeneous term t, η(q_I, b̄) = t[σ(b̄)] and η(q, b̄) = ρq + t[b̄]. Read
along a word, η tracks the exact value t[⟨w⟩]; the automata clamp it to a
finite window [m, n] outside of which the verdict can no longer change.
"""

from dataclasses import dataclass
from typing import Sequence

from ..encoding import all_letters, sign_vector
from ..errors import AtomError
from ..formula import Cmp, LinearTerm
from ..type_utils import Letter


@dataclass(frozen=True, slots=True)
class AtomAutomatonSpec:
    """Parameters of the bounded automaton for ``atom``."""
    atom: Cmp
    base: int
    norm_neg: int
    norm_pos: int
    small_max: int
    large_min: int
    gcd_t: int

    @classmethod
    def of(cls, atom: Cmp, base: int) -> "AtomAutomatonSpec":
        if base < 2:
            raise AtomError(f"base must be at least 2, got {base}")
        t, c = atom.term, atom.constant
        return cls(
            atom=atom,
            base=base,
            norm_neg=t.norm_neg,
            norm_pos=t.norm_pos,
            small_max=min(c, -t.norm_pos) - 1,
            large_min=max(c, t.norm_neg) + 1,
            gcd_t=t.content,
        )

    @property
    def arity(self) -> int:
        return len(self.atom.term.coeffs)

    def is_small(self, q: int) -> bool:
        return q < min(self.atom.constant, -self.norm_pos)

    def is_large(self, q: int) -> bool:
        return q > max(self.atom.constant, self.norm_neg)


def eta_init(t: LinearTerm, letter: Letter) -> int:
    return t.at(sign_vector(letter))


def eta_step(t: LinearTerm, q: int, letter: Letter, base: int) -> int:
    return base * q + t.at(letter)


def eta_run(t: LinearTerm, letters: Sequence[Letter], base: int, q: int | None = None) -> int:
    """η̂ from ``q``, or from the initial state when ``q`` is None."""
    it = iter(letters)
    if q is None:
        first = next(it, None)
        if first is None:
            raise AtomError("η̂ from the initial state needs a nonempty word")
        q = eta_init(t, first)
    for letter in it:
        q = eta_step(t, q, letter, base)
    return q


def letter_values(t: LinearTerm, base: int) -> tuple[tuple[int, int], ...]:
    """(t[σ(b̄)], t[b̄]) per letter, in letter index order."""
    return tuple(
        (eta_init(t, b), t.at(b)) for b in all_letters(len(t.coeffs), base)
    )
