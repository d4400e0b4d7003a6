"""
Syntax tree of Presburger formulas over the extended language.

Atoms are always stored in normalized form: ``Cmp`` is ``t ⋈ c`` with a
homogeneous term on the left and the constant on the right, ``Div`` is
``d | t + c``. Use ``normalize_atom`` / ``make_div`` to build them from raw
terms; both fold variable-free atoms to ``TRUE`` / ``FALSE``.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import StrEnum
from typing import TypeAlias

from ..errors import FormulaError
from .terms import AffineTerm, LinearTerm, VarId


class Rel(StrEnum):
    EQ = "="
    NE = "!="
    LT = "<"
    LE = "<="
    GT = ">"
    GE = ">="

    def holds(self, lhs: int, rhs: int) -> bool:
        match self:
            case Rel.EQ:
                return lhs == rhs
            case Rel.NE:
                return lhs != rhs
            case Rel.LT:
                return lhs < rhs
            case Rel.LE:
                return lhs <= rhs
            case Rel.GT:
                return lhs > rhs
            case Rel.GE:
                return lhs >= rhs

    def negated(self) -> "Rel":
        return _NEGATED[self]

    def flipped(self) -> "Rel":
        """The relation obtained by swapping both sides."""
        return _FLIPPED[self]


_NEGATED = {
    Rel.EQ: Rel.NE, Rel.NE: Rel.EQ,
    Rel.LT: Rel.GE, Rel.GE: Rel.LT,
    Rel.LE: Rel.GT, Rel.GT: Rel.LE,
}
_FLIPPED = {
    Rel.EQ: Rel.EQ, Rel.NE: Rel.NE,
    Rel.LT: Rel.GT, Rel.GT: Rel.LT,
    Rel.LE: Rel.GE, Rel.GE: Rel.LE,
}


@dataclass(frozen=True, slots=True)
class TrueLit:
    def __str__(self) -> str:
        return "true"


@dataclass(frozen=True, slots=True)
class FalseLit:
    def __str__(self) -> str:
        return "false"


TRUE = TrueLit()
FALSE = FalseLit()


@dataclass(frozen=True, slots=True)
class Cmp:
    """Normalized (in)equation ``term rel constant``."""
    term: LinearTerm
    rel: Rel
    constant: int

    def __str__(self) -> str:
        return f"{self.term} {self.rel} {self.constant}"


@dataclass(frozen=True, slots=True)
class Div:
    """Normalized divisibility ``divisor | term + constant`` with divisor ≥ 2."""
    divisor: int
    term: LinearTerm
    constant: int

    def __post_init__(self):
        if self.divisor < 2:
            raise FormulaError(f"divisor must be at least 2, got {self.divisor}")

    def __str__(self) -> str:
        return f"{self.divisor} divides {AffineTerm(self.term, self.constant)}"


@dataclass(frozen=True, slots=True)
class Not:
    body: "Formula"

    def __str__(self) -> str:
        return f"!{_wrap(self.body, unary=True)}"


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return f"{_wrap(self.left, same=And)} & {_wrap(self.right)}"


@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return f"{_wrap(self.left, same=Or)} | {_wrap(self.right)}"


@dataclass(frozen=True, slots=True)
class Implies:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return f"{_wrap(self.left)} -> {_wrap(self.right, same=Implies)}"


@dataclass(frozen=True, slots=True)
class Iff:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return f"{_wrap(self.left, same=Iff)} <-> {_wrap(self.right)}"


@dataclass(frozen=True, slots=True)
class Exists:
    var: VarId
    body: "Formula"

    def __str__(self) -> str:
        return f"E {self.var}. {self.body}"


@dataclass(frozen=True, slots=True)
class Forall:
    var: VarId
    body: "Formula"

    def __str__(self) -> str:
        return f"A {self.var}. {self.body}"


Atom: TypeAlias = Cmp | Div
Literal: TypeAlias = TrueLit | FalseLit
Binary: TypeAlias = And | Or | Implies | Iff
Quantified: TypeAlias = Exists | Forall
Formula: TypeAlias = Cmp | Div | TrueLit | FalseLit | Not | And | Or | Implies | Iff | Exists | Forall

BINARY_TYPES = (And, Or, Implies, Iff)
QUANTIFIER_TYPES = (Exists, Forall)


def _wrap(f: "Formula", same: type | None = None, unary: bool = False) -> str:
    if isinstance(f, (Cmp, Div, TrueLit, FalseLit, Not)):
        if unary and isinstance(f, (Cmp, Div)):
            return f"({f})"
        return str(f)
    if same is not None and isinstance(f, same):
        return str(f)
    return f"({f})"


def normalize_atom(lhs: AffineTerm, rel: Rel, rhs: AffineTerm) -> Cmp | TrueLit | FalseLit:
    """Collect variables left and constants right; fold variable-free atoms."""
    term = lhs.linear - rhs.linear
    constant = rhs.constant - lhs.constant
    if not term:
        return TRUE if rel.holds(0, constant) else FALSE
    return Cmp(term, rel, constant)


def make_div(divisor: int, body: AffineTerm) -> Div | TrueLit | FalseLit:
    """``divisor | body`` normalized; divisor 1 is trivially true."""
    if divisor < 1:
        raise FormulaError(f"divisor must be positive, got {divisor}")
    if divisor == 1:
        return TRUE
    if not body.linear:
        return TRUE if body.constant % divisor == 0 else FALSE
    return Div(divisor, body.linear, body.constant)


def renormalize(atom: Atom) -> Atom:
    """Normalize an atom that is already normalized; returns it unchanged."""
    match atom:
        case Cmp(term, rel, c):
            result = normalize_atom(AffineTerm(term), rel, AffineTerm.const(c))
        case Div(d, term, c):
            result = make_div(d, AffineTerm(term, c))
    assert isinstance(result, (Cmp, Div))
    return result


def conj(parts: Iterable["Formula"]) -> "Formula":
    """Right-nested conjunction; empty is TRUE."""
    items = list(parts)
    if not items:
        return TRUE
    result = items[-1]
    for f in reversed(items[:-1]):
        result = And(f, result)
    return result


def disj(parts: Iterable["Formula"]) -> "Formula":
    """Right-nested disjunction; empty is FALSE."""
    items = list(parts)
    if not items:
        return FALSE
    result = items[-1]
    for f in reversed(items[:-1]):
        result = Or(f, result)
    return result


def conjuncts(f: "Formula") -> Iterator["Formula"]:
    if isinstance(f, And):
        yield from conjuncts(f.left)
        yield from conjuncts(f.right)
    else:
        yield f


def disjuncts(f: "Formula") -> Iterator["Formula"]:
    if isinstance(f, Or):
        yield from disjuncts(f.left)
        yield from disjuncts(f.right)
    else:
        yield f


def atoms(f: "Formula") -> Iterator[Atom]:
    """Atoms in left-to-right order, repetitions included."""
    match f:
        case Cmp() | Div():
            yield f
        case Not(body) | Exists(_, body) | Forall(_, body):
            yield from atoms(body)
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
            yield from atoms(l)
            yield from atoms(r)
        case _:
            return


def is_quantifier_free(f: "Formula") -> bool:
    match f:
        case Exists() | Forall():
            return False
        case Not(body):
            return is_quantifier_free(body)
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
            return is_quantifier_free(l) and is_quantifier_free(r)
        case _:
            return True
