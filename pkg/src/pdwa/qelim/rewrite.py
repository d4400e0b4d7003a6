"""
Negation normal form for elimination, atom classification, and the
propositional simplifier applied after every elimination step.

After ``step1_rewrite`` a formula is built from ``And``, ``Or``, ``TRUE``,
``FALSE``, strict inequations ``t < c`` and positive divisibility atoms.
"""

from dataclasses import dataclass
from typing import Callable, TypeAlias

from ..errors import QeError
from ..formula import (
    FALSE,
    TRUE,
    AffineTerm,
    And,
    Cmp,
    Div,
    Exists,
    FalseLit,
    Forall,
    Formula,
    Iff,
    Implies,
    LinearTerm,
    Not,
    Or,
    Rel,
    TrueLit,
    VarId,
    conj,
    disj,
    make_div,
)
from ..formula.syntax import conjuncts, disjuncts


def _lt(term: LinearTerm, c: int) -> Formula:
    return Cmp(term, Rel.LT, c)


def _lower_cmp(atom: Cmp, positive: bool) -> Formula:
    t, c = atom.term, atom.constant
    rel = atom.rel if positive else atom.rel.negated()
    match rel:
        case Rel.LT:
            return _lt(t, c)
        case Rel.LE:
            return _lt(t, c + 1)
        case Rel.GT:
            return _lt(-t, -c)
        case Rel.GE:
            return _lt(-t, -c + 1)
        case Rel.EQ:
            return And(_lt(t, c + 1), _lt(-t, -c + 1))
        case Rel.NE:
            return Or(_lt(t, c), _lt(-t, -c))


def _lower_div(atom: Div, positive: bool) -> Formula:
    if positive:
        return atom
    # not d | t + c  iff  d | t + c + i for some 0 < i < d
    body = AffineTerm(atom.term, atom.constant)
    return disj(make_div(atom.divisor, body + i) for i in range(1, atom.divisor))


def step1_rewrite(phi: Formula, positive: bool = True) -> Formula:
    """
    Push negations to the atoms and lower every atom to ``t < c`` or
    ``d | t + c``; ``->`` and ``<->`` are expanded on the way.

    Raises:
        QeError: if ``phi`` contains a quantifier.
    """
    match phi:
        case TrueLit() | FalseLit():
            return phi if positive else (FALSE if phi == TRUE else TRUE)
        case Cmp():
            return _lower_cmp(phi, positive)
        case Div():
            return _lower_div(phi, positive)
        case Not(body):
            return step1_rewrite(body, not positive)
        case And(l, r):
            node = And if positive else Or
            return node(step1_rewrite(l, positive), step1_rewrite(r, positive))
        case Or(l, r):
            node = Or if positive else And
            return node(step1_rewrite(l, positive), step1_rewrite(r, positive))
        case Implies(l, r):
            return step1_rewrite(Or(Not(l), r), positive)
        case Iff(l, r):
            if positive:
                return And(step1_rewrite(Or(Not(l), r)), step1_rewrite(Or(Not(r), l)))
            return Or(
                step1_rewrite(And(l, Not(r))),
                step1_rewrite(And(r, Not(l))),
            )
        case Exists() | Forall():
            raise QeError(f"step 1 needs a quantifier-free formula, got {phi}")
    raise TypeError(f"not a formula: {phi!r}")


@dataclass(frozen=True, slots=True)
class UpperBound:
    """(A) k·x < rhs."""
    k: int
    rhs: AffineTerm


@dataclass(frozen=True, slots=True)
class LowerBound:
    """(B) lhs < k·x."""
    lhs: AffineTerm
    k: int


@dataclass(frozen=True, slots=True)
class Congruence:
    """(C) d | k·x + rest, k ≠ 0."""
    d: int
    k: int
    rest: AffineTerm


@dataclass(frozen=True, slots=True)
class Unrelated:
    atom: Formula


XClassifiedAtom: TypeAlias = UpperBound | LowerBound | Congruence | Unrelated


def classify(atom: Formula, x: VarId) -> XClassifiedAtom:
    """Sort a step-1 atom by how ``x`` occurs in it."""
    match atom:
        case Cmp(term, rel, c):
            k = term.coefficient(x)
            if k == 0:
                return Unrelated(atom)
            if rel is not Rel.LT:
                raise QeError(f"expected a strict inequation after step 1, got {atom}")
            rest = term.without(x)
            if k > 0:
                return UpperBound(k, AffineTerm(-rest, c))
            return LowerBound(AffineTerm(rest, -c), -k)
        case Div(d, term, c):
            k = term.coefficient(x)
            if k == 0:
                return Unrelated(atom)
            return Congruence(d, k, AffineTerm(term.without(x), c))
    return Unrelated(atom)


def map_atoms(phi: Formula, fn: Callable[[Cmp | Div], Formula]) -> Formula:
    """Rebuild a quantifier-free formula with ``fn`` applied to every atom."""
    match phi:
        case Cmp() | Div():
            return fn(phi)
        case Not(body):
            return Not(map_atoms(body, fn))
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
            return type(phi)(map_atoms(l, fn), map_atoms(r, fn))
        case Exists(var, body) | Forall(var, body):
            return type(phi)(var, map_atoms(body, fn))
    return phi


def _dedupe(items: list[Formula]) -> list[Formula]:
    return list(dict.fromkeys(items))


def simplify(phi: Formula) -> Formula:
    """
    Flatten ∧/∨, fold ``true``/``false`` and drop repeated operands.
    Double negations cancel. No other rewriting is done.
    """
    match phi:
        case And():
            parts = []
            for part in (simplify(p) for p in conjuncts(phi)):
                if part == FALSE:
                    return FALSE
                if part != TRUE:
                    parts.extend(conjuncts(part))
            return conj(_dedupe(parts))
        case Or():
            parts = []
            for part in (simplify(p) for p in disjuncts(phi)):
                if part == TRUE:
                    return TRUE
                if part != FALSE:
                    parts.extend(disjuncts(part))
            return disj(_dedupe(parts))
        case Not(body):
            inner = simplify(body)
            if isinstance(inner, Not):
                return inner.body
            if isinstance(inner, (TrueLit, FalseLit)):
                return FALSE if inner == TRUE else TRUE
            return Not(inner)
        case Implies(l, r):
            sl, sr = simplify(l), simplify(r)
            if _is_literal(sl) or _is_literal(sr):
                return simplify(Or(Not(sl), sr))
            return Implies(sl, sr)
        case Iff(l, r):
            sl, sr = simplify(l), simplify(r)
            if sl == TRUE:
                return sr
            if sr == TRUE:
                return sl
            if sl == FALSE:
                return simplify(Not(sr))
            if sr == FALSE:
                return simplify(Not(sl))
            return Iff(sl, sr)
        case Exists(var, body) | Forall(var, body):
            return type(phi)(var, simplify(body))
    return phi


def _is_literal(f: Formula) -> bool:
    return isinstance(f, (TrueLit, FalseLit))
