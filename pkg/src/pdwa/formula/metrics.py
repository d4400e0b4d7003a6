"""
Formula parameters: length, quantifier counts and atomic-formula sets.

qn counts quantifiers, qa counts quantifier alternations and qbl is the
quantifier block length; all three follow the recursive definitions with
``a -> b`` read as ``!a | b`` and ``a <-> b`` as ``(a -> b) & (b -> a)``.
"""

import json
from dataclasses import asdict, dataclass
from enum import StrEnum

from .syntax import (
    And,
    Cmp,
    Div,
    Exists,
    FalseLit,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    TrueLit,
    atoms,
)
from .terms import LinearTerm, VarId


class LengthMeasure(StrEnum):
    LINEAR = "linear"  # an integer k contributes |k| letters
    LOG = "log"  # an integer k contributes its binary length


@dataclass(frozen=True, slots=True)
class MetricsReport:
    length: int
    qn: int
    qa: int
    qbl: int
    t_set_size: int
    d_set_size: int
    max_coef: int
    max_const: int
    max_div: int

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def metrics(phi: Formula, measure: LengthMeasure = LengthMeasure.LINEAR) -> MetricsReport:
    cmps = [a for a in atoms(phi) if isinstance(a, Cmp)]
    divs = [a for a in atoms(phi) if isinstance(a, Div)]
    return MetricsReport(
        length=length(phi, measure),
        qn=qn(phi),
        qa=qa(phi),
        qbl=qbl(phi),
        t_set_size=len(t_set(phi)),
        d_set_size=len(d_set(phi)),
        max_coef=max([1, *(abs(k) for a in cmps for _, k in a.term.coeffs)]),
        max_const=max([1, *(abs(a.constant) for a in cmps)]),
        max_div=max([1, *(a.divisor for a in divs)]),
    )


def t_set(phi: Formula) -> frozenset[LinearTerm]:
    """T(φ): homogeneous terms of the (in)equations."""
    return frozenset(a.term for a in atoms(phi) if isinstance(a, Cmp))


def d_set(phi: Formula) -> frozenset[tuple[int, LinearTerm]]:
    """D(φ): pairs (d, t) of the divisibility atoms d | t + c."""
    return frozenset((a.divisor, a.term) for a in atoms(phi) if isinstance(a, Div))


def _scalar(k: int, measure: LengthMeasure) -> int:
    k = abs(k)
    if measure is LengthMeasure.LINEAR:
        return k
    return max(1, k.bit_length())


def _sum_length(term: LinearTerm, constant: int, measure: LengthMeasure) -> int:
    summands = sum(_scalar(k, measure) for _, k in term.coeffs)
    if constant:
        summands += _scalar(constant, measure)
    # summands joined by '+'; the empty sum is written "0"
    return 2 * summands - 1 if summands else 1


def length(phi: Formula, measure: LengthMeasure = LengthMeasure.LINEAR) -> int:
    """Number of letters of the (expanded, under LINEAR) formula."""
    match phi:
        case TrueLit() | FalseLit():
            return 3  # written 0<1 / 1<0
        case Cmp(term, _, c):
            return _sum_length(term, 0, measure) + 1 + _sum_length(LinearTerm(), c, measure)
        case Div(d, term, c):
            return _sum_length(term, c, measure) + _scalar(d, measure) + 1
        case Not(body):
            return 1 + length(body, measure)
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
            return 1 + length(l, measure) + length(r, measure)
        case Exists(_, body) | Forall(_, body):
            return 2 + length(body, measure)
    raise TypeError(f"not a formula: {phi!r}")


def qn(phi: Formula) -> int:
    match phi:
        case Not(body):
            return qn(body)
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
            return qn(l) + qn(r)
        case Exists(_, body) | Forall(_, body):
            return 1 + qn(body)
        case _:
            return 0


# The recursions below carry the ∃- and ∀-variant as a pair so that one pass
# suffices; ``a -> b`` contributes (!a) and b, ``a <-> b`` both implications.

def _qa(phi: Formula) -> tuple[int, int]:
    match phi:
        case Not(body):
            e, a = _qa(body)
            return a, e
        case And(l, r) | Or(l, r):
            (le, la), (re, ra) = _qa(l), _qa(r)
            return max(le, re), max(la, ra)
        case Implies(l, r):
            (le, la), (re, ra) = _qa(l), _qa(r)
            return max(la, re), max(le, ra)
        case Iff(l, r):
            both = max(*_qa(l), *_qa(r))
            return both, both
        case Exists(_, body):
            e, _ = _qa(body)
            return max(1, e), 1 + e
        case Forall(_, body):
            _, a = _qa(body)
            return 1 + a, max(1, a)
        case _:
            return 0, 0


def qa(phi: Formula) -> int:
    return min(_qa(phi))


def _qbl(phi: Formula, best: list[int]) -> tuple[int, int]:
    match phi:
        case Not(body):
            e, a = _qbl(body, best)
            result = (a, e)
        case And(l, r) | Or(l, r):
            (le, la), (re, ra) = _qbl(l, best), _qbl(r, best)
            result = (le + re, la + ra)
        case Implies(l, r):
            (le, la), (re, ra) = _qbl(l, best), _qbl(r, best)
            result = (la + re, le + ra)
        case Iff(l, r):
            (le, la), (re, ra) = _qbl(l, best), _qbl(r, best)
            total = la + re + ra + le
            result = (total, total)
        case Exists(_, body):
            e, _ = _qbl(body, best)
            result = (1 + e, 0)
        case Forall(_, body):
            _, a = _qbl(body, best)
            result = (0, 1 + a)
        case _:
            result = (0, 0)
    best[0] = max(best[0], *result)
    return result


def qbl(phi: Formula) -> int:
    best = [0]
    _qbl(phi, best)
    return best[0]


def free_vars(phi: Formula) -> tuple[VarId, ...]:
    """Free variables in global variable order."""
    return tuple(sorted(_free(phi)))


def _free(phi: Formula) -> frozenset[VarId]:
    match phi:
        case Cmp(term, _, _) | Div(_, term, _):
            return frozenset(term.variables())
        case Not(body):
            return _free(body)
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
            return _free(l) | _free(r)
        case Exists(var, body) | Forall(var, body):
            return _free(body) - {var}
        case _:
            return frozenset()


def bound_vars(phi: Formula) -> list[VarId]:
    """Binders in pre-order, repetitions included."""
    match phi:
        case Exists(var, body) | Forall(var, body):
            return [var, *bound_vars(body)]
        case Not(body):
            return bound_vars(body)
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
            return bound_vars(l) + bound_vars(r)
        case _:
            return []


def rename_apart(phi: Formula) -> Formula:
    """
    Rename binders so they are pairwise distinct and disjoint from the free
    variables. Binders that are already fine keep their names; others get the
    first unused primed name (``x'``, ``x''``, ...) and a fresh index.
    """
    free = free_vars(phi)
    taken_names = {v.name for v in free} | {v.name for v in bound_vars(phi)}
    used = set(free)
    next_index = 1 + max((v.index for v in (*free, *bound_vars(phi))), default=-1)

    def fresh(var: VarId) -> VarId:
        nonlocal next_index
        if var not in used:
            used.add(var)
            return var
        name = var.name + "'"
        while name in taken_names:
            name += "'"
        taken_names.add(name)
        new = VarId(name, next_index)
        next_index += 1
        used.add(new)
        return new

    def go(f: Formula, env: dict[VarId, VarId]) -> Formula:
        match f:
            case Cmp(term, rel, c):
                return Cmp(_rename_term(term, env), rel, c)
            case Div(d, term, c):
                return Div(d, _rename_term(term, env), c)
            case Not(body):
                return Not(go(body, env))
            case And(l, r):
                return And(go(l, env), go(r, env))
            case Or(l, r):
                return Or(go(l, env), go(r, env))
            case Implies(l, r):
                return Implies(go(l, env), go(r, env))
            case Iff(l, r):
                return Iff(go(l, env), go(r, env))
            case Exists(var, body) | Forall(var, body):
                new = fresh(var)
                return type(f)(new, go(body, {**env, var: new}))
            case _:
                return f

    return go(phi, {})


def _rename_term(term: LinearTerm, env: dict[VarId, VarId]) -> LinearTerm:
    if not any(v in env for v in term.variables()):
        return term
    return LinearTerm.of([(env.get(v, v), k) for v, k in term.coeffs])


def rename_vars(phi: Formula, mapping: dict[VarId, VarId]) -> Formula:
    """Replace every occurrence, binders included, of the variables in ``mapping``."""
    match phi:
        case Cmp(term, rel, c):
            return Cmp(_rename_term(term, mapping), rel, c)
        case Div(d, term, c):
            return Div(d, _rename_term(term, mapping), c)
        case Not(body):
            return Not(rename_vars(body, mapping))
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
            return type(phi)(rename_vars(l, mapping), rename_vars(r, mapping))
        case Exists(var, body) | Forall(var, body):
            return type(phi)(mapping.get(var, var), rename_vars(body, mapping))
    return phi


def all_vars(phi: Formula) -> frozenset[VarId]:
    """Free and bound variables."""
    return _free(phi) | frozenset(bound_vars(phi))
