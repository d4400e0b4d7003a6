"""
Quantifier elimination for ∃x over quantifier-free formulas, and the
bottom-up driver that removes every quantifier of a formula.

∃x.φ is replaced by the finite disjunction

    ⋁_{1≤j≤L} ψ₋∞[j/x]  ∨  ⋁_{1≤j≤L} ⋁_{s < k·x ∈ B} (k | s+j ∧ φ′[s+j / k·x])

where φ′ is φ after ``step1_rewrite``, B are its lower bounds on x and L is
``lcm_of(x, φ′)``.
"""

import json
import logging
from dataclasses import asdict, dataclass
from math import lcm
from typing import Any

from ..formula import (
    FALSE,
    TRUE,
    AffineTerm,
    And,
    Cmp,
    Div,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Rel,
    VarId,
    conj,
    disj,
    make_div,
    normalize_atom,
)
from ..formula.metrics import MetricsReport, free_vars, metrics
from ..formula.syntax import atoms, disjuncts
from .rewrite import (
    Congruence,
    LowerBound,
    Unrelated,
    UpperBound,
    XClassifiedAtom,
    classify,
    map_atoms,
    simplify,
    step1_rewrite,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class QeTrace:
    """One ∃x elimination."""
    variable: str
    lcm: int
    b_set_size: int
    disjunct_count: int
    before: MetricsReport
    after: MetricsReport

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _classified(phi: Formula, x: VarId) -> list[XClassifiedAtom]:
    return [classify(a, x) for a in atoms(phi)]


def lcm_of(x: VarId, phi: Formula) -> int:
    """
    lcm of the divisors of the (C) atoms times the lcm of the x-coefficients
    of the (B) atoms; 1 when there are none.
    """
    classified = _classified(phi, x)
    divisors = lcm(1, *(c.d for c in classified if isinstance(c, Congruence)))
    lower = lcm(1, *(c.k for c in classified if isinstance(c, LowerBound)))
    return divisors * lower


def lower_bounds(x: VarId, phi: Formula) -> list[LowerBound]:
    """Distinct (B) atoms in order of first occurrence."""
    found = (c for c in _classified(phi, x) if isinstance(c, LowerBound))
    return list(dict.fromkeys(found))


def psi_minus_inf(phi: Formula, x: VarId) -> Formula:
    """(A) atoms become ``true``, (B) atoms ``false``; then simplified."""

    def replace(atom: Cmp | Div) -> Formula:
        match classify(atom, x):
            case UpperBound():
                return TRUE
            case LowerBound():
                return FALSE
        return atom

    return simplify(map_atoms(phi, replace))


def substitute(alpha: Cmp | Div, s: AffineTerm, k: int, x: VarId) -> Formula:
    """α[s / k·x] for a step-1 atom; atoms without x pass through."""
    match classify(alpha, x):
        case UpperBound(k_a, rhs):
            return normalize_atom(s.scale(k_a), Rel.LT, rhs.scale(k))
        case LowerBound(lhs, k_b):
            return normalize_atom(lhs.scale(k), Rel.LT, s.scale(k_b))
        case Congruence(d, k_c, rest):
            return make_div(k * d, s.scale(k_c) + rest.scale(k))
        case Unrelated(atom):
            return atom
    raise AssertionError("unreachable")


def substitute_formula(phi: Formula, s: AffineTerm, k: int, x: VarId) -> Formula:
    return simplify(map_atoms(phi, lambda a: substitute(a, s, k, x)))


def eliminate_exists(x: VarId, phi: Formula, trace: list[QeTrace] | None = None) -> Formula:
    """Quantifier-free formula equivalent to ∃x.φ, φ quantifier-free."""
    before = metrics(phi)
    prepared = simplify(step1_rewrite(phi))
    if x not in free_vars(prepared):
        result, period, bounds = prepared, 1, []
    else:
        period = lcm_of(x, prepared)
        bounds = lower_bounds(x, prepared)
        result = _expand(x, prepared, period, bounds)
    if trace is not None:
        trace.append(QeTrace(
            variable=x.name,
            lcm=period,
            b_set_size=len(bounds),
            disjunct_count=sum(1 for _ in disjuncts(result)),
            before=before,
            after=metrics(result),
        ))
    logger.debug("eliminated %s: lcm=%d |B|=%d", x, period, len(bounds))
    return result


def _expand(x: VarId, phi: Formula, period: int, bounds: list[LowerBound]) -> Formula:
    parts: list[Formula] = []
    minus_inf = psi_minus_inf(phi, x)
    for j in range(1, period + 1):
        part = substitute_formula(minus_inf, AffineTerm.const(j), 1, x)
        if part == TRUE:
            return TRUE
        parts.append(part)
    for bound in bounds:
        for j in range(1, period + 1):
            s = bound.lhs + j
            part = simplify(conj([make_div(bound.k, s), substitute_formula(phi, s, bound.k, x)]))
            if part == TRUE:
                return TRUE
            parts.append(part)
    return simplify(disj(parts))


def _exists(x: VarId, body: Formula, trace: list[QeTrace] | None) -> Formula:
    # ∃ distributes over ∨, so each disjunct is eliminated on its own
    prepared = simplify(step1_rewrite(body))
    return simplify(disj(eliminate_exists(x, d, trace) for d in disjuncts(prepared)))


def eliminate_all(phi: Formula, trace: list[QeTrace] | None = None) -> Formula:
    """
    Remove every quantifier, innermost first. ∀x.φ is handled as ¬∃x.¬φ with
    the outer negation kept as a ``Not`` node.
    """
    match phi:
        case Exists(var, body):
            return _exists(var, eliminate_all(body, trace), trace)
        case Forall(var, body):
            inner = _exists(var, Not(eliminate_all(body, trace)), trace)
            return simplify(Not(inner))
        case Not(body):
            return Not(eliminate_all(body, trace))
        case Cmp() | Div():
            return phi
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
            return type(phi)(eliminate_all(l, trace), eliminate_all(r, trace))
    return phi
