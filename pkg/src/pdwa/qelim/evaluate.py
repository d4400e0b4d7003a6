"""Direct evaluation of formulas under an integer assignment."""

from ..errors import QeError
from ..formula import (
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
)
from ..type_utils import Assignment


def eval_qf(phi: Formula, assignment: Assignment) -> bool:
    """
    Truth of a quantifier-free formula.

    Raises:
        QeError: on a quantifier.
        FormulaError: if a free variable has no value.
    """
    return _eval(phi, assignment, None)


def eval_bounded(phi: Formula, assignment: Assignment, window: int) -> bool:
    """Truth with every quantified variable ranging over [-window, window] only."""
    if window < 0:
        raise QeError(f"window must be non-negative, got {window}")
    return _eval(phi, assignment, window)


def _eval(phi: Formula, env: Assignment, window: int | None) -> bool:
    match phi:
        case TrueLit():
            return True
        case FalseLit():
            return False
        case Cmp(term, rel, c):
            return rel.holds(term.evaluate(env), c)
        case Div(d, term, c):
            return (term.evaluate(env) + c) % d == 0
        case Not(body):
            return not _eval(body, env, window)
        case And(l, r):
            return _eval(l, env, window) and _eval(r, env, window)
        case Or(l, r):
            return _eval(l, env, window) or _eval(r, env, window)
        case Implies(l, r):
            return not _eval(l, env, window) or _eval(r, env, window)
        case Iff(l, r):
            return _eval(l, env, window) == _eval(r, env, window)
        case Exists(var, body) | Forall(var, body):
            if window is None:
                raise QeError(f"cannot evaluate a quantifier directly: {phi}")
            values = (_eval(body, {**env, var: v}, window) for v in range(-window, window + 1))
            return any(values) if isinstance(phi, Exists) else all(values)
    raise TypeError(f"not a formula: {phi!r}")
