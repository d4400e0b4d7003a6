"""Automata for atomic formulas."""

from ..automaton import Dwa, complement_set, trivial
from ..formula import Cmp, Div, FalseLit, Rel, TrueLit
from .eta import AtomAutomatonSpec, eta_init, eta_run, eta_step
from .linear import build_bounded, build_eq_optimal, build_ineq_optimal, gcd_reduce, merge_sequence
from .divisibility import build_div


def build_atom(atom: Cmp | Div | TrueLit | FalseLit, base: int) -> Dwa:
    """
    Minimal-construction automaton for one atom, over the atom's own variables
    in variable order. ``true`` and ``false`` give arity-0 automata.
    """
    match atom:
        case TrueLit():
            return trivial(0, base, True)
        case FalseLit():
            return trivial(0, base, False)
        case Div():
            return build_div(atom, base, gcd_filter=True)
        case Cmp(term, rel, c):
            match rel:
                case Rel.EQ:
                    return build_eq_optimal(atom, base)
                case Rel.NE:
                    return complement_set(build_eq_optimal(Cmp(term, Rel.EQ, c), base))
                case Rel.LT | Rel.GT:
                    return build_ineq_optimal(atom, base)
                case Rel.LE:
                    return complement_set(build_ineq_optimal(Cmp(term, Rel.GT, c), base))
                case Rel.GE:
                    return complement_set(build_ineq_optimal(Cmp(term, Rel.LT, c), base))
    raise TypeError(f"not an atom: {atom!r}")


__all__ = [
    "AtomAutomatonSpec",
    "eta_init",
    "eta_step",
    "eta_run",
    "build_bounded",
    "gcd_reduce",
    "merge_sequence",
    "build_ineq_optimal",
    "build_eq_optimal",
    "build_div",
    "build_atom",
]
