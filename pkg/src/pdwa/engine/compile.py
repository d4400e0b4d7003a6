"""
Formula → automaton compiler and the decision procedures built on it.

Subformulas are compiled over their own free variables and cylindrified to a
common track list before each product. Tracks follow the compile order: the
variables of ``CompileOptions.variable_order`` first, then every other
variable by its index.
"""

import logging
from dataclasses import dataclass, replace
from enum import StrEnum

from ..atoms import build_atom
from ..automaton import (
    Connective,
    Dwa,
    align,
    complement_set,
    determinize,
    find_witness,
    is_empty_nonlambda,
    minimize,
    product,
    project_exists,
    trivial,
)
from ..encoding import decode_int
from ..errors import EngineError
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
    VarId,
    all_vars,
    free_vars,
    is_quantifier_free,
    rename_apart,
    rename_vars,
)
from ..qelim import eliminate_all, eval_qf

logger = logging.getLogger(__name__)


class EngineKind(StrEnum):
    AUTOMATA = "automata"
    QE_THEN_AUTOMATA = "qe_then_automata"


@dataclass(frozen=True, slots=True)
class CompileOptions:
    """
    Attributes:
        base: radix ρ of the word encoding
        minimize_each_step: minimize after every product and complement
        engine: compile directly, or eliminate quantifiers first
        variable_order: track order; empty means the free variables in order
    """
    base: int = 2
    minimize_each_step: bool = True
    engine: EngineKind = EngineKind.AUTOMATA
    variable_order: tuple[VarId, ...] = ()

    def __post_init__(self):
        if self.base < 2:
            raise EngineError(f"base must be at least 2, got {self.base}")
        if len(set(self.variable_order)) != len(self.variable_order):
            raise EngineError("variable order lists a variable twice")


@dataclass(frozen=True, slots=True)
class LedgerEntry:
    """State counts of one construction step."""
    step: str
    subformula: str
    before: int
    after: int


_CONNECTIVES = {And: Connective.AND, Or: Connective.OR, Implies: Connective.IMPLIES, Iff: Connective.IFF}


class _Compiler:
    def __init__(self, opts: CompileOptions, ledger: list[LedgerEntry] | None):
        self.opts = opts
        self.ledger = ledger
        self._memo: dict[Formula, tuple[Dwa, tuple[VarId, ...]]] = {}

    def _record(self, step: str, f: Formula, before: Dwa, after: Dwa) -> None:
        if self.ledger is not None:
            self.ledger.append(LedgerEntry(step, str(f), before.num_states, after.num_states))

    def _finish(self, step: str, f: Formula, a: Dwa, always: bool = False) -> Dwa:
        if not (always or self.opts.minimize_each_step):
            return a
        result = minimize(a)
        self._record(step, f, a, result)
        return result

    def compile(self, f: Formula) -> tuple[Dwa, tuple[VarId, ...]]:
        cached = self._memo.get(f)
        if cached is None:
            cached = self._memo[f] = self._compile(f)
        return cached

    def _compile(self, f: Formula) -> tuple[Dwa, tuple[VarId, ...]]:
        base = self.opts.base
        match f:
            case TrueLit() | FalseLit():
                return trivial(0, base, isinstance(f, TrueLit)), ()
            case Cmp(term) | Div(_, term):
                a = build_atom(f, base)
                self._record("atom", f, a, a)
                return a, term.variables()
            case Not(body):
                a, tracks = self.compile(body)
                return complement_set(a), tracks
            case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
                (a, ta), (b, tb) = self.compile(l), self.compile(r)
                tracks = tuple(sorted(set(ta) | set(tb)))
                joined = product(align(a, ta, tracks), align(b, tb, tracks), _CONNECTIVES[type(f)])
                return self._finish("product", f, joined), tracks
            case Exists(var, body):
                a, tracks = self.compile(body)
                return self._exists(f, var, a, tracks)
            case Forall(var, body):
                a, tracks = self.compile(body)
                a, tracks = self._exists(f, var, complement_set(a), tracks)
                return complement_set(a), tracks
        raise TypeError(f"not a formula: {f!r}")

    def _exists(self, f: Formula, var: VarId, a: Dwa, tracks: tuple[VarId, ...]) -> tuple[Dwa, tuple[VarId, ...]]:
        if var not in tracks:
            return a, tracks
        pos = tracks.index(var)
        projected = determinize(project_exists(a, pos))
        return self._finish("project", f, projected, always=True), tracks[:pos] + tracks[pos + 1:]


def _tracks(phi: Formula, opts: CompileOptions) -> tuple[VarId, ...]:
    free = free_vars(phi)
    if not opts.variable_order:
        return free
    missing = set(free) - set(opts.variable_order)
    if missing:
        names = ", ".join(sorted(v.name for v in missing))
        raise EngineError(f"variable order does not cover free variables: {names}")
    return opts.variable_order


def compile(phi: Formula, opts: CompileOptions = CompileOptions(), ledger: list[LedgerEntry] | None = None) -> Dwa:
    """
    Minimal automaton representing ⟦φ⟧ over the tracks of ``opts``.

    Raises:
        EngineError: if ``opts.variable_order`` misses a free variable.
    """
    phi = rename_apart(phi)
    tracks = _tracks(phi, opts)
    if opts.engine is EngineKind.QE_THEN_AUTOMATA:
        phi = eliminate_all(phi)

    # index variables by compile order so term order and track order agree
    others = sorted(all_vars(phi) - set(tracks))
    mapping = {v: VarId(v.name, i) for i, v in enumerate((*tracks, *others))}
    phi = rename_vars(phi, mapping)
    target = tuple(mapping[v] for v in tracks)

    a, own = _Compiler(opts, ledger).compile(phi)
    result = minimize(align(a, own, target))
    logger.debug("compiled %s over %d tracks: %d states", phi, len(target), result.num_states)
    return result


def decide(sentence: Formula, opts: CompileOptions = CompileOptions()) -> bool:
    """
    Truth of a sentence: its arity-0 automaton accepts some nonempty word.

    Raises:
        EngineError: if ``sentence`` has free variables.
    """
    free = free_vars(sentence)
    if free:
        raise EngineError(f"not a sentence, free variables: {', '.join(v.name for v in free)}")
    return not is_empty_nonlambda(compile(sentence, replace(opts, variable_order=())))


def solve(phi: Formula, opts: CompileOptions = CompileOptions()) -> dict[VarId, int] | None:
    """
    A satisfying assignment decoded from the shortest accepted word, or None
    when φ is unsatisfiable.
    """
    tracks = _tracks(phi, opts)
    a = compile(phi, replace(opts, variable_order=tracks))
    word = find_witness(a)
    if word is None:
        return None
    assignment = dict(zip(tracks, decode_int(word, opts.base), strict=True))
    if is_quantifier_free(phi) and not eval_qf(phi, assignment):
        raise EngineError(f"witness {assignment} does not satisfy {phi}")
    return assignment
