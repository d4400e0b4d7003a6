"""Size ledgers against the state-count theorems, and cross-backend checks."""

import json
import logging
import random
from dataclasses import asdict, dataclass, field, replace
from itertools import product as grid
from typing import Any

from ..automaton import Dwa, equivalent, membership
from ..encoding import decode_int, encode_int, enumerate_words
from ..errors import EngineError
from ..formula import (
    Cmp,
    Div,
    Formula,
    LengthMeasure,
    VarId,
    free_vars,
    is_quantifier_free,
    length,
    metrics,
    rename_apart,
)
from ..formula.syntax import atoms
from ..qelim import BIT_CAP, BoundsReport, QeTrace, check_bounds, eliminate_all, eval_qf, pow_or_none
from .compile import CompileOptions, EngineKind, LedgerEntry, compile

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SizeLedger:
    """
    Observed automaton sizes for one formula next to the theorem bounds.

    ``theorem_exponent`` is e in the bound 2^e; ``theorem_bound`` is 2^e
    itself when e ≤ ``BIT_CAP``. Both are None when too large to hold.
    """
    formula: str
    entries: tuple[LedgerEntry, ...]
    final_size: int
    theorem_exponent: int | None
    theorem_bound: int | None
    theorem_holds: bool
    qf_bound: int | None = None
    qf_holds: bool | None = None

    @property
    def passed(self) -> bool:
        return self.theorem_holds and self.qf_holds is not False

    def to_dict(self) -> dict[str, Any]:
        def big(v: int | None) -> str | None:
            if v is None:
                return None
            return str(v) if v.bit_length() <= 256 else f"2^{v.bit_length() - 1}+"

        return {
            "formula": self.formula,
            "final_size": self.final_size,
            "steps": [asdict(e) for e in self.entries],
            "theorem_exponent": big(self.theorem_exponent) or "astronomical",
            "theorem_bound": big(self.theorem_bound) or "astronomical",
            "theorem_holds": self.theorem_holds,
            "qf_bound": big(self.qf_bound),
            "qf_holds": self.qf_holds,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def theorem_exponent(phi: Formula) -> int | None:
    """n^{(qbl+1)^{qa+4}} for n the length of φ, or None beyond the cap."""
    m = metrics(phi)
    n = length(phi, LengthMeasure.LINEAR)
    return pow_or_none(n, pow_or_none(m.qbl + 1, m.qa + 4))


def qf_bound(phi: Formula) -> int | None:
    """(2+2ℓ)^{|T|} · ℓ'^{|D|} for a quantifier-free φ."""
    cmps = [a for a in atoms(phi) if isinstance(a, Cmp)]
    divs = [a for a in atoms(phi) if isinstance(a, Div)]
    ell = 1 + max([0, *(max(a.term.norm_pos, a.term.norm_neg, abs(a.constant)) for a in cmps)])
    ell_div = 1 + max([1, *(a.divisor for a in divs)])
    m = metrics(phi)
    left = pow_or_none(2 + 2 * ell, m.t_set_size)
    right = pow_or_none(ell_div, m.d_set_size)
    return None if left is None or right is None else left * right


def size_report(phi: Formula, opts: CompileOptions = CompileOptions()) -> SizeLedger:
    entries: list[LedgerEntry] = []
    a = compile(phi, opts, ledger=entries)
    final = a.num_states
    e = theorem_exponent(phi)
    holds = e is None or (final - 1).bit_length() <= e
    bound = 2 ** e if e is not None and e <= BIT_CAP else None
    qf, qf_holds = None, None
    if is_quantifier_free(phi):
        qf = qf_bound(phi)
        qf_holds = qf is None or final <= qf
    if not holds or qf_holds is False:
        logger.warning("size bound violated for %s: %d states", phi, final)
    return SizeLedger(
        formula=str(phi),
        entries=tuple(entries),
        final_size=final,
        theorem_exponent=e,
        theorem_bound=bound,
        theorem_holds=holds,
        qf_bound=qf,
        qf_holds=qf_holds,
    )


@dataclass(frozen=True, slots=True)
class CrosscheckOptions:
    grid_radius: int = 16
    max_word_len: int = 4
    samples: int = 256
    seed: int = 0

    def __post_init__(self):
        if self.grid_radius < 0 or self.max_word_len < 0 or self.samples < 0:
            raise EngineError("crosscheck limits must be non-negative")


@dataclass(frozen=True, slots=True)
class Mismatch:
    kind: str  # "grid" or "word"
    point: tuple[int, ...]
    automaton: bool
    expected: bool


@dataclass(frozen=True, slots=True)
class CrosscheckReport:
    formula: str
    qe_formula: str
    tracks: tuple[str, ...]
    engine_sizes: dict[str, int]
    equivalent: bool
    points_checked: int
    words_checked: int
    mismatches: tuple[Mismatch, ...]
    bounds: BoundsReport
    trace: tuple[QeTrace, ...] = field(default=(), compare=False)

    @property
    def verdicts(self) -> dict[str, bool]:
        return {
            "engines_equivalent": self.equivalent,
            "oracle_agrees": not self.mismatches,
            "bounds_hold": self.bounds.passed,
        }

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "formula": self.formula,
            "qe_formula": self.qe_formula,
            "tracks": list(self.tracks),
            "engine_sizes": self.engine_sizes,
            "points_checked": self.points_checked,
            "words_checked": self.words_checked,
            "mismatches": [asdict(m) for m in self.mismatches[:10]],
            "bounds": [c.to_dict() for c in self.bounds.checks],
            "verdicts": self.verdicts,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _grid_points(arity: int, check: CrosscheckOptions) -> list[tuple[int, ...]]:
    radius = check.grid_radius
    axis = range(-radius, radius + 1)
    if arity <= 2:
        return list(grid(axis, repeat=arity))
    rng = random.Random(check.seed)
    return [tuple(rng.randint(-radius, radius) for _ in range(arity)) for _ in range(check.samples)]


def crosscheck(
    phi: Formula,
    opts: CompileOptions = CompileOptions(),
    check: CrosscheckOptions = CrosscheckOptions(),
    automaton: Dwa | None = None,
) -> CrosscheckReport:
    """
    Compile φ directly and after quantifier elimination, compare the two
    languages, and test the direct automaton against evaluation of the
    eliminated formula. ``automaton`` replaces the direct automaton.
    """
    phi = rename_apart(phi)
    tracks = free_vars(phi)
    ordered = replace(opts, variable_order=tracks)
    direct = automaton if automaton is not None else compile(phi, replace(ordered, engine=EngineKind.AUTOMATA))
    trace: list[QeTrace] = []
    psi = eliminate_all(phi, trace)
    via_qe = compile(psi, replace(ordered, engine=EngineKind.AUTOMATA))

    mismatches: list[Mismatch] = []

    def env(point: tuple[int, ...]) -> dict[VarId, int]:
        return dict(zip(tracks, point, strict=True))

    points = _grid_points(len(tracks), check)
    for point in points:
        got = membership(direct, encode_int(point, opts.base))
        expected = eval_qf(psi, env(point))
        if got != expected:
            mismatches.append(Mismatch("grid", point, got, expected))

    words = 0
    if len(tracks) <= 2:
        for w in enumerate_words(len(tracks), opts.base, check.max_word_len):
            words += 1
            point = decode_int(w, opts.base)
            got = membership(direct, w)
            expected = eval_qf(psi, env(point))
            if got != expected:
                mismatches.append(Mismatch("word", point, got, expected))

    report = CrosscheckReport(
        formula=str(phi),
        qe_formula=str(psi),
        tracks=tuple(v.name for v in tracks),
        engine_sizes={
            str(EngineKind.AUTOMATA): direct.num_states,
            str(EngineKind.QE_THEN_AUTOMATA): via_qe.num_states,
        },
        equivalent=direct.arity == via_qe.arity and equivalent(direct, via_qe),
        points_checked=len(points),
        words_checked=words,
        mismatches=tuple(mismatches),
        bounds=check_bounds(phi, psi, trace),
        trace=tuple(trace),
    )
    if not report.passed:
        logger.warning("crosscheck failed for %s: %s", phi, report.verdicts)
    return report
