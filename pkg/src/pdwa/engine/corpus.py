"""
Seeded random formula corpus and a parallel runner checking each formula
with ``crosscheck`` and ``size_report``.

Formulas come in four shapes, cycling by id: quantifier-free, one
quantifier, two quantifiers, and nested (non-prenex) quantifiers. All use at
most three variables, coefficients within ±5, constants within ±8 and
divisors up to 4. Bound variables get small coefficients so that the
elimination stays cheap.
"""

import json
import logging
import random
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Sequence

import anyio

from ..automaton import Dwa
from ..errors import EngineError, PdwaError
from ..formula import And, Cmp, Div, Exists, Forall, Formula, Iff, Implies, LinearTerm, Not, Or, Rel, VarId
from .compile import CompileOptions, compile
from .reports import CrosscheckOptions, CrosscheckReport, SizeLedger, crosscheck, size_report

logger = logging.getLogger(__name__)

X, Y, Z = VarId("x", 0), VarId("y", 1), VarId("z", 2)


def random_term(rng: random.Random, variables: Sequence[VarId], max_coef: int) -> LinearTerm:
    """A term using every variable with a nonzero coefficient in ±[1, max_coef]."""
    return LinearTerm.of(
        {v: rng.choice([-1, 1]) * rng.randint(1, max_coef) for v in variables}
    )


def random_cmp(
    rng: random.Random,
    variables: Sequence[VarId],
    max_coef: int = 5,
    max_const: int = 8,
    rels: Sequence[Rel] = tuple(Rel),
) -> Cmp:
    return Cmp(random_term(rng, variables, max_coef), rng.choice(list(rels)), rng.randint(-max_const, max_const))


def random_div(
    rng: random.Random, variables: Sequence[VarId], max_coef: int = 5, max_div: int = 4
) -> Div:
    d = rng.randint(2, max_div)
    return Div(d, random_term(rng, variables, max_coef), rng.randint(0, d - 1))


def corrupt(a: Dwa) -> Dwa:
    """
    Flip acceptance of the state reached on the all-zero first letter, so
    the encoding of the zero tuple changes its verdict.
    """
    q = a.delta[a.initial][0]
    return Dwa(
        arity=a.arity,
        base=a.base,
        delta=a.delta,
        initial=a.initial,
        accepting=a.accepting ^ {q},
        represents_set=a.represents_set,
        labels=a.labels,
    )


@dataclass(frozen=True, slots=True)
class CorpusOptions:
    """
    Attributes:
        seed: RNG seed of the generator
        count: number of formulas
        base: radix ρ
        workers: formulas checked concurrently
        inject_fault: corrupt the direct automaton of formula 0 (negative control)
    """
    seed: int = 0
    count: int = 50
    base: int = 2
    workers: int = 4
    inject_fault: bool = False
    check: CrosscheckOptions = field(default_factory=CrosscheckOptions)

    def __post_init__(self):
        if self.count < 0:
            raise EngineError(f"count must be non-negative, got {self.count}")
        if self.workers < 1:
            raise EngineError(f"workers must be positive, got {self.workers}")


@dataclass(frozen=True, slots=True)
class CorpusItem:
    id: int
    shape: str
    formula: Formula


def _bound_term(rng: random.Random, bound: VarId, free: list[VarId], choices: list[int]) -> LinearTerm:
    coeffs = {bound: rng.choice(choices)}
    for v in free:
        if rng.random() < 0.6:
            coeffs[v] = rng.choice([-1, 1]) * rng.randint(1, 5)
    return LinearTerm.of(coeffs)


def _bound_atom(rng: random.Random, bound: VarId, free: list[VarId], choices: list[int], divs: bool = True) -> Formula:
    term = _bound_term(rng, bound, free, choices)
    if divs and rng.random() < 0.25:
        d = rng.randint(2, 4)
        return Div(d, term, rng.randint(0, d - 1))
    return Cmp(term, rng.choice(list(Rel)), rng.randint(-8, 8))


def _free_atom(rng: random.Random, free: list[VarId]) -> Formula:
    used = [v for v in free if rng.random() < 0.7] or [rng.choice(free)]
    if rng.random() < 0.2:
        return random_div(rng, used, max_coef=5, max_div=4)
    return random_cmp(rng, used, max_coef=5, max_const=8)


_JOIN: list[Callable[[Formula, Formula], Formula]] = [And, Or, Implies, Iff]


def _combine(rng: random.Random, parts: list[Formula]) -> Formula:
    result = parts[0]
    for part in parts[1:]:
        result = rng.choice(_JOIN)(result, part)
    return Not(result) if rng.random() < 0.2 else result


def _quantifier(rng: random.Random) -> type[Exists] | type[Forall]:
    return rng.choice([Exists, Forall])


def _quantifier_free(rng: random.Random) -> Formula:
    free = [X, Y]
    return _combine(rng, [_free_atom(rng, free) for _ in range(rng.randint(1, 3))])


def _one_quantifier(rng: random.Random) -> Formula:
    free = [Y] if rng.random() < 0.5 else [X, Y]
    parts = [_bound_atom(rng, Z, free, [-3, -2, -1, 1, 2, 3])]
    if rng.random() < 0.5:
        parts.append(_bound_atom(rng, Z, free, [-1, 1, 2]) if rng.random() < 0.5 else _free_atom(rng, free))
    return _quantifier(rng)(Z, _combine(rng, parts))


def _two_quantifiers(rng: random.Random) -> Formula:
    inner = _bound_atom(rng, Z, [X, Y], [-2, -1, 1, 2], divs=False)
    if rng.random() < 0.4:
        inner = rng.choice([And, Or])(inner, _bound_atom(rng, X, [], [-1, 1], divs=False))
    return _quantifier(rng)(X, _quantifier(rng)(Z, inner))


def _nested(rng: random.Random) -> Formula:
    free = [Y]
    left = _quantifier(rng)(Z, _bound_atom(rng, Z, free, [-2, -1, 1, 2]))
    right: Formula
    if rng.random() < 0.5:
        right = _free_atom(rng, [X, Y])
    else:
        right = _quantifier(rng)(Z, _bound_atom(rng, Z, [X], [-2, -1, 1, 2]))
    return _combine(rng, [left, right])


_SHAPES: list[tuple[str, Callable[[random.Random], Formula]]] = [
    ("quantifier_free", _quantifier_free),
    ("one_quantifier", _one_quantifier),
    ("two_quantifiers", _two_quantifiers),
    ("nested", _nested),
]


def generate_corpus(seed: int = 0, count: int = 50) -> list[CorpusItem]:
    """Deterministic for a given (seed, count)."""
    rng = random.Random(seed)
    items = []
    for i in range(count):
        shape, make = _SHAPES[i % len(_SHAPES)]
        items.append(CorpusItem(i, shape, make(rng)))
    return items


@dataclass(frozen=True, slots=True)
class CorpusResult:
    id: int
    shape: str
    formula: str
    report: CrosscheckReport | None = None
    ledger: SizeLedger | None = None
    error: str | None = None

    @property
    def passed(self) -> bool:
        if self.error is not None or self.report is None or self.ledger is None:
            return False
        return self.report.passed and self.ledger.passed

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "shape": self.shape,
            "formula": self.formula,
            "passed": self.passed,
            "error": self.error,
            "crosscheck": None if self.report is None else self.report.to_dict(),
            "sizes": None if self.ledger is None else self.ledger.to_dict(),
        }


def check_item(item: CorpusItem, opts: CorpusOptions) -> CorpusResult:
    """Crosscheck and size-check one corpus formula; errors become results."""
    compile_opts = CompileOptions(base=opts.base)
    try:
        override = None
        if opts.inject_fault and item.id == 0:
            override = corrupt(compile(item.formula, compile_opts))
        report = crosscheck(item.formula, compile_opts, opts.check, automaton=override)
        ledger = size_report(item.formula, compile_opts)
    except PdwaError as e:
        logger.error("corpus formula %d failed: %s", item.id, e)
        return CorpusResult(item.id, item.shape, str(item.formula), error=str(e))
    return CorpusResult(item.id, item.shape, str(item.formula), report=report, ledger=ledger)


async def run_corpus(items: list[CorpusItem], opts: CorpusOptions) -> list[CorpusResult]:
    """Check ``items`` on worker threads, at most ``opts.workers`` at a time; sorted by id."""
    limiter = anyio.CapacityLimiter(opts.workers)
    results: list[CorpusResult] = []

    async def run_one(item: CorpusItem) -> None:
        result = await anyio.to_thread.run_sync(partial(check_item, item, opts), limiter=limiter)
        logger.info("formula %d (%s): %s", item.id, item.shape, "pass" if result.passed else "FAIL")
        results.append(result)

    async with anyio.create_task_group() as tg:
        for item in items:
            tg.start_soon(run_one, item)
    return sorted(results, key=lambda r: r.id)


@dataclass(frozen=True, slots=True)
class CorpusSummary:
    seed: int
    base: int
    results: tuple[CorpusResult, ...]

    @property
    def failed(self) -> list[CorpusResult]:
        return [r for r in self.results if not r.passed]

    @property
    def passed(self) -> bool:
        return not self.failed

    def to_json(self) -> str:
        return json.dumps({
            "seed": self.seed,
            "base": self.base,
            "count": len(self.results),
            "failed": [r.id for r in self.failed],
            "results": [r.to_dict() for r in self.results],
        })


def run_corpus_sync(opts: CorpusOptions) -> CorpusSummary:
    items = generate_corpus(opts.seed, opts.count)
    results = anyio.run(run_corpus, items, opts)
    return CorpusSummary(opts.seed, opts.base, tuple(results))
