"""Automata for (in)equations t ⋈ c: bounded, and optimal (minimal) constructions."""

import logging

import networkx as nx

from ..automaton import Dwa, complement_set, trim, trivial
from ..errors import AtomError
from ..formula import FALSE, Cmp, FalseLit, Rel
from .eta import AtomAutomatonSpec, letter_values

logger = logging.getLogger(__name__)


def _clamp(q: int, lo: int, hi: int) -> int:
    return lo if q < lo else hi if q > hi else q


def build_bounded(atom: Cmp, base: int, m: int | None = None, n: int | None = None) -> Dwa:
    """
    A^{t⋈c}_{(m,n)}: states q_I and the integers m..n, η clamped to [m, n].

    ``m`` must be small and ``n`` large for the atom; they default to the
    tightest such values. State ``1 + (q - m)`` stands for the integer q.
    """
    spec = AtomAutomatonSpec.of(atom, base)
    m = spec.small_max if m is None else m
    n = spec.large_min if n is None else n
    if m >= n:
        raise AtomError(f"need m < n, got m={m}, n={n}")
    if not spec.is_small(m):
        raise AtomError(f"{m} is not small for {atom}")
    if not spec.is_large(n):
        raise AtomError(f"{n} is not large for {atom}")

    values = letter_values(atom.term, base)

    def index(q: int) -> int:
        return 1 + (_clamp(q, m, n) - m)

    delta = [tuple(index(init) for init, _ in values)]
    for q in range(m, n + 1):
        delta.append(tuple(index(base * q + v) for _, v in values))
    accepting = frozenset(1 + (q - m) for q in range(m, n + 1) if atom.rel.holds(q, atom.constant))
    return Dwa(
        arity=spec.arity,
        base=base,
        delta=tuple(delta),
        initial=0,
        accepting=accepting,
        labels=("qI", *(str(q) for q in range(m, n + 1))),
    )


def gcd_reduce(atom: Cmp) -> Cmp | FalseLit:
    """Divide t by gcd(t): ⌊c/g⌋ for >, ⌈c/g⌉ for <, exact division for =."""
    g = atom.term.content
    if g == 1:
        return atom
    t, c = atom.term.divide(g), atom.constant
    match atom.rel:
        case Rel.GT:
            return Cmp(t, Rel.GT, c // g)
        case Rel.LT:
            return Cmp(t, Rel.LT, -(-c // g))
        case Rel.EQ:
            return Cmp(t, Rel.EQ, c // g) if c % g == 0 else FALSE
    raise AtomError(f"gcd reduction is defined for <, > and =, not {atom.rel}")


def merge_sequence(atom: Cmp, base: int) -> tuple[int, ...]:
    """
    The finite part d_1 > ... > d_ℓ = ‖t‖⁻ of the merge sequence (d_0 = ∞).

    The states of [d_i, d_{i-1}) are pairwise equivalent. Each d_{i+1} is the
    least d ≥ ‖t‖⁻ for which ρd + t[b̄] and ρ(d_i - 1) + t[b̄] fall into the
    same block [d_j, d_{j-1}), j ≤ i, for every letter b̄.
    """
    t, c = atom.term, atom.constant
    if atom.rel is not Rel.GT or c < 0:
        raise AtomError(f"merge sequence needs t > c with c >= 0, got {atom}")
    if t.content != 1:
        raise AtomError(f"merge sequence needs gcd(t) = 1, got {atom}")
    floor = t.norm_neg
    values = [v for _, v in letter_values(t, base)]
    seq = [max(c + 1, floor)]

    def block_floor(q: int) -> int | None:
        # lower end of the fixed block containing q, None below the last one
        for d in seq:
            if q >= d:
                return d
        return None

    while seq[-1] > floor:
        top = seq[-1] - 1
        candidate = floor
        for v in values:
            lo = block_floor(base * top + v)
            if lo is None:
                candidate = top
                break
            candidate = max(candidate, -((v - lo) // base))
        seq.append(candidate)
    return tuple(seq)


def _block_label(lo: int, hi: int | None) -> str:
    return f"[{lo},{'inf' if hi is None else hi})"


def _ineq_gt(atom: Cmp, base: int) -> Dwa:
    """Quotient of the bounded automaton for t > c, c ≥ 0, gcd(t) = 1."""
    spec = AtomAutomatonSpec.of(atom, base)
    m, n = spec.small_max, spec.large_min
    seq = merge_sequence(atom, base)
    low, high = -spec.norm_pos, spec.norm_neg

    # class 0 is q_I, class 1 is R = {m, m+1}, then S, then one class per block
    labels = ["qI", f"{{{m},{m + 1}}}"]
    reps = [m]
    singles = {}
    for s in range(low + 1, high):
        singles[s] = len(reps) + 1
        reps.append(s)
        labels.append(str(s))
    first_block = len(reps) + 1
    for i, d in enumerate(seq):
        reps.append(d)
        labels.append(_block_label(d, seq[i - 1] if i else None))

    def class_of(q: int) -> int:
        q = _clamp(q, m, n)
        if q <= low:
            return 1
        if q < high:
            return singles[q]
        for i, d in enumerate(seq):
            if q >= d:
                return first_block + i
        raise AssertionError(f"state {q} lies below every block")

    values = letter_values(atom.term, base)
    delta = [tuple(class_of(init) for init, _ in values)]
    for rep in reps:
        delta.append(tuple(class_of(base * rep + v) for _, v in values))
    accepting = frozenset(
        k + 1 for k, rep in enumerate(reps) if rep > atom.constant
    )
    return trim(Dwa(
        arity=spec.arity,
        base=base,
        delta=tuple(delta),
        initial=0,
        accepting=accepting,
        labels=tuple(labels),
    ))


def build_ineq_optimal(atom: Cmp, base: int) -> Dwa:
    """
    Minimal automaton for t < c or t > c.

    After gcd reduction every case reduces to the merged construction for
    t > c with c ≥ 0, possibly on -t and possibly complemented.
    """
    if atom.rel not in (Rel.LT, Rel.GT):
        raise AtomError(f"expected an inequation with < or >, got {atom}")
    reduced = gcd_reduce(atom)
    assert isinstance(reduced, Cmp)
    t, c = reduced.term, reduced.constant
    if reduced.rel is Rel.GT:
        if c >= 0:
            result = _ineq_gt(reduced, base)
        else:
            result = complement_set(_ineq_gt(Cmp(-t, Rel.GT, -c - 1), base))
    elif c <= 0:
        result = _ineq_gt(Cmp(-t, Rel.GT, -c), base)
    else:
        result = complement_set(_ineq_gt(Cmp(t, Rel.GT, c - 1), base))
    logger.debug("optimal automaton for %s: %d states", atom, result.num_states)
    return result


def build_eq_optimal(atom: Cmp, base: int) -> Dwa:
    """
    Minimal automaton for t = c: the bounded automaton with every state that
    cannot reach c collapsed into one rejecting sink.
    """
    if atom.rel is not Rel.EQ:
        raise AtomError(f"expected an equation, got {atom}")
    reduced = gcd_reduce(atom)
    if not isinstance(reduced, Cmp):
        return trivial(len(atom.term.coeffs), base, False)
    bounded = build_bounded(reduced, base)
    m = AtomAutomatonSpec.of(reduced, base).small_max
    target = 1 + (reduced.constant - m)
    live = nx.ancestors(bounded.graph(), target) | {target}
    live.discard(bounded.initial)

    kept = [q for q in range(1, bounded.num_states) if q in live]
    new_id = {q: i + 1 for i, q in enumerate(kept)}
    sink = len(kept) + 1

    def remap(q: int) -> int:
        return new_id.get(q, sink)

    delta = [tuple(remap(t) for t in bounded.delta[0])]
    delta += [tuple(remap(t) for t in bounded.delta[q]) for q in kept]
    delta.append((sink,) * len(bounded.delta[0]))
    labels = ["qI", *(bounded.label(q) for q in kept), "dead"]
    return trim(Dwa(
        arity=bounded.arity,
        base=base,
        delta=tuple(delta),
        initial=0,
        accepting=frozenset({new_id[target]}),
        labels=tuple(labels),
    ))
