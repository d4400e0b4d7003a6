"""
Closure operations on word automata.

All operations return new values; inputs are never modified.
"""

import logging
from collections import deque
from enum import StrEnum
from typing import Sequence

from ..encoding import all_letters, canonical_letter, letter_index
from ..errors import AutomatonError
from ..type_utils import StateId
from .dwa import Dwa, Nfa

logger = logging.getLogger(__name__)


class Connective(StrEnum):
    AND = "and"
    OR = "or"
    IMPLIES = "implies"
    IFF = "iff"
    XOR = "xor"

    def apply(self, p: bool, q: bool) -> bool:
        match self:
            case Connective.AND:
                return p and q
            case Connective.OR:
                return p or q
            case Connective.IMPLIES:
                return (not p) or q
            case Connective.IFF:
                return p == q
            case Connective.XOR:
                return p != q


def same_alphabet(a: Dwa, b: Dwa) -> None:
    if a.arity != b.arity or a.base != b.base:
        raise AutomatonError(
            f"alphabet mismatch: arity {a.arity}/{b.arity}, base {a.base}/{b.base}"
        )


def product(a: Dwa, b: Dwa, op: Connective) -> Dwa:
    """
    Product automaton restricted to reachable pairs.

    Accepting pairs are those where ``op`` holds; when both operands represent
    sets, the initial pair is kept non-accepting.
    """
    same_alphabet(a, b)
    width = a.base ** a.arity
    start = (a.initial, b.initial)
    ids: dict[tuple[StateId, StateId], StateId] = {start: 0}
    order = [start]
    rows: list[tuple[StateId, ...]] = []
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        row_a, row_b = a.delta[p], b.delta[q]
        row = []
        for i in range(width):
            pair = (row_a[i], row_b[i])
            target = ids.get(pair)
            if target is None:
                target = ids[pair] = len(order)
                order.append(pair)
                queue.append(pair)
            row.append(target)
        rows.append(tuple(row))
    represents_set = a.represents_set and b.represents_set
    accepting = {
        s for s, (p, q) in enumerate(order)
        if op.apply(p in a.accepting, q in b.accepting)
    }
    if represents_set:
        accepting.discard(0)
    return Dwa(
        arity=a.arity,
        base=a.base,
        delta=tuple(rows),
        initial=0,
        accepting=frozenset(accepting),
        represents_set=represents_set,
    )


def complement_set(a: Dwa) -> Dwa:
    """Flip acceptance everywhere except at the initial state."""
    if not a.represents_set:
        raise AutomatonError("complement_set needs an automaton that represents a set")
    a.check_set_invariants()
    flipped = frozenset(q for q in range(a.num_states) if q not in a.accepting and q != a.initial)
    return Dwa(
        arity=a.arity,
        base=a.base,
        delta=a.delta,
        initial=a.initial,
        accepting=flipped,
        labels=a.labels,
    )


def cylindrify(a: Dwa, insert_track_at: int) -> Dwa:
    """Add a track at ``insert_track_at`` that the automaton ignores."""
    if not 0 <= insert_track_at <= a.arity:
        raise AutomatonError(f"track position {insert_track_at} out of range 0..{a.arity}")
    source = [
        letter_index(b[:insert_track_at] + b[insert_track_at + 1:], a.base)
        for b in all_letters(a.arity + 1, a.base)
    ]
    delta = tuple(tuple(row[i] for i in source) for row in a.delta)
    return Dwa(
        arity=a.arity + 1,
        base=a.base,
        delta=delta,
        initial=a.initial,
        accepting=a.accepting,
        represents_set=a.represents_set,
        labels=a.labels,
    )


def align(a: Dwa, tracks: Sequence[object], target: Sequence[object]) -> Dwa:
    """
    Cylindrify ``a`` (whose tracks are ``tracks``) to the track list ``target``.

    ``tracks`` must be a subsequence of ``target``.
    """
    positions = []
    it = iter(enumerate(target))
    for track in tracks:
        for pos, candidate in it:
            if candidate == track:
                positions.append(pos)
                break
        else:
            raise AutomatonError(f"track {track} is not in the target order")
    present = set(positions)
    for pos in range(len(target)):
        if pos not in present:
            a = cylindrify(a, pos)
    return a


def project_exists(a: Dwa, track: int) -> Nfa:
    """
    Existential projection of ``track``, with sign-saturation.

    A tuple ȳ may have only pre-images whose projected coordinate needs a
    longer encoding than ȳ. Its encoding b̄u is then read as s^k b̄u with
    s = canon(b̄), so the fresh initial state also moves, on b̄, to
    δ(R_s, s) where R_s collects the states reachable from the initial
    state by s^k, k ≥ 1.
    """
    if not a.represents_set:
        raise AutomatonError("project_exists needs an automaton that represents a set")
    if not 0 <= track < a.arity:
        raise AutomatonError(f"track {track} out of range 0..{a.arity - 1}")
    rho = a.base
    arity = a.arity - 1
    lifted = [
        [letter_index(b[:track] + (x,) + b[track:], rho) for x in range(rho)]
        for b in all_letters(arity, rho)
    ]
    old_delta = a.delta
    delta: list[tuple[frozenset[StateId], ...]] = [
        tuple(frozenset(row[i] for i in sources) for sources in lifted)
        for row in old_delta
    ]
    nfa_states = len(delta)

    def post(states: frozenset[StateId], index: int) -> frozenset[StateId]:
        out: set[StateId] = set()
        for q in states:
            out |= delta[q][index]
        return frozenset(out)

    start = frozenset({a.initial})
    saturated: dict[int, frozenset[StateId]] = {}
    for s in {canonical_letter(b, rho) for b in all_letters(arity, rho)}:
        s_index = letter_index(s, rho)
        seen: set[frozenset[StateId]] = set()
        reach: set[StateId] = set()
        current = post(start, s_index)
        while current not in seen:
            seen.add(current)
            reach |= current
            current = post(current, s_index)
        saturated[s_index] = post(frozenset(reach), s_index)

    fresh = nfa_states
    fresh_row = []
    for i, b in enumerate(all_letters(arity, rho)):
        s_index = letter_index(canonical_letter(b, rho), rho)
        fresh_row.append(post(start, i) | saturated[s_index])
    delta.append(tuple(fresh_row))
    logger.debug("projected track %d: %d NFA states", track, len(delta))
    return Nfa(
        arity=arity,
        base=rho,
        delta=tuple(delta),
        initial=frozenset({fresh}),
        accepting=a.accepting - {a.initial},
        represents_set=True,
    )


def determinize(n: Nfa) -> Dwa:
    """Subset construction over the reachable subsets only."""
    width = n.base ** n.arity
    ids: dict[frozenset[StateId], StateId] = {n.initial: 0}
    order = [n.initial]
    rows: list[tuple[StateId, ...]] = []
    queue = deque([n.initial])
    while queue:
        subset = queue.popleft()
        row = []
        for i in range(width):
            target_set = n.post(subset, i)
            target = ids.get(target_set)
            if target is None:
                target = ids[target_set] = len(order)
                order.append(target_set)
                queue.append(target_set)
            row.append(target)
        rows.append(tuple(row))
    accepting = frozenset(s for s, subset in enumerate(order) if subset & n.accepting)
    return Dwa(
        arity=n.arity,
        base=n.base,
        delta=tuple(rows),
        initial=0,
        accepting=accepting,
        represents_set=n.represents_set,
    )


def as_nfa(a: Dwa) -> Nfa:
    """View a DWA as an NFA (singleton successor sets)."""
    return Nfa(
        arity=a.arity,
        base=a.base,
        delta=tuple(tuple(frozenset({t}) for t in row) for row in a.delta),
        initial=frozenset({a.initial}),
        accepting=a.accepting,
        represents_set=a.represents_set,
    )
