"""Minimization (Hopcroft partition refinement), emptiness, witnesses, equivalence."""

import logging
from collections import defaultdict, deque

from ..encoding import TupleWord, is_canonical_sign
from ..type_utils import StateId
from .dwa import Dwa
from .ops import Connective, same_alphabet, product

logger = logging.getLogger(__name__)


def reachable(a: Dwa) -> list[StateId]:
    """Reachable states in breadth-first order (letters in index order)."""
    seen = {a.initial}
    order = [a.initial]
    queue = deque([a.initial])
    while queue:
        q = queue.popleft()
        for target in a.delta[q]:
            if target not in seen:
                seen.add(target)
                order.append(target)
                queue.append(target)
    return order


def trim(a: Dwa) -> Dwa:
    """Drop unreachable states, renumbering in breadth-first order."""
    order = reachable(a)
    if len(order) == a.num_states and order == list(range(a.num_states)):
        return a
    new_id = {q: i for i, q in enumerate(order)}
    return Dwa(
        arity=a.arity,
        base=a.base,
        delta=tuple(tuple(new_id[t] for t in a.delta[q]) for q in order),
        initial=0,
        accepting=frozenset(new_id[q] for q in order if q in a.accepting),
        represents_set=a.represents_set,
        labels=None if a.labels is None else tuple(a.labels[q] for q in order),
    )


def _refine(a: Dwa) -> list[int]:
    """Coarsest stable partition, as a block number per state."""
    n = a.num_states
    width = a.base ** a.arity
    inverse: list[list[list[StateId]]] = [[[] for _ in range(n)] for _ in range(width)]
    for q, row in enumerate(a.delta):
        for i, target in enumerate(row):
            inverse[i][target].append(q)

    initial_blocks: list[set[StateId]] = []
    rest = set(range(n))
    if a.represents_set:
        # the initial state stays apart so the result keeps the set invariants
        initial_blocks.append({a.initial})
        rest.discard(a.initial)
    initial_blocks.append({q for q in rest if q in a.accepting})
    initial_blocks.append({q for q in rest if q not in a.accepting})
    blocks = [b for b in initial_blocks if b]

    block_of = [0] * n
    for b, members in enumerate(blocks):
        for q in members:
            block_of[q] = b

    largest = max(range(len(blocks)), key=lambda b: len(blocks[b]))
    pending = {b for b in range(len(blocks)) if b != largest}
    queue = deque(sorted(pending))
    while queue:
        splitter_id = queue.popleft()
        pending.discard(splitter_id)
        splitter = list(blocks[splitter_id])
        for i in range(width):
            touched: dict[int, set[StateId]] = defaultdict(set)
            for q in splitter:
                for p in inverse[i][q]:
                    touched[block_of[p]].add(p)
            for b, hit in touched.items():
                block = blocks[b]
                if len(hit) == len(block):
                    continue
                block -= hit
                new_id = len(blocks)
                blocks.append(hit)
                for p in hit:
                    block_of[p] = new_id
                if b in pending:
                    pending.add(new_id)
                    queue.append(new_id)
                else:
                    smaller = new_id if len(hit) <= len(block) else b
                    pending.add(smaller)
                    queue.append(smaller)
    return block_of


def _block_label(a: Dwa, members: list[StateId]) -> str:
    if len(members) == 1:
        return a.label(members[0])
    shown = "|".join(a.label(q) for q in members[:3])
    return shown + ("|..." if len(members) > 3 else "")


def minimize(a: Dwa) -> Dwa:
    """
    Minimal DWA for the same language, numbered canonically (breadth-first
    from the initial state, letters in index order), so equal languages give
    identical automata. Unreachable states are removed first. For set
    automata the initial state is never merged.
    """
    a = trim(a)
    block_of = _refine(a)
    members: dict[int, list[StateId]] = defaultdict(list)
    for q in range(a.num_states):
        members[block_of[q]].append(q)

    start = block_of[a.initial]
    new_id = {start: 0}
    order = [start]
    queue = deque([start])
    while queue:
        b = queue.popleft()
        for target in a.delta[members[b][0]]:
            tb = block_of[target]
            if tb not in new_id:
                new_id[tb] = len(order)
                order.append(tb)
                queue.append(tb)

    delta = tuple(
        tuple(new_id[block_of[t]] for t in a.delta[members[b][0]]) for b in order
    )
    accepting = frozenset(i for i, b in enumerate(order) if members[b][0] in a.accepting)
    labels = None
    if a.labels is not None:
        labels = tuple(_block_label(a, sorted(members[b])) for b in order)
    if a.num_states > 10_000:
        logger.debug("minimized %d states to %d", a.num_states, len(order))
    return Dwa(
        arity=a.arity,
        base=a.base,
        delta=delta,
        initial=0,
        accepting=accepting,
        represents_set=a.represents_set,
        labels=labels,
    )


def _first_letter_order(a: Dwa) -> list[int]:
    """Letter indices with canonical sign letters first, then lexicographic."""
    letters = a.letters
    return sorted(range(len(letters)), key=lambda i: (not is_canonical_sign(letters[i], a.base), i))


def find_witness(a: Dwa) -> TupleWord | None:
    """
    Shortest accepted word of length ≥ 1, or None.

    Ties prefer a canonical sign letter, then the lexicographically smallest
    letter sequence.
    """
    letters = a.letters
    parent: dict[StateId, tuple[StateId | None, int]] = {}
    queue: deque[StateId] = deque()
    for i in _first_letter_order(a):
        target = a.delta[a.initial][i]
        if target not in parent:
            parent[target] = (None, i)
            queue.append(target)
    while queue:
        q = queue.popleft()
        if q in a.accepting:
            path = []
            node: StateId | None = q
            while node is not None:
                prev, i = parent[node]
                path.append(letters[i])
                node = prev
            return TupleWord(arity=a.arity, letters=tuple(reversed(path)))
        for i, target in enumerate(a.delta[q]):
            if target not in parent:
                parent[target] = (q, i)
                queue.append(target)
    return None


def is_empty_nonlambda(a: Dwa) -> bool:
    """True iff no nonempty word is accepted."""
    seen: set[StateId] = set(a.delta[a.initial])
    queue = deque(seen)
    while queue:
        q = queue.popleft()
        if q in a.accepting:
            return False
        for target in a.delta[q]:
            if target not in seen:
                seen.add(target)
                queue.append(target)
    return True


def equivalent(a: Dwa, b: Dwa) -> bool:
    """Same language on nonempty words."""
    same_alphabet(a, b)
    return is_empty_nonlambda(product(a, b, Connective.XOR))

