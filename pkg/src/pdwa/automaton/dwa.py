"""
Deterministic and nondeterministic word automata over Σ^r, Σ = {0, ..., ρ-1}.

States are the integers ``0 .. n-1``. Transitions are stored as one row per
state, indexed by letter index (mixed radix, first track most significant),
so ``delta[q][letter_index(b, base)]`` is the successor of ``q`` on ``b``.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Sequence

import networkx as nx

from ..encoding import TupleWord, all_letters, letter_index
from ..errors import AutomatonError
from ..type_utils import Letter, Row, StateId


@dataclass(frozen=True, slots=True)
class Dwa:
    """
    A complete DWA.

    With ``represents_set`` the initial state is non-accepting and has no
    incoming transitions, so λ is rejected and the language can represent a
    subset of Z^r.
    """
    arity: int
    base: int
    delta: tuple[Row, ...]
    initial: StateId
    accepting: frozenset[StateId]
    represents_set: bool = True
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        width = self.base ** self.arity
        n = len(self.delta)
        if not 0 <= self.initial < n:
            raise AutomatonError(f"initial state {self.initial} out of range")
        for q, row in enumerate(self.delta):
            if len(row) != width:
                raise AutomatonError(f"state {q} has {len(row)} transitions, expected {width}")
        if any(not 0 <= q < n for q in self.accepting):
            raise AutomatonError("accepting state out of range")
        if self.labels is not None and len(self.labels) != n:
            raise AutomatonError("one label per state required")

    @property
    def num_states(self) -> int:
        return len(self.delta)

    @property
    def letters(self) -> tuple[Letter, ...]:
        return all_letters(self.arity, self.base)

    def step(self, q: StateId, letter: Letter) -> StateId:
        return self.delta[q][letter_index(letter, self.base)]

    def run(self, letters: Sequence[Letter], start: StateId | None = None) -> StateId:
        q = self.initial if start is None else start
        for letter in letters:
            q = self.delta[q][letter_index(letter, self.base)]
        return q

    def label(self, q: StateId) -> str:
        return self.labels[q] if self.labels is not None else str(q)

    def graph(self) -> nx.DiGraph:
        """Transition graph over state ids; parallel letters collapse to one edge."""
        g = nx.DiGraph()
        g.add_nodes_from(range(self.num_states))
        g.add_edges_from((q, t) for q, row in enumerate(self.delta) for t in set(row))
        return g

    def check_set_invariants(self) -> None:
        """Raise AutomatonError unless the initial state is apart and rejecting."""
        if self.initial in self.accepting:
            raise AutomatonError("initial state of a set automaton must be non-accepting")
        for row in self.delta:
            if self.initial in row:
                raise AutomatonError("initial state of a set automaton has an incoming edge")

    def to_json(self) -> dict[str, Any]:
        transitions = [
            {"from": q, "letter": list(b), "to": row[i]}
            for q, row in enumerate(self.delta)
            for i, b in enumerate(self.letters)
        ]
        return {
            "arity": self.arity,
            "base": self.base,
            "states": self.num_states,
            "initial": self.initial,
            "accepting": sorted(self.accepting),
            "represents_set": self.represents_set,
            "transitions": transitions,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Dwa":
        arity, base, n = data["arity"], data["base"], data["states"]
        width = base ** arity
        rows: list[list[int | None]] = [[None] * width for _ in range(n)]
        for t in data["transitions"]:
            rows[t["from"]][letter_index(tuple(t["letter"]), base)] = t["to"]
        if any(target is None for row in rows for target in row):
            raise AutomatonError("transition relation is not total")
        return cls(
            arity=arity,
            base=base,
            delta=tuple(tuple(row) for row in rows),  # type: ignore[arg-type]
            initial=data["initial"],
            accepting=frozenset(data["accepting"]),
            represents_set=data.get("represents_set", True),
        )


@dataclass(frozen=True, slots=True)
class Nfa:
    """Nondeterministic counterpart of ``Dwa``; ``delta[q][i]`` is a set of states."""
    arity: int
    base: int
    delta: tuple[tuple[frozenset[StateId], ...], ...]
    initial: frozenset[StateId]
    accepting: frozenset[StateId]
    represents_set: bool = True

    @property
    def num_states(self) -> int:
        return len(self.delta)

    def post(self, states: frozenset[StateId], index: int) -> frozenset[StateId]:
        out: set[StateId] = set()
        for q in states:
            out |= self.delta[q][index]
        return frozenset(out)


def membership(a: Dwa, w: TupleWord) -> bool:
    """True iff ``a`` accepts ``w``."""
    if w.arity != a.arity:
        raise AutomatonError(f"word arity {w.arity} does not match automaton arity {a.arity}")
    w.validate(a.base)
    return a.run(w.letters) in a.accepting


def trivial(arity: int, base: int, value: bool) -> Dwa:
    """Set automaton for Z^r (``value``) or ∅: a fresh initial and one sink."""
    width = base ** arity
    return Dwa(
        arity=arity,
        base=base,
        delta=((1,) * width, (1,) * width),
        initial=0,
        accepting=frozenset({1}) if value else frozenset(),
        labels=("qI", "true" if value else "false"),
    )
