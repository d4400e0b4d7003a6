"""
MULT_m = {(a, b, c) : 0 ≤ a, b < ρ^m, a·b = c}, whose minimal automaton needs at
least ρ^m states.
"""

import json
import logging
from dataclasses import asdict, dataclass

from ..automaton import Dwa, minimize
from ..encoding import all_letters
from ..errors import CapExceeded, EngineError

logger = logging.getLogger(__name__)

DEFAULT_CAP = 200_000


def build_mult(m: int, base: int = 2, cap: int = DEFAULT_CAP) -> Dwa:
    """
    Minimal automaton for MULT_m over tracks (a, b, c).

    States track the values read so far; a, b ≥ ρ^m or c ≥ ρ^{2m} and every
    nonzero sign digit lead to a dead state.

    Raises:
        CapExceeded: if the unminimized automaton would have more than ``cap``
            states.
    """
    if m < 0:
        raise EngineError(f"m must be non-negative, got {m}")
    if base < 2:
        raise EngineError(f"base must be at least 2, got {base}")
    raw = base ** (4 * m) + 2
    if raw > cap:
        raise CapExceeded(f"MULT_{m} at base {base} needs {raw} states, cap is {cap}")

    side = base ** m
    prod_side = side * side
    letters = all_letters(3, base)
    dead = 1

    def state(a: int, b: int, c: int) -> int:
        if a >= side or b >= side or c >= prod_side:
            return dead
        return 2 + (a * side + b) * prod_side + c

    delta = [
        tuple(state(0, 0, 0) if letter == (0, 0, 0) else dead for letter in letters),
        (dead,) * len(letters),
    ]
    accepting = set()
    for a in range(side):
        for b in range(side):
            for c in range(prod_side):
                delta.append(tuple(
                    state(base * a + x, base * b + y, base * c + z) for x, y, z in letters
                ))
                if a * b == c:
                    accepting.add(state(a, b, c))
    raw_dwa = Dwa(
        arity=3,
        base=base,
        delta=tuple(delta),
        initial=0,
        accepting=frozenset(accepting),
    )
    result = minimize(raw_dwa)
    logger.info("MULT_%d at base %d: %d raw states, %d minimal", m, base, raw, result.num_states)
    return result


@dataclass(frozen=True, slots=True)
class MultBench:
    m: int
    base: int
    raw_states: int
    minimized_states: int
    lower_bound: int

    @property
    def passed(self) -> bool:
        return self.minimized_states >= self.lower_bound

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"MULT_{self.m} base {self.base}: minimized {self.minimized_states} >= {self.lower_bound}: {verdict}"

    def to_json(self) -> str:
        return json.dumps({**asdict(self), "passed": self.passed})


def bench_mult(m: int, base: int = 2, cap: int = DEFAULT_CAP) -> MultBench:
    a = build_mult(m, base, cap)
    return MultBench(
        m=m,
        base=base,
        raw_states=base ** (4 * m) + 2,
        minimized_states=a.num_states,
        lower_bound=base ** m,
    )
