"""Graphviz DOT export."""

from collections import defaultdict
from collections.abc import Iterator

from ..type_utils import Letter, StateId
from .dwa import Dwa

Pattern = tuple[int | None, ...]


def _quote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r"\""))


def compress_letters(letters: list[Letter], base: int) -> list[Pattern]:
    """
    Fold letter sets into patterns; ``None`` stands for "any digit".

    Coordinates are folded left to right, a group of patterns collapsing
    when it agrees everywhere else and covers all ``base`` digits.
    """
    patterns: set[Pattern] = set(letters)
    arity = len(letters[0]) if letters else 0
    for pos in range(arity):
        groups: dict[Pattern, set[int]] = defaultdict(set)
        for p in patterns:
            digit = p[pos]
            if digit is not None:
                groups[p[:pos] + (None,) + p[pos + 1:]].add(digit)
        for key, digits in groups.items():
            if len(digits) == base:
                patterns -= {key[:pos] + (d,) + key[pos + 1:] for d in digits}
                patterns.add(key)
    return sorted(patterns, key=lambda p: tuple(-1 if d is None else d for d in p))


def format_pattern(p: Pattern) -> str:
    return "(" + ",".join("-" if d is None else str(d) for d in p) + ")"


def dot_lines(a: Dwa) -> Iterator[str]:
    yield "digraph dwa {"
    for q in range(a.num_states):
        attrs = [f"shape={'doublecircle' if q in a.accepting else 'circle'}"]
        if q == a.initial:
            attrs.append("style=bold")
        attrs.append(f"label={_quote(a.label(q))}")
        yield f"  {q} [{', '.join(attrs)}];"
    edges: dict[tuple[StateId, StateId], list[Letter]] = defaultdict(list)
    letters = a.letters
    for q, row in enumerate(a.delta):
        for i, target in enumerate(row):
            edges[q, target].append(letters[i])
    for (src, dst) in sorted(edges):
        label = " ".join(format_pattern(p) for p in compress_letters(edges[src, dst], a.base))
        yield f"  {src} -> {dst} [label={_quote(label)}];"
    yield "}"


def to_dot(a: Dwa) -> str:
    """
    Render ``a`` as a DOT digraph: one line per state, one per state pair
    with at least one transition. Output is byte-identical across runs.
    """
    return "\n".join(dot_lines(a)) + "\n"
