"""Variables, homogeneous linear terms and affine terms."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import reduce, total_ordering
from math import gcd
from typing import Sequence

from ..errors import FormulaError


@total_ordering
@dataclass(frozen=True, slots=True)
class VarId:
    """A variable with its position in the global variable order."""
    name: str
    index: int

    def __lt__(self, other: "VarId") -> bool:
        return (self.index, self.name) < (other.index, other.name)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class LinearTerm:
    """
    Homogeneous integer linear combination k_1·x_1 + ... + k_r·x_r.

    Coefficients are stored sorted by variable order and never zero; the empty
    combination is the term 0.
    """
    coeffs: tuple[tuple[VarId, int], ...] = ()

    @classmethod
    def of(cls, items: Mapping[VarId, int] | Iterable[tuple[VarId, int]]) -> "LinearTerm":
        pairs = items.items() if isinstance(items, Mapping) else items
        acc: dict[VarId, int] = {}
        for var, k in pairs:
            acc[var] = acc.get(var, 0) + k
        return cls(tuple(sorted(((v, k) for v, k in acc.items() if k != 0), key=lambda p: p[0])))

    @classmethod
    def var(cls, var: VarId, k: int = 1) -> "LinearTerm":
        return cls.of({var: k})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def variables(self) -> tuple[VarId, ...]:
        return tuple(v for v, _ in self.coeffs)

    def coefficient(self, var: VarId) -> int:
        for v, k in self.coeffs:
            if v == var:
                return k
        return 0

    def __add__(self, other: "LinearTerm") -> "LinearTerm":
        return LinearTerm.of([*self.coeffs, *other.coeffs])

    def __neg__(self) -> "LinearTerm":
        return LinearTerm(tuple((v, -k) for v, k in self.coeffs))

    def __sub__(self, other: "LinearTerm") -> "LinearTerm":
        return self + (-other)

    def scale(self, factor: int) -> "LinearTerm":
        if factor == 0:
            return LinearTerm()
        return LinearTerm(tuple((v, k * factor) for v, k in self.coeffs))

    def without(self, var: VarId) -> "LinearTerm":
        return LinearTerm(tuple((v, k) for v, k in self.coeffs if v != var))

    def evaluate(self, assignment: Mapping[VarId, int]) -> int:
        try:
            return sum(k * assignment[v] for v, k in self.coeffs)
        except KeyError as e:
            raise FormulaError(f"no value for variable {e.args[0]}") from None

    def at(self, point: Sequence[int]) -> int:
        """t[b̄] for a point given in coefficient order."""
        return sum(k * b for (_, k), b in zip(self.coeffs, point, strict=True))

    @property
    def norm_neg(self) -> int:
        """‖t‖⁻: sum of the absolute values of the negative coefficients."""
        return sum(-k for _, k in self.coeffs if k < 0)

    @property
    def norm_pos(self) -> int:
        """‖t‖⁺: sum of the positive coefficients."""
        return sum(k for _, k in self.coeffs if k > 0)

    @property
    def content(self) -> int:
        """gcd of the absolute coefficients; 1 for the zero term."""
        if not self.coeffs:
            return 1
        return reduce(gcd, (abs(k) for _, k in self.coeffs))

    def divide(self, g: int) -> "LinearTerm":
        return LinearTerm(tuple((v, k // g) for v, k in self.coeffs))

    def __str__(self) -> str:
        return _format_sum(self.coeffs, 0)


@dataclass(frozen=True, slots=True)
class AffineTerm:
    """A linear term plus an integer constant; raw material for atoms."""
    linear: LinearTerm = LinearTerm()
    constant: int = 0

    @classmethod
    def const(cls, c: int) -> "AffineTerm":
        return cls(LinearTerm(), c)

    @classmethod
    def var(cls, var: VarId, k: int = 1) -> "AffineTerm":
        return cls(LinearTerm.var(var, k), 0)

    def __add__(self, other: "AffineTerm | int") -> "AffineTerm":
        if isinstance(other, int):
            return AffineTerm(self.linear, self.constant + other)
        return AffineTerm(self.linear + other.linear, self.constant + other.constant)

    def __neg__(self) -> "AffineTerm":
        return AffineTerm(-self.linear, -self.constant)

    def __sub__(self, other: "AffineTerm | int") -> "AffineTerm":
        return self + (-other)

    def scale(self, factor: int) -> "AffineTerm":
        return AffineTerm(self.linear.scale(factor), self.constant * factor)

    def evaluate(self, assignment: Mapping[VarId, int]) -> int:
        return self.linear.evaluate(assignment) + self.constant

    def __str__(self) -> str:
        return _format_sum(self.linear.coeffs, self.constant)


def _format_sum(coeffs: tuple[tuple[VarId, int], ...], constant: int) -> str:
    parts: list[tuple[bool, str]] = []
    for var, k in coeffs:
        mag = abs(k)
        parts.append((k < 0, var.name if mag == 1 else f"{mag}*{var.name}"))
    if constant or not parts:
        parts.append((constant < 0, str(abs(constant))))
    negative, text = parts[0]
    out = f"-{text}" if negative else text
    for negative, text in parts[1:]:
        out += f" - {text}" if negative else f" + {text}"
    return out
