from collections.abc import Mapping
from typing import TYPE_CHECKING, TypeAlias

if TYPE_CHECKING:
    from .formula.terms import VarId

Letter: TypeAlias = tuple[int, ...]
StateId: TypeAlias = int
Row: TypeAlias = tuple[StateId, ...]
Assignment: TypeAlias = Mapping["VarId", int]
