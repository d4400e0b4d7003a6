"""
Growth bounds for quantifier elimination, checked against measured values.

The bound values are towers of exponentials. They are computed exactly while
they stay below ``BIT_CAP`` bits; beyond that a bound is reported as
astronomically large and holds trivially.
"""

import json
import logging
from dataclasses import asdict, dataclass, field
from enum import StrEnum
from typing import Any, Sequence

from ..formula import Formula, LengthMeasure, metrics
from ..formula.metrics import length
from ..formula.syntax import Exists, Forall, is_quantifier_free
from .cooper import QeTrace

logger = logging.getLogger(__name__)

BIT_CAP = 10**6


def pow_or_none(base: int | None, exp: int | None, cap_bits: int = BIT_CAP) -> int | None:
    """``base ** exp``, or None when the result would exceed ``cap_bits`` bits."""
    if base is None or exp is None:
        return None
    if exp == 0 or base in (0, 1):
        return base ** exp
    if exp * (abs(base).bit_length() - 1) > cap_bits:
        return None
    return base ** exp


def _mul(a: int | None, b: int | None) -> int | None:
    if a is None or b is None:
        return None
    return a * b


class BoundFamily(StrEnum):
    THEOREM = "theorem"  # bounds in terms of the formula length n
    PRENEX = "prenex"  # bounds in terms of |T|, |D| for one quantifier block


@dataclass(frozen=True, slots=True)
class BoundCheck:
    family: BoundFamily
    name: str
    measured: int
    bound: int | None  # None: astronomically large
    strict: bool = False

    @property
    def passed(self) -> bool:
        if self.bound is None:
            return True
        return self.measured < self.bound if self.strict else self.measured <= self.bound

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": str(self.family),
            "name": self.name,
            "measured": self.measured,
            "bound": "astronomical" if self.bound is None else str(self.bound),
            "relation": "<" if self.strict else "<=",
            "passed": self.passed,
        }


@dataclass(frozen=True, slots=True)
class BoundsReport:
    formula: str
    checks: tuple[BoundCheck, ...]
    steps: int = 0
    trace: tuple[QeTrace, ...] = field(default=(), compare=False)

    @property
    def passed(self) -> bool:
        """All length-based bounds hold; these are the ones a correct QE must meet."""
        return all(c.passed for c in self.checks if c.family is BoundFamily.THEOREM)

    @property
    def prenex_passed(self) -> bool:
        return all(c.passed for c in self.checks if c.family is BoundFamily.PRENEX)

    def failures(self) -> list[BoundCheck]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> str:
        return json.dumps({
            "formula": self.formula,
            "steps": self.steps,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "trace": [asdict(t) for t in self.trace],
        })


def _is_single_block(phi: Formula) -> bool:
    """φ = Q x_1 ... Q x_s θ with one quantifier kind and θ quantifier-free."""
    kind = type(phi)
    if kind not in (Exists, Forall):
        return False
    while isinstance(phi, kind):
        phi = phi.body  # type: ignore[union-attr]
    return is_quantifier_free(phi)


def check_bounds(phi: Formula, psi: Formula, trace: Sequence[QeTrace] = ()) -> BoundsReport:
    """
    Compare ``psi`` (the elimination result for ``phi``) against the growth
    bounds. The length-based family is always reported; the |T|/|D|-based
    family only for single-block formulas.
    """
    mp = metrics(phi)
    mq = metrics(psi)
    n = length(phi, LengthMeasure.LINEAR)
    qa, qbl, qn = mp.qa, mp.qbl, mp.qn
    a = max(2, mp.max_coef, mp.max_div) + 1
    b = max(2, mp.max_const) + 1

    coef_bound = pow_or_none(a, pow_or_none(2, 2 * qn))
    checks: list[BoundCheck] = []

    d_exp = pow_or_none(qbl + 1, qa + 2)
    n_d = pow_or_none(n, None if d_exp is None else 1 + d_exp)
    const_exp = _mul(pow_or_none(2, 3 * qn), n_d)
    theorem = BoundFamily.THEOREM
    checks += [
        BoundCheck(theorem, "|T|", mq.t_set_size, pow_or_none(n, pow_or_none(qbl + 1, qa))),
        BoundCheck(theorem, "|D|", mq.d_set_size, n_d),
        BoundCheck(theorem, "max_coef", mq.max_coef, coef_bound, strict=True),
        BoundCheck(theorem, "max_div", mq.max_div, coef_bound, strict=True),
        BoundCheck(theorem, "max_const", mq.max_const, _mul(b, pow_or_none(a, const_exp)), strict=True),
    ]

    if _is_single_block(phi):
        t = max(2, mp.t_set_size)
        d = max(1, mp.d_set_size)
        prenex = BoundFamily.PRENEX
        d_bound = _mul(d, pow_or_none(t, pow_or_none(qbl + 1, qa + 2)))
        checks += [
            BoundCheck(prenex, "|T|", mq.t_set_size, pow_or_none(t, pow_or_none(qbl + 1, qa))),
            BoundCheck(prenex, "|D|", mq.d_set_size, d_bound),
            BoundCheck(prenex, "max_coef", mq.max_coef, coef_bound, strict=True),
            BoundCheck(prenex, "max_div", mq.max_div, coef_bound, strict=True),
            BoundCheck(
                prenex, "max_const", mq.max_const,
                _mul(b, pow_or_none(a, _mul(pow_or_none(2, 3 * qn), d_bound))), strict=True,
            ),
        ]

    report = BoundsReport(formula=str(phi), checks=tuple(checks), steps=len(trace), trace=tuple(trace))
    for failed in report.failures():
        logger.warning("bound %s/%s violated for %s: %d vs %s", failed.family, failed.name, phi, failed.measured, failed.bound)
    return report
