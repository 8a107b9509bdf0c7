"""Sufficient conditions for a Galois field of odd prime degree ell and
conductor f to fail to be norm-Euclidean, and the verdict pipeline that
applies them.

Logarithms are natural throughout.  Floating-point left-hand sides are
inflated by a factor (1 + 2**-40) before comparison so that a reported
exclusion survives rounding; condition (1) is exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .characters import build_character
from .errors import DomainError, WrongPairing
from .nonresidue import NonResidueData, nonresidue_data

ROUND_UP = 1.0 + 2.0**-40

NORM_EUCLIDEAN_CUBIC_CONDUCTORS = (7, 9, 13, 19, 31, 37, 43, 61, 67, 103, 109, 127, 157)


@dataclass(frozen=True)
class Inequality:
    """One evaluated comparison ``lhs <relation> rhs``."""

    label: str
    lhs: float
    relation: str  # "<" or "<="
    rhs: float

    @property
    def holds(self) -> bool:
        if self.relation == "<":
            return self.lhs < self.rhs
        return self.lhs <= self.rhs

    def to_dict(self) -> dict:
        return {"label": self.label, "lhs": self.lhs, "relation": self.relation,
                "rhs": self.rhs, "holds": self.holds}


@dataclass(frozen=True)
class ConditionResult:
    condition: str
    guard_ok: bool
    guard: str
    inequalities: tuple[Inequality, ...] = ()

    @property
    def holds(self) -> bool:
        return self.guard_ok and all(i.holds for i in self.inequalities)

    def reason(self) -> str:
        if not self.guard_ok:
            return f"guard failed: {self.guard}"
        failed = [i for i in self.inequalities if not i.holds]
        if not failed:
            return "holds"
        return "; ".join(f"{i.label}: {i.lhs!r} {i.relation} {i.rhs!r} is false" for i in failed)

    def to_dict(self) -> dict:
        return {"condition": self.condition, "guard": self.guard, "guard_ok": self.guard_ok,
                "inequalities": [i.to_dict() for i in self.inequalities], "holds": self.holds}


# --- conditions on (q1, q2, r) --------------------------------------------


def t8_condition_1(f: int, q1: int, q2: int, r: int) -> ConditionResult:
    mod = q1 * q1
    target = f % mod
    hits = [k for k in range(1, q1) if (r * q2 * k) % mod == target]
    guard = f"r*q2*k != f (mod q1^2) for k=1..{q1 - 1}" + (f"; hit at k={hits}" if hits else "")
    prod = Inequality("(q1-1)(q2 r-1) <= f", (q1 - 1) * (q2 * r - 1), "<=", f)
    return ConditionResult("T8-1", not hits, guard, (prod,))


def _float_condition(name: str, guard_ok: bool, guard: str, label: str, lhs: float, f: int) -> ConditionResult:
    return ConditionResult(name, guard_ok, guard, (Inequality(label, lhs * ROUND_UP, "<", f),))


def t8_condition_2(f: int, q1: int, q2: int, r: int) -> ConditionResult:
    return _float_condition("T8-2", q1 not in (2, 3), "q1 not in {2,3}",
                            "3 q1 q2 r log q1 < f", 3 * q1 * q2 * r * math.log(q1), f)


def t8_condition_3(f: int, q1: int, q2: int, r: int) -> ConditionResult:
    return _float_condition("T8-3", q1 not in (2, 3, 7), "q1 not in {2,3,7}",
                            "2.1 q1 q2 r log q1 < f", 2.1 * q1 * q2 * r * math.log(q1), f)


def t8_condition_4(f: int, q1: int, q2: int, r: int) -> ConditionResult:
    prod = Inequality("3 q2 r < f", 3 * q2 * r, "<", f)
    return ConditionResult("T8-4", q1 == 2 and q2 != 3, "q1 = 2 and q2 != 3", (prod,))


def t8_condition_5(f: int, q1: int, q2: int, r: int) -> ConditionResult:
    prod = Inequality("5 q2 r < f", 5 * q2 * r, "<", f)
    return ConditionResult("T8-5", q1 == 3 and q2 != 5, "q1 = 3 and q2 != 5", (prod,))


def p9_special(ell: int, f: int, q1: int, q2: int) -> ConditionResult:
    if (q1, q2) == (2, 3):
        lhs = 72 * (ell - 1) * math.sqrt(f) * math.log(4 * f) + 35
        label, name = "72(l-1) f^1/2 log 4f + 35 <= f", "P9-1"
    elif (q1, q2) == (3, 5):
        lhs = 507 * (ell - 1) * math.sqrt(f) * math.log(9 * f) + 448
        label, name = "507(l-1) f^1/2 log 9f + 448 <= f", "P9-2"
    else:
        raise WrongPairing(f"(q1, q2) = ({q1}, {q2}) is neither (2, 3) nor (3, 5)")
    return ConditionResult(name, True, f"(q1, q2) = ({q1}, {q2})",
                           (Inequality(label, lhs * ROUND_UP, "<=", f),))


def check_t8_condition_1(f, q1, q2, r) -> bool:
    return t8_condition_1(f, q1, q2, r).holds


def check_t8_condition_2(f, q1, q2, r) -> bool:
    return t8_condition_2(f, q1, q2, r).holds


def check_t8_condition_3(f, q1, q2, r) -> bool:
    return t8_condition_3(f, q1, q2, r).holds


def check_t8_condition_4(f, q1, q2, r) -> bool:
    return t8_condition_4(f, q1, q2, r).holds


def check_t8_condition_5(f, q1, q2, r) -> bool:
    return t8_condition_5(f, q1, q2, r).holds


def check_p9_special(ell, f, q1, q2) -> bool:
    return p9_special(ell, f, q1, q2).holds


# --- conductor-only sufficient conditions ----------------------------------


def theorem5_lhs(ell: int, f: float) -> float:
    """38 (ell-1)^2 (log f)^6 log log f."""
    if not f > math.e:
        raise DomainError(f"log log f needs f > e, got {f}")
    L = math.log(f)
    return 38 * (ell - 1) ** 2 * L**6 * math.log(L)


def theorem26_lhs(ell: int, f: float) -> float:
    """5825 (ell-1)^2 (log f)^4."""
    if not f > 1:
        raise DomainError(f"f must exceed 1, got {f}")
    return 5825 * (ell - 1) ** 2 * math.log(f) ** 4


def ugly_lhs(ell: int, f: float) -> float:
    """26.25 (ell-1)^2 y^2 log(y) (log f)^4 with y = 1.17 log f - 6.3."""
    if not f > 1:
        raise DomainError(f"f must exceed 1, got {f}")
    L = math.log(f)
    y = 1.17 * L - 6.3
    if not y > 1:
        raise DomainError(f"1.17 log f - 6.3 = {y} must exceed 1")
    return 26.25 * (ell - 1) ** 2 * y * y * math.log(y) * L**4


def theorem5_check(ell: int, f: float) -> bool:
    return theorem5_lhs(ell, f) * ROUND_UP < f


def theorem26_check(ell: int, f: float) -> bool:
    return theorem26_lhs(ell, f) * ROUND_UP < f


def ugly_condition_check(ell: int, f: float) -> bool:
    return ugly_lhs(ell, f) * ROUND_UP <= f


# --- verdicts ---------------------------------------------------------------


@dataclass
class ExclusionVerdict:
    ell: int
    f: int
    outcome: str  # "Excluded" or "Inconclusive"
    fired_condition: Optional[str] = None
    nonresidue: Optional[NonResidueData] = None
    witnesses: list[ConditionResult] = field(default_factory=list)
    failure_log: dict[str, str] = field(default_factory=dict)
    note: Optional[str] = None

    @property
    def excluded(self) -> bool:
        return self.outcome == "Excluded"

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "f": self.f,
            "outcome": self.outcome,
            "fired_condition": self.fired_condition,
            "nonresidue": None if self.nonresidue is None else self.nonresidue.to_dict(),
            "witnesses": [w.to_dict() for w in self.witnesses],
            "failure_log": dict(self.failure_log),
            "note": self.note,
        }


T8_ORDER = ("T8-3", "T8-2", "T8-1", "T8-4", "T8-5")
_T8 = {
    "T8-1": t8_condition_1,
    "T8-2": t8_condition_2,
    "T8-3": t8_condition_3,
    "T8-4": t8_condition_4,
    "T8-5": t8_condition_5,
}


def evaluate_exclusion(ell: int, f: int) -> ExclusionVerdict:
    if f == ell * ell:
        return ExclusionVerdict(
            ell, f, "Inconclusive",
            failure_log={"T8": "requires gcd(f, ell) = 1", "P9": "not attempted"},
            note=f"f = ell^2 = {f}: conductor shares a factor with ell, criteria do not apply",
        )
    chi = build_character(ell, f)
    data = nonresidue_data(chi)
    verdict = ExclusionVerdict(ell, f, "Inconclusive", nonresidue=data)
    if (data.q1, data.q2) in ((2, 3), (3, 5)):
        attempts = [p9_special(ell, f, data.q1, data.q2)]
    else:
        attempts = (_T8[name](f, data.q1, data.q2, data.r) for name in T8_ORDER)
    for res in attempts:
        verdict.witnesses.append(res)
        if res.holds:
            verdict.outcome = "Excluded"
            verdict.fired_condition = res.condition
            verdict.failure_log.clear()
            return verdict
        verdict.failure_log[res.condition] = res.reason()
    return verdict
