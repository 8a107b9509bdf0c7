"""Machine replay of the numeric inequality chains behind the GRH bounds
q2 < 2.5 (log f)^2 and r < 2.5 (ell-1)^2 (log f)^2.

Each step is evaluated twice: ``rounded`` feeds the chain with the
published constants of the preceding steps, ``exact`` recomputes every
quantity from psi_Q(3/2), zeta'(2)/zeta(2) and the actual x.  A step passes
when the exact value satisfies the claimed direction.  Every quantity that
depends on f is decreasing in f (and in ell for the r chain) past the
domain boundary, so the boundary is the tightest point.
"""

from __future__ import annotations

import math
import operator
from dataclasses import asdict, dataclass, field

from .bounds import (
    analytic_constants,
    zero_sum_bound_chi,
    zero_sum_bound_chi_rounded,
    zero_sum_bound_K,
    zero_sum_bound_K_rounded,
)
from .errors import DomainError
from .modmath import is_prime_u64

_OPS = {"<": operator.lt, "<=": operator.le, ">": operator.gt, ">=": operator.ge}


@dataclass(frozen=True)
class AuditStep:
    label: str
    relation: str
    claimed: float
    rounded: float
    exact: float

    @property
    def passed(self) -> bool:
        return _OPS[self.relation](self.exact, self.claimed)

    @property
    def rounded_holds(self) -> bool:
        return _OPS[self.relation](self.rounded, self.claimed)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        d["rounded_holds"] = self.rounded_holds
        return d


@dataclass
class ProofAuditReport:
    context: str  # "Q2Proof" or "RProof"
    ell: int | None
    f: float
    steps: list[AuditStep] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.steps)

    def failed_steps(self) -> list[AuditStep]:
        return [s for s in self.steps if not s.passed]

    def step(self, label: str) -> AuditStep:
        for s in self.steps:
            if s.label == label:
                return s
        raise KeyError(label)

    def to_dict(self) -> dict:
        return {"context": self.context, "ell": self.ell, "f": self.f,
                "passed": self.passed, "steps": [s.to_dict() for s in self.steps]}


def audit_q2_proof(f: float) -> ProofAuditReport:
    if f < 1e9:
        raise DomainError(f"q2 audit needs f >= 1e9, got {f}")
    zeta2 = abs(analytic_constants().zeta_log_deriv_2)
    L = math.log(f)
    x = 2.5 * L * L
    sx = math.sqrt(x)
    lx = math.log(x)
    sig_r = zero_sum_bound_chi_rounded(f)
    sig_e = zero_sum_bound_chi(f, 0.5)
    rep = ProofAuditReport("Q2Proof", None, f)
    add = rep.steps.append

    add(AuditStep("x>1073", ">", 1073, x, x))
    add(AuditStep("zero-sum constant 0.437", "<=", 0.437, 0.437, sig_e - 0.5 * L))
    add(AuditStep("(1/sqrt x) sum_rho <= 1/3", "<=", 1 / 3, sig_r / sx, sig_e / sx))
    small = lambda s: lx / sx * 25 / 6 + s + 40 / 9 / sx
    add(AuditStep("< 4/sqrt x", "<", 4, small(1 / 3), small(sig_e / sx)))
    mid_r = (2.5 * sig_r + 2 * zeta2) / sx
    mid_e = (2.5 * sig_e + 2 * zeta2) / sx
    add(AuditStep("< 0.869", "<", 0.869, mid_r, mid_e))
    add(AuditStep("(log x)/sqrt x <= 0.214", "<=", 0.214, lx / sx, lx / sx))
    add(AuditStep("0.186", "<=", 0.186, 0.869 * 0.214, mid_e * lx / sx))
    sq = 2 * lx * lx / sx
    add(AuditStep("2(log x)^2/sqrt x <= 2.98", "<=", 2.98, sq, sq))
    const_r = 0.437 + 2.98 + 0.186
    const_e = (sig_e - 0.5 * L) + sq + mid_e * lx / sx
    add(AuditStep("1/2 log f + 3.61", "<=", 3.61, const_r, const_e))
    add(AuditStep("9/8 log f + 8.13", "<=", 8.13, 9 / 4 * 3.61, 9 / 4 * const_e))
    # sqrt(x) <= 9/8 log f + c  and the claim  <= 1.52 log f, as a ratio to log f
    add(AuditStep("<= 1.52 log f", "<=", 1.52, 9 / 8 + 8.13 / L, 9 / 8 + 9 / 4 * const_e / L))
    add(AuditStep("x <= 2.32(log f)^2", "<=", 2.32, 1.52**2, (9 / 8 + 9 / 4 * const_e / L) ** 2))
    add(AuditStep("terminal 2.32 < 2.5", "<", 2.5, 2.32, (9 / 8 + 9 / 4 * const_e / L) ** 2))
    return rep


def audit_r_proof(ell: int, f: float) -> ProofAuditReport:
    if ell < 3 or ell % 2 == 0 or not is_prime_u64(ell):
        raise DomainError(f"ell must be an odd prime, got {ell}")
    if f < 1e8:
        raise DomainError(f"r audit needs f >= 1e8, got {f}")
    zeta2 = abs(analytic_constants().zeta_log_deriv_2)
    psi = analytic_constants().psiQ_3_2
    L = math.log(f)
    x = 2.5 * (ell - 1) ** 2 * L * L
    sx = math.sqrt(x)
    lx = math.log(x)
    sig_r = zero_sum_bound_K_rounded(ell, f)
    sig_e = zero_sum_bound_K(ell, f, 0.5)
    rep = ProofAuditReport("RProof", ell, f)
    add = rep.steps.append

    add(AuditStep("x>3393", ">", 3393, x, x))
    # published -2.23 ell + 5.34 must dominate the exact 2 psi_Q(3/2) ell + 16/3
    add(AuditStep("-2.23 l + 5.34 rounding", "<=", -2.23 * ell + 5.34,
                  -2.23 * ell + 5.34, 2 * psi * ell + 16 / 3))
    c = 1 / (2 * math.sqrt(2.5))
    add(AuditStep("1/(2 sqrt 2.5)", "<=", c, sig_r / sx, sig_e / sx))
    small = lambda s: lx / sx * 25 / 6 + s + 40 / 9 / sx
    add(AuditStep("< 4/sqrt x", "<", 4, small(c), small(sig_e / sx)))
    mid_r = (2.5 * sig_r + ell * zeta2) / sx
    mid_e = (2.5 * sig_e + ell * zeta2) / sx
    add(AuditStep("< 0.82", "<", 0.82, mid_r, mid_e))
    add(AuditStep("<= 0.14", "<=", 0.14, lx / sx, lx / sx))
    add(AuditStep("0.12", "<=", 0.12, 0.82 * 0.14, mid_e * lx / sx))
    sq = 2 * lx * lx / sx  # 2 l (log x)^2 / sqrt x, divided by l
    add(AuditStep("<= 2.27 l", "<=", 2.27, sq, sq))
    # constant parts after removing 1/2 (l-1) log f
    lin_r = 0.5 * (-2.23 * ell + 5.34) + 2.27 * ell + 0.12
    lin_e = 0.5 * (2 * psi * ell + 16 / 3) + sq * ell + mid_e * lx / sx
    add(AuditStep("1.16 l + 2.79", "<=", 1.16 * ell + 2.79, lin_r, lin_e))
    add(AuditStep("2.61 l + 6.28", "<=", 2.61 * ell + 6.28, 9 / 4 * (1.16 * ell + 2.79), 9 / 4 * lin_e))
    base = (ell - 1) * L
    ratio_r = 9 / 8 + (2.61 * ell + 6.28) / base
    ratio_e = 9 / 8 + 9 / 4 * lin_e / base
    add(AuditStep("<= 1.51(l-1) log f", "<=", 1.51, ratio_r, ratio_e))
    add(AuditStep("x <= 2.3(l-1)^2(log f)^2", "<=", 2.3, 1.51**2, ratio_e**2))
    add(AuditStep("terminal 2.3 < 2.5", "<", 2.5, 2.3, ratio_e**2))
    return rep
