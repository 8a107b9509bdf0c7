"""Order-ell Dirichlet characters modulo a prime conductor.

A value chi(n) = zeta_ell**j is stored as the exponent j in Z/ell, so every
comparison the exclusion criteria need is exact integer arithmetic.  The
character is normalised to send the least primitive root g to exponent 1.

For the fields handled here the Dedekind zeta function factors as
zeta_K(s) = zeta(s) * prod_{k=1}^{ell-1} L(s, chi**k); the powers chi**k
share the residue set of chi, which is why the canonical choice is harmless.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import ArgumentNotCoprime, BadCongruence, NotOddPrime, NotPrime
from .modmath import is_prime_u64, primitive_root

MAX_ELL = 97


@dataclass(frozen=True)
class FieldParams:
    """Degree ell and prime conductor f; the discriminant is f**(ell-1)."""

    ell: int
    f: int

    def __post_init__(self):
        validate_params(self.ell, self.f)

    @property
    def discriminant_exponent(self) -> int:
        return self.ell - 1

    @property
    def discriminant(self) -> tuple[int, int]:
        """(base, exponent); never expanded."""
        return (self.f, self.ell - 1)


@dataclass(frozen=True)
class CharValue:
    """Either Zero (f divides the argument) or a root of unity zeta**exponent."""

    exponent: Optional[int]

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    @property
    def tag(self) -> str:
        return "Zero" if self.exponent is None else "Root"

    def __str__(self) -> str:
        return "Zero" if self.exponent is None else f"Root({self.exponent})"


ZERO = CharValue(None)


def validate_params(ell: int, f: int) -> None:
    if ell < 3 or ell % 2 == 0 or ell > MAX_ELL or not is_prime_u64(ell):
        raise NotOddPrime(f"ell={ell} must be an odd prime <= {MAX_ELL}")
    if not is_prime_u64(f):
        raise NotPrime(f"f={f} is not prime")
    if f % ell != 1:
        raise BadCongruence(f"f={f} is not 1 mod {ell}")


@dataclass(frozen=True)
class OrderEllCharacter:
    params: FieldParams
    generator: int
    cofactor_exponent: int
    subgroup_table: tuple[int, ...]
    _index: dict = field(repr=False, compare=False, hash=False)

    @property
    def ell(self) -> int:
        return self.params.ell

    @property
    def f(self) -> int:
        return self.params.f

    def exponent(self, n: int) -> Optional[int]:
        """Exponent of chi(n), or None when f | n."""
        f = self.params.f
        n %= f
        if n == 0:
            return None
        return self._index[pow(n, self.cofactor_exponent, f)]

    def __call__(self, n: int) -> CharValue:
        return eval_char(self, n)


def build_character(ell: int, f: int) -> OrderEllCharacter:
    params = FieldParams(ell, f)
    g = primitive_root(f)
    e = (f - 1) // ell
    h = pow(g, e, f)
    table = [1]
    for _ in range(ell - 1):
        table.append(table[-1] * h % f)
    index = {v: j for j, v in enumerate(table)}
    if len(index) != ell or table[-1] * h % f != 1:
        raise AssertionError(f"subgroup table for (ell={ell}, f={f}) is degenerate")
    return OrderEllCharacter(params, g, e, tuple(table), index)


def eval_char(chi: OrderEllCharacter, n: int) -> CharValue:
    j = chi.exponent(n)
    return ZERO if j is None else CharValue(j)


def is_residue(chi: OrderEllCharacter, n: int) -> bool:
    """True iff n is an ell-th power residue mod f."""
    j = chi.exponent(n)
    if j is None:
        raise ArgumentNotCoprime(f"gcd({n}, {chi.f}) > 1")
    return j == 0
