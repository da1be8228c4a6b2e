"""The witness family n = q(m^2 + 1).

For q a prime power and p (the prime under q) not dividing m, applying
reciprocity twice gives

    S(m, q(m^2 + 1)) = (q^2 - 1) m / q + S(m, q).

For a fixed residue r = m mod q this is l/q with l running through the
natural numbers satisfying

    l = r* mod q,    l = q S(r, q) mod (q^2 - 1),

and every such l is hit: m = (l - q S(r, q)) / (q^2 - 1) recovers the pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count, islice
from math import gcd

from .arith import mod_inverse, prime_power_base
from .dedekind import dedekind_fast
from .errors import InvalidArgument, InvariantViolation

__all__ = [
    "FamilyParams",
    "FamilyValue",
    "closed_form",
    "family_value",
    "family_values",
    "lemma5_forward",
    "lemma5_inverse",
]


def _family_n(q: int, m: int) -> int:
    return q * (m * m + 1)


def family_value(q: int, m: int) -> tuple[int, Fraction]:
    """``(n, S(m, n))`` for n = q(m^2+1), via the two-step reciprocity form."""
    p, _ = prime_power_base(q)
    if m < 1:
        raise InvalidArgument(f"m must be >= 1, got {m}")
    if m % p == 0:
        raise InvalidArgument(f"{p} divides m = {m}; (m, n) would not be coprime")
    s = Fraction((q * q - 1) * m, q) + dedekind_fast((m, q))
    return _family_n(q, m), s


def closed_form(q: int, m: int) -> Fraction:
    """Explicit S(m, q(m^2+1)) for q in {2, 3, 5}.

    >>> closed_form(3, 2)
    Fraction(14, 3)
    """
    if q not in (2, 3, 5):
        raise InvalidArgument(f"closed forms exist only for q = 2, 3, 5, not {q}")
    if m % q == 0:
        raise InvalidArgument(f"m = {m} must be coprime to q = {q}")
    if q == 2:
        return Fraction(3 * m, 2)
    c = m % q
    if q == 3:
        return Fraction(2 * (4 * m + 1), 3) if c == 1 else Fraction(2 * (4 * m - 1), 3)
    if c == 1:
        return Fraction(12 * (2 * m + 1), 5)
    if c == 4:
        return Fraction(12 * (2 * m - 1), 5)
    return Fraction(24 * m, 5)


@dataclass(frozen=True)
class FamilyParams:
    """Residue class ``m = r mod q`` selecting one sub-family.

    ``rstar`` and ``qs`` (the integer q*S(r, q)) are derived on construction.
    """

    q: int
    r: int
    p: int = field(init=False)
    rstar: int = field(init=False)
    qs: int = field(init=False)

    def __post_init__(self):
        p, _ = prime_power_base(self.q)
        if not 1 <= self.r <= self.q - 1 or self.r % p == 0:
            raise InvalidArgument(f"r = {self.r} must lie in 1..{self.q - 1} and be prime to {p}")
        qs = self.q * dedekind_fast((self.r, self.q))
        if qs.denominator != 1:
            raise InvariantViolation(f"q*S(r, q) = {qs} is not an integer")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "rstar", mod_inverse(self.r, self.q))
        object.__setattr__(self, "qs", qs.numerator)

    @property
    def period(self) -> int:
        return self.q * self.q - 1

    def admits(self, l: int) -> bool:
        """Whether l satisfies both congruences of the correspondence."""
        return (l - self.rstar) % self.q == 0 and (l - self.qs) % self.period == 0


@dataclass(frozen=True)
class FamilyValue:
    """One member (m, n, l) with S(m, n) = l/q; checked on construction."""

    params: FamilyParams
    m: int
    n: int
    l: int
    s: Fraction

    def __post_init__(self):
        q = self.params.q
        problems = []
        if self.m < 1 or self.l < 1:
            problems.append("m and l must be positive")
        if self.n != _family_n(q, self.m):
            problems.append("n != q(m^2+1)")
        if gcd(self.m, self.n) != 1:
            problems.append("gcd(m, n) != 1")
        if self.s != Fraction(self.l, q):
            problems.append("s != l/q")
        if self.s != dedekind_fast((self.m, self.n)):
            problems.append("s != S(m, n)")
        if not self.params.admits(self.l):
            problems.append("l violates the residue conditions")
        if problems:
            raise InvariantViolation(f"bad family value {self!r}: " + "; ".join(problems))

    def as_dict(self) -> dict:
        return {
            "q": self.params.q,
            "r": self.params.r,
            "m": str(self.m),
            "n": str(self.n),
            "l": str(self.l),
            "S": str(self.s),
        }


def lemma5_forward(params: FamilyParams, m: int) -> FamilyValue:
    """Member with the given m; l is read off the evaluator, then cross-checked."""
    if m < 1 or (m - params.r) % params.q:
        raise InvalidArgument(f"m = {m} is not a positive integer = {params.r} mod {params.q}")
    n = _family_n(params.q, m)
    s = dedekind_fast((m, n))
    ql = params.q * s
    if ql.denominator != 1 or ql.numerator != params.period * m + params.qs:
        raise InvariantViolation(f"q*S({m}, {n}) = {ql} disagrees with (q^2-1)m + qS(r, q)")
    return FamilyValue(params, m, n, ql.numerator, s)


def lemma5_inverse(params: FamilyParams, l: int) -> FamilyValue:
    """Member with S(m, n) = l/q."""
    if l < 1 or not params.admits(l):
        raise InvalidArgument(
            f"l = {l} must be positive, = {params.rstar} mod {params.q} "
            f"and = {params.qs} mod {params.period}"
        )
    m = (l - params.qs) // params.period
    if m < 1:
        raise InvariantViolation(f"l = {l} produced non-positive m = {m}")
    return FamilyValue(params, m, _family_n(params.q, m), l, Fraction(l, params.q))


def family_values(params: FamilyParams, limit: int | None = None):
    """Members for m = r, r + q, r + 2q, ... (``limit`` of them, or forever)."""
    members = (lemma5_forward(params, params.r + i * params.q) for i in count())
    return members if limit is None else islice(members, limit)
