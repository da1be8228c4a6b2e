"""Congruence classes of n*S(m, n) and the identity q*S(r, q) = r + r* mod q.

n*S(m, n) is pinned mod 4 (or mod 2) by n mod 4, and mod 3 by whether
3 divides n:

    label  condition on n   constraint on n*S
    L1a    n odd            = 0 mod 2
    L1b    n = 2 mod 4      = 0 mod 4
    L1c    n = 0 mod 4      = 2 mod 4
    L1d    3 does not | n   = 0 mod 3
    L1e    3 | n            != 0 mod 3

Exactly one of L1a/L1b/L1c and exactly one of L1d/L1e applies to any n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import mod_inverse, prime_power_base
from .dedekind import DedekindPair, as_pair, coprime_pairs, dedekind_fast, n_times_s
from .errors import InvalidArgument

__all__ = [
    "Constraint",
    "CongruenceReport",
    "eq216_check",
    "lemma1_check",
    "lemma1_predict",
    "lemma1_scan",
]


@dataclass(frozen=True)
class Constraint:
    """``value = residue mod modulus``, or ``!=`` when ``negated``."""

    label: str
    modulus: int
    residue: int
    negated: bool = False

    def holds(self, value: int) -> bool:
        hit = value % self.modulus == self.residue
        return not hit if self.negated else hit

    def __str__(self):
        rel = "!=" if self.negated else "="
        return f"{self.label}: nS {rel} {self.residue} mod {self.modulus}"


def lemma1_predict(pair) -> tuple[Constraint, Constraint]:
    n = as_pair(pair).n
    if n % 2:
        two = Constraint("L1a", 2, 0)
    elif n % 4 == 2:
        two = Constraint("L1b", 4, 0)
    else:
        two = Constraint("L1c", 4, 2)
    if n % 3:
        three = Constraint("L1d", 3, 0)
    else:
        three = Constraint("L1e", 3, 0, negated=True)
    return two, three


@dataclass(frozen=True)
class CongruenceReport:
    pair: DedekindPair
    nS: int
    predicted: tuple[Constraint, ...]
    holds: bool

    def as_dict(self) -> dict:
        return {
            "m": str(self.pair.m),
            "n": str(self.pair.n),
            "nS": str(self.nS),
            "cases": [c.label for c in self.predicted],
            "holds": self.holds,
        }


def lemma1_check(pair) -> CongruenceReport:
    pair = as_pair(pair)
    ns = n_times_s(pair)
    predicted = lemma1_predict(pair)
    return CongruenceReport(pair, ns, predicted, all(c.holds(ns) for c in predicted))


def lemma1_scan(nmax: int):
    """Yield a report for every coprime pair with 2 <= n <= nmax."""
    for pair in coprime_pairs(nmax):
        yield lemma1_check(pair)


def eq216_check(r: int, q: int) -> bool:
    """Whether q*S(r, q) = r + r* mod q, where r*r* = 1 mod q."""
    p, _ = prime_power_base(q)
    if r % p == 0:
        raise InvalidArgument(f"r = {r} is not coprime to q = {q}")
    qs = q * dedekind_fast((r, q))
    if qs.denominator != 1:
        return False
    return (qs.numerator - r - mod_inverse(r, q)) % q == 0
