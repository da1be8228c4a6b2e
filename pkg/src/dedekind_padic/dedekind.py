"""Dedekind sums S(m, n) = 12 s(m, n).

Two evaluators are provided.  :func:`dedekind_naive` sums the definition
term by term and serves as the ground truth for small n.
:func:`dedekind_fast` applies the reciprocity law

    S(m, n) + S(n, m) = n/m + m/n + 1/(mn) - 3

along the Euclidean remainder sequence of (n, m).  Summed with alternating
signs the fractional parts telescope, which leaves an integer-only formula:
with partial quotients a_1..a_t, A = a_1 - a_2 + ... and m' = m^-1 mod n,

    n S(m, n) = m + m' + n (A - 3)     (t odd)
    n S(m, n) = m + m' - n + n A       (t even)

so the cost is one extended Euclid on (n, m) and nothing else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import RationalLike, as_rational
from .errors import InvalidArgument, InvariantViolation, OracleCapExceeded

__all__ = [
    "ORACLE_CAP",
    "coprime_pairs",
    "DedekindPair",
    "as_pair",
    "dedekind_fast",
    "dedekind_naive",
    "n_times_s",
    "sawtooth",
]

ORACLE_CAP = 10**5


@dataclass(frozen=True)
class DedekindPair:
    """A coprime pair (m, n) with n >= 1, normalised to 0 <= m < n."""

    m: int
    n: int

    def __post_init__(self):
        if not isinstance(self.m, int) or not isinstance(self.n, int):
            raise InvalidArgument("m and n must be integers")
        if self.n < 1:
            raise InvalidArgument(f"n must be >= 1, got {self.n}")
        if gcd(self.m, self.n) != 1:
            raise InvalidArgument("m and n must be coprime")
        object.__setattr__(self, "m", self.m % self.n)

    def __iter__(self):
        yield self.m
        yield self.n


def as_pair(pair) -> DedekindPair:
    if isinstance(pair, DedekindPair):
        return pair
    m, n = pair
    return DedekindPair(m, n)


def sawtooth(t: RationalLike) -> Fraction:
    """((t)): t - floor(t) - 1/2 off the integers, 0 on them."""
    t = as_rational(t)
    if t.denominator == 1:
        return Fraction(0)
    return t - (t.numerator // t.denominator) - Fraction(1, 2)


def dedekind_naive(pair) -> Fraction:
    """S(m, n) from the defining sum.  Only for n <= ORACLE_CAP.

    Each sawtooth value ((j/n)) is carried as the integer 2n((j/n)) =
    2(j mod n) - n, so the whole sum has the common denominator 4n^2.
    """
    m, n = as_pair(pair)
    if n > ORACLE_CAP:
        raise OracleCapExceeded(f"n = {n} exceeds the oracle cap {ORACLE_CAP}")
    total = 0
    for k in range(1, n):
        mk = m * k % n
        if mk:
            total += (2 * k - n) * (2 * mk - n)
    # 12 * total / (4 n^2)
    return Fraction(3 * total, n * n)


def _n_times_s(m: int, n: int) -> int:
    # requires 0 <= m < n, gcd(m, n) = 1
    if m == 0:
        return 0
    alternating = 0
    sign = 1
    steps = 0
    a, b = n, m
    while b:
        q, r = divmod(a, b)
        alternating += sign * q
        sign = -sign
        steps += 1
        a, b = b, r
    m_inv = pow(m, -1, n)
    if steps % 2:
        return m + m_inv + n * (alternating - 3)
    return m + m_inv - n + n * alternating


def dedekind_fast(pair) -> Fraction:
    """S(m, n) in O(log n) integer operations; any size of n.

    >>> dedekind_fast((5, 7))
    Fraction(-6, 7)
    """
    m, n = as_pair(pair)
    return Fraction(_n_times_s(m, n), n)


def n_times_s(pair) -> int:
    """The integer n * S(m, n)."""
    pair = as_pair(pair)
    value = pair.n * dedekind_fast(pair)
    if value.denominator != 1:
        raise InvariantViolation(f"n*S(m, n) = {value} is not integral for {pair}")
    return value.numerator


def coprime_pairs(nmax: int, nmin: int = 2):
    """Yield every coprime pair with nmin <= n <= nmax, 1 <= m < n, in (n, m) order."""
    for n in range(nmin, nmax + 1):
        for m in range(1, n):
            if gcd(m, n) == 1:
                yield DedekindPair(m, n)
