"""Exact integer and rational arithmetic helpers.

Rationals are :class:`fractions.Fraction`, which already keeps values in
lowest terms with a positive denominator, so ``Rational`` is just an alias.
On top of it this module provides p-adic valuations, modular inverses, a
Chinese remainder solver and reduction of p-integral rationals mod p^k.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, isqrt
from typing import Iterable, Union

from .errors import InvalidArgument, NoInverse, NotPIntegral

Rational = Fraction
RationalLike = Union[int, Fraction]

__all__ = [
    "INFINITY",
    "Congruence",
    "Rational",
    "as_rational",
    "crt",
    "format_rational",
    "is_prime",
    "mod_inverse",
    "parse_rational",
    "prime_power_base",
    "rational_residue",
    "vp",
]


class _Infinity:
    """The valuation of zero.  Compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("dedekind_padic.INFINITY")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("INFINITY - INFINITY is undefined")
        return self

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@lru_cache(maxsize=1024)
def is_prime(p: int) -> bool:
    """Deterministic trial division; intended for small p only."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def _require_prime(p):
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidArgument(f"{p!r} is not a prime")


def prime_power_base(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``, ``e >= 1``.

    >>> prime_power_base(27)
    (3, 3)
    """
    if not isinstance(q, int) or q < 2:
        raise InvalidArgument(f"{q!r} is not a prime power > 1")
    p = next((d for d in range(2, isqrt(q) + 1) if q % d == 0), q)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise InvalidArgument(f"{q} is not a prime power")
    return p, e


def _vp_int(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def vp(x: RationalLike, p: int):
    """p-adic valuation of a rational; ``INFINITY`` for zero.

    >>> vp(Fraction(8, 3), 2)
    3
    >>> vp(0, 7)
    INFINITY
    """
    _require_prime(p)
    x = as_rational(x)
    if x == 0:
        return INFINITY
    return _vp_int(x.numerator, p) - _vp_int(x.denominator, p)


def mod_inverse(a: int, m: int) -> int:
    """Return b in [0, m) with a*b = 1 mod m."""
    if m < 2:
        raise InvalidArgument(f"modulus must be >= 2, got {m}")
    if gcd(a, m) != 1:
        raise NoInverse(f"{a} is not invertible mod {m}")
    return pow(a, -1, m)


@dataclass(frozen=True)
class Congruence:
    """The residue class ``residue mod modulus``, stored reduced."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidArgument(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def __contains__(self, x: int) -> bool:
        return (x - self.residue) % self.modulus == 0

    def least_positive(self) -> int:
        """Smallest x >= 1 in the class (a zero residue is bumped one period)."""
        return self.residue or self.modulus

    def __str__(self):
        return f"x = {self.residue} mod {self.modulus}"


def _combine(c1: Congruence, c2: Congruence) -> Congruence:
    m1, m2 = c1.modulus, c2.modulus
    if gcd(m1, m2) != 1:
        raise InvalidArgument(f"moduli {m1} and {m2} are not coprime")
    if m2 == 1:
        return c1
    if m1 == 1:
        return c2
    # x = r1 + m1*t with m1*t = r2 - r1 mod m2
    t = (c2.residue - c1.residue) * pow(m1, -1, m2) % m2
    return Congruence(c1.residue + m1 * t, m1 * m2)


def crt(congruences: Iterable[Congruence]) -> Congruence:
    """Solve a system of congruences with pairwise coprime moduli.

    >>> crt([Congruence(1, 4), Congruence(2, 3)])
    Congruence(residue=5, modulus=12)
    """
    return reduce(_combine, congruences, Congruence(0, 1))


def rational_residue(x: RationalLike, p: int, k: int) -> int:
    """Image of a p-integral rational in Z/p^k."""
    if k < 1:
        raise InvalidArgument(f"precision must be >= 1, got {k}")
    x = as_rational(x)
    if vp(x, p) < 0:
        raise NotPIntegral(f"{x} is not {p}-integral")
    pk = p**k
    return x.numerator * pow(x.denominator, -1, pk) % pk


_RATIONAL_RE = re.compile(r"\s*([+-]?)(\d+)(?:/(\d+))?\s*")


def parse_rational(text: str) -> Fraction:
    """Parse ``[-]num[/den]``.  Decimal points and exponents are rejected."""
    match = _RATIONAL_RE.fullmatch(text)
    if match is None:
        raise InvalidArgument(f"cannot parse rational {text!r}")
    sign, num, den = match.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise InvalidArgument(f"zero denominator in {text!r}")
    value = Fraction(int(num), den)
    return -value if sign == "-" else value


def format_rational(x: RationalLike) -> str:
    """``num/den`` in lowest terms, or just ``num`` for integers."""
    return str(as_rational(x))
