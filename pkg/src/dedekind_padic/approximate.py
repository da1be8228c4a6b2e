"""Constructive p-adic approximation by Dedekind sums.

Given a prime p, a rational target a and a precision k >= 1, find a
coprime pair (m, n) with v_p(S(m, n) - a) >= k.  Which targets admit such a
pair depends only on p and v = v_p(a):

    p >= 5, v >= 0     T2-large-p     n = 2(m^2+1),  S = 3m/2,  m odd
    p = 3,  v >= 1     T2-p3          same family
    p = 2,  v = 1      T2-p2-v1       n = 3(m^2+1),  S = 2l/3
    p = 2,  v = 2      T2-p2-v2       n = 5(m^2+1),  S = 12l/5, m = 1 mod 5
    p = 2,  v >= 3     T2-p2-v3       n = 5(m^2+1),  S = 24m/5, m = 2 mod 5
    any p,  v = -e < 0 T3-fractional  n = q(m^2+1),  S = l/q,   q = p^e
    p in {2, 3}, v = 0                NotApproximable

Each route turns the valuation requirement into a congruence on m (or l)
modulo a power of p, the exponent shifted by the valuation of the factor
pulled out of S, and joins it with the side congruences that keep the pair
inside its family.  The least positive solution is taken, so equal targets
give equal witnesses.  Every witness is re-evaluated with the fast
evaluator before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import (
    INFINITY,
    Congruence,
    RationalLike,
    as_rational,
    crt,
    format_rational,
    is_prime,
    mod_inverse,
    rational_residue,
    vp,
)
from .dedekind import dedekind_fast
from .errors import InvalidTarget, InvariantViolation, NotApproximable
from .families import FamilyParams, lemma5_inverse

__all__ = [
    "ROUTES",
    "Target",
    "Witness",
    "approx_fractional",
    "approx_large_p",
    "approx_p2",
    "approx_p3",
    "approximate",
    "route_for",
    "verify_witness",
]

PRIME_LIMIT = 2**31

ROUTES = ("T2-large-p", "T2-p3", "T2-p2-v1", "T2-p2-v2", "T2-p2-v3", "T3-fractional")


@dataclass(frozen=True)
class Target:
    p: int
    a: Fraction
    k: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not 2 <= self.p < PRIME_LIMIT or not is_prime(self.p):
            raise InvalidTarget(f"p = {self.p!r} must be a prime below 2**31")
        if not isinstance(self.k, int) or self.k < 1:
            raise InvalidTarget(f"precision k = {self.k!r} must be an integer >= 1")
        try:
            object.__setattr__(self, "a", as_rational(self.a))
        except TypeError as exc:
            raise InvalidTarget(str(exc)) from None

    @property
    def valuation(self):
        return vp(self.a, self.p)


@dataclass(frozen=True)
class Witness:
    target: Target
    m: int
    n: int
    s: Fraction
    achieved: object  # int or INFINITY
    route: str

    def as_dict(self) -> dict:
        return {
            "p": self.target.p,
            "k": self.target.k,
            "target": format_rational(self.target.a),
            "route": self.route,
            "m": str(self.m),
            "n": str(self.n),
            "S": format_rational(self.s),
            "achieved": "inf" if self.achieved is INFINITY else self.achieved,
        }


def _residue_class(x: RationalLike, p: int, e: int) -> Congruence:
    # e <= 0 means no condition at all
    if e <= 0:
        return Congruence(0, 1)
    return Congruence(rational_residue(x, p, e), p**e)


def _certify(t: Target, m: int, n: int, expected: Fraction, route: str) -> Witness:
    if gcd(m, n) != 1 or not 0 <= m < n:
        raise InvariantViolation(f"{route}: constructed pair ({m}, {n}) is not admissible")
    s = dedekind_fast((m, n))
    if s != expected:
        raise InvariantViolation(f"{route}: S({m}, {n}) = {s}, family formula gave {expected}")
    achieved = vp(s - t.a, t.p)
    if achieved < t.k:
        raise InvariantViolation(f"{route}: v_{t.p}(S - a) = {achieved} < k = {t.k}")
    return Witness(t, m, n, s, achieved, route)


def _require(condition: bool, t: Target, route: str):
    if not condition:
        raise InvalidTarget(f"{route} does not apply to p = {t.p}, v_p(a) = {t.valuation}")


def _odd_half_family(t: Target, m_class: Congruence, route: str) -> Witness:
    m = crt([m_class, Congruence(1, 2)]).least_positive()
    return _certify(t, m, 2 * (m * m + 1), Fraction(3 * m, 2), route)


def approx_large_p(t: Target) -> Witness:
    """p >= 5: 3m/2 - a = (3/2)(m - 2a/3), so m = 2a/3 mod p^k."""
    _require(t.p >= 5 and t.valuation >= 0, t, "T2-large-p")
    return _odd_half_family(t, _residue_class(2 * t.a / 3, t.p, t.k), "T2-large-p")


def approx_p3(t: Target) -> Witness:
    """p = 3, a in 3Z_3: 3m/2 - a = 3(m/2 - a/3), so m = 2a/3 mod 3^(k-1)."""
    _require(t.p == 3 and t.valuation >= 1, t, "T2-p3")
    return _odd_half_family(t, _residue_class(2 * t.a / 3, 3, t.k - 1), "T2-p3")


def approx_p2(t: Target) -> Witness:
    _require(t.p == 2 and t.valuation >= 1, t, "T2-p2")
    v, k, a = t.valuation, t.k, t.a

    if v == 1:
        # 2l/3 - a = 2(l/3 - a/2): l = 3a/2 mod 2^(k-1), an odd class.
        # l = 1 mod 4 pairs with l = 2 mod 3 and m = (l-1)/4;
        # l = 3 mod 4 pairs with l = 1 mod 3 and m = (l+1)/4.
        if k >= 3:
            l_class = _residue_class(3 * a / 2, 2, k - 1)
        else:
            l_class = Congruence(1, 4)  # mod-4 class unconstrained; fixed tie-break
        if l_class.residue % 4 == 1:
            l = crt([l_class, Congruence(2, 3)]).least_positive()
            m = (l - 1) // 4
        else:
            l = crt([l_class, Congruence(1, 3)]).least_positive()
            m = (l + 1) // 4
        return _certify(t, m, 3 * (m * m + 1), Fraction(2 * l, 3), "T2-p2-v1")

    if v == 2:
        # 12l/5 - a = 4(3l/5 - a/4): l = 5a/12 mod 2^(k-2); l odd, l = 3 mod 5.
        l_class = _residue_class(5 * a / 12, 2, max(k - 2, 1))
        l = crt([l_class, Congruence(3, 5)]).least_positive()
        m = (l - 1) // 2
        return _certify(t, m, 5 * (m * m + 1), Fraction(12 * l, 5), "T2-p2-v2")

    # v >= 3 (a = 0 included): 24m/5 - a = 8(3m/5 - a/8), m = 5a/24 mod 2^(k-3).
    m_class = _residue_class(5 * a / 24, 2, k - 3)
    m = crt([m_class, Congruence(2, 5)]).least_positive()
    return _certify(t, m, 5 * (m * m + 1), Fraction(24 * m, 5), "T2-p2-v3")


def approx_fractional(t: Target) -> Witness:
    """a = j/q with q = p^e and j a p-adic unit: choose l = j mod p^(k+e)."""
    v = t.valuation
    _require(v < 0, t, "T3-fractional")
    p, e = t.p, -v
    q = p**e
    j = t.a * q
    l_class = _residue_class(j, p, t.k + e)
    rstar = l_class.residue % q
    params = FamilyParams(q, mod_inverse(rstar, q))
    if params.rstar != rstar:
        raise InvariantViolation(f"r* mismatch: {params.rstar} != {rstar}")
    l = crt([l_class, Congruence(params.qs, params.period)]).least_positive()
    member = lemma5_inverse(params, l)
    return _certify(t, member.m, member.n, member.s, "T3-fractional")


def route_for(t: Target) -> str:
    """Name of the route handling ``t``; raises NotApproximable for 2/3-adic units."""
    v, p = t.valuation, t.p
    if v < 0:
        return "T3-fractional"
    if p >= 5:
        return "T2-large-p"
    if v == 0:
        raise NotApproximable(p, t.a)
    if p == 3:
        return "T2-p3"
    if v == 1:
        return "T2-p2-v1"
    if v == 2:
        return "T2-p2-v2"
    return "T2-p2-v3"


_DISPATCH = {
    "T2-large-p": approx_large_p,
    "T2-p3": approx_p3,
    "T2-p2-v1": approx_p2,
    "T2-p2-v2": approx_p2,
    "T2-p2-v3": approx_p2,
    "T3-fractional": approx_fractional,
}


def approximate(t: Target) -> Witness:
    """Certified witness for ``t``.

    >>> w = approximate(Target(5, Fraction(1), 2))
    >>> (w.m, w.n, w.s)
    (9, 164, Fraction(27, 2))
    """
    return _DISPATCH[route_for(t)](t)


def verify_witness(w: Witness) -> bool:
    """Independently re-check a witness against its own target."""
    t = w.target
    if w.n < 1 or not 0 <= w.m < w.n or gcd(w.m, w.n) != 1:
        return False
    s = dedekind_fast((w.m, w.n))
    if s != w.s:
        return False
    return vp(s - t.a, t.p) >= t.k
