"""Exhaustive evidence that Dedekind sums stay away from 2-adic and 3-adic units.

Some 2-adic unit u has v_2(S - u) >= 2 exactly when S is 2-integral and
S = 1 or 3 mod 4; likewise some 3-adic unit is within 3^-1 of S exactly
when S is 3-integral and S != 0 mod 3.  Both are decidable from S alone, so
the scan checks one residue per pair and prime instead of quantifying over
units.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import INFINITY, _vp_int
from .dedekind import DedekindPair, as_pair, coprime_pairs, dedekind_fast
from .errors import InvalidArgument, TheoremViolation

__all__ = ["PrimeVerdict", "ResidueVerdict", "ScanReport", "residue_class_check", "scan"]

# residues allowed for a p-integral Dedekind sum, and unit representatives
_ALLOWED = {2: (4, {0, 2}), 3: (3, {0})}
_UNIT_REPS = {2: (1, 3), 3: (1, 2)}


@dataclass(frozen=True)
class PrimeVerdict:
    p: int
    valuation: object
    residue: int | None  # None when S is not p-integral (vacuously safe)
    safe: bool
    distance_to_unit: int  # max over unit representatives u of v_p(S - u)

    @property
    def category(self) -> str:
        if self.residue is None:
            return f"p{self.p}-vacuous"
        return f"p{self.p}-integral" if self.safe else f"p{self.p}-violation"


@dataclass(frozen=True)
class ResidueVerdict:
    pair: DedekindPair
    s: Fraction
    two: PrimeVerdict
    three: PrimeVerdict

    @property
    def safe(self) -> bool:
        return self.two.safe and self.three.safe


def _valuation(x: int, p: int):
    return INFINITY if x == 0 else _vp_int(x, p)


def _verdict(s: Fraction, p: int) -> PrimeVerdict:
    # integer-only: v_p(s - u) = v_p(num - u*den) - v_p(den)
    modulus, allowed = _ALLOWED[p]
    num, den = s.numerator, s.denominator
    v_den = _vp_int(den, p)
    v = _valuation(num, p) - v_den
    distance = max(_valuation(num - u * den, p) for u in _UNIT_REPS[p]) - v_den
    if v < 0:
        return PrimeVerdict(p, v, None, True, distance)
    residue = num * pow(den, -1, modulus) % modulus
    return PrimeVerdict(p, v, residue, residue in allowed, distance)


def residue_class_check(pair) -> ResidueVerdict:
    pair = as_pair(pair)
    s = dedekind_fast(pair)
    return ResidueVerdict(pair, s, _verdict(s, 2), _verdict(s, 3))


@dataclass
class ScanReport:
    nmax: int
    pairs: int = 0
    violations: int = 0
    max_v2_to_unit: int | None = None
    max_v3_to_unit: int | None = None
    counts: Counter = field(default_factory=Counter)

    def add(self, verdict: ResidueVerdict):
        self.pairs += 1
        self.violations += not verdict.safe
        self.counts[verdict.two.category] += 1
        self.counts[verdict.three.category] += 1
        d2, d3 = verdict.two.distance_to_unit, verdict.three.distance_to_unit
        self.max_v2_to_unit = d2 if self.max_v2_to_unit is None else max(self.max_v2_to_unit, d2)
        self.max_v3_to_unit = d3 if self.max_v3_to_unit is None else max(self.max_v3_to_unit, d3)

    def merge(self, other: "ScanReport") -> "ScanReport":
        merged = ScanReport(max(self.nmax, other.nmax))
        merged.pairs = self.pairs + other.pairs
        merged.violations = self.violations + other.violations
        merged.counts = self.counts + other.counts
        maxima = [(self.max_v2_to_unit, other.max_v2_to_unit), (self.max_v3_to_unit, other.max_v3_to_unit)]
        merged.max_v2_to_unit, merged.max_v3_to_unit = (
            max((x for x in pair if x is not None), default=None) for pair in maxima
        )
        return merged

    def as_dict(self) -> dict:
        return {
            "nmax": self.nmax,
            "pairs": self.pairs,
            "violations": self.violations,
            "max_v2_to_unit": self.max_v2_to_unit,
            "max_v3_to_unit": self.max_v3_to_unit,
            "counts": dict(sorted(self.counts.items())),
        }


def scan(nmax: int, nmin: int = 2) -> ScanReport:
    """Check every coprime pair with nmin <= n <= nmax.

    Raises TheoremViolation on the first pair whose sum sits in a unit class.
    """
    if nmax < 2:
        raise InvalidArgument(f"nmax must be >= 2, got {nmax}")
    report = ScanReport(nmax)
    for pair in coprime_pairs(nmax, nmin):
        verdict = residue_class_check(pair)
        if not verdict.safe:
            raise TheoremViolation(f"S{tuple(pair)} = {verdict.s} lies in a unit class", pair)
        report.add(verdict)
    return report
