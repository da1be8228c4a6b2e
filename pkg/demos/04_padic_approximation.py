"""
Approximating p-adic targets by Dedekind sums
=============================================

Ask for a Dedekind sum within p^-k of a rational target a.  For p >= 5 every
p-adic integer is reachable, for p = 2, 3 only multiples of p, and targets
with p in the denominator are reachable for every p.  2-adic and 3-adic
units are refused.
"""

from fractions import Fraction

from dedekind_padic import NotApproximable, Target, approximate, verify_witness

# Increasing precision for one target: the pairs grow, the valuation follows.
for k in range(1, 7):
    w = approximate(Target(7, Fraction(-5, 9), k))
    print(k, w.route, w.m, w.n, w.s, "achieved", w.achieved)

for p, a in [(2, Fraction(2)), (2, Fraction(12)), (2, Fraction(-16, 3)), (3, Fraction(6, 5)),
             (5, Fraction(1, 5)), (2, Fraction(7, 8))]:
    w = approximate(Target(p, a, 5))
    print(f"p={p} a={a}: {w.route} m={w.m} n={w.n} S={w.s} v={w.achieved} ok={verify_witness(w)}")

try:
    approximate(Target(3, Fraction(1), 4))
except NotApproximable as exc:
    print("refused:", exc)

print(approximate(Target(13, Fraction(2, 13**20), 8)).as_dict())
