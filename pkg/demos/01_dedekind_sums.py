"""
Evaluating Dedekind sums
========================

S(m, n) = 12 s(m, n) is a rational number with denominator dividing n.
Two evaluators are available: the defining sum (linear in n, capped at
n = 10**5) and a reciprocity-based one whose cost grows with the number of
digits of n.
"""

import random
import time
from fractions import Fraction

from dedekind_padic import dedekind_fast, dedekind_naive, n_times_s, sawtooth

# The sawtooth ((t)) vanishes on integers and is t - floor(t) - 1/2 elsewhere.
print([str(sawtooth(Fraction(k, 4))) for k in range(5)])

# A few small values, computed both ways.
for pair in [(1, 3), (1, 4), (2, 5), (5, 7), (1, 10)]:
    print(pair, dedekind_naive(pair), dedekind_fast(pair), "n*S =", n_times_s(pair))

# Reciprocity: S(m, n) + S(n, m) = n/m + m/n + 1/(mn) - 3.
m, n = 17, 60
lhs = dedekind_fast((m, n)) + dedekind_fast((n, m))
rhs = Fraction(n, m) + Fraction(m, n) + Fraction(1, m * n) - 3
print("reciprocity holds:", lhs == rhs)

# The fast evaluator does not care how large n is.
rng = random.Random(0)
n = rng.randrange(10**999, 10**1000) | 1
m = 2
start = time.perf_counter()
s = dedekind_fast((m, n))
print(f"S(2, n) for a 1000-digit n: denominator has {len(str(s.denominator))} digits, "
      f"{(time.perf_counter() - start) * 1000:.2f} ms")
