"""
Congruences of n*S(m, n), and why 2-adic and 3-adic units are out of reach
=========================================================================

n*S(m, n) is an integer whose class mod 4 and mod 3 depends only on n.
Consequently a Dedekind sum is never a 2-adic unit and, when it is
3-integral, it is divisible by 3.
"""

from collections import Counter

from dedekind_padic import eq216_check, lemma1_check, lemma1_predict, residue_class_check, scan

for pair in [(1, 4), (1, 6), (5, 7), (7, 12)]:
    report = lemma1_check(pair)
    print(pair, "nS =", report.nS, [str(c) for c in report.predicted], "holds:", report.holds)

# Which constraint fires, tallied over n.
print(Counter(tuple(c.label for c in lemma1_predict((1, n))) for n in range(1, 121)))

# q*S(r, q) = r + r^-1 mod q for prime powers q.
print("q = 27:", all(eq216_check(r, 27) for r in range(1, 27) if r % 3))

# Per-pair residue verdicts.
verdict = residue_class_check((5, 7))
print(verdict.s, verdict.two, verdict.three, sep="\n  ")

# An exhaustive scan; the largest p-adic closeness to any unit stays at 0.
print(scan(300).as_dict())
