"""
The family n = q(m^2 + 1)
=========================

For a prime power q and m prime to q, S(m, q(m^2+1)) = (q^2-1) m / q + S(m, q).
Fixing r = m mod q, the values l = q*S run through every natural number in
two residue classes, and each such l points back to exactly one m.
"""

from dedekind_padic import FamilyParams, closed_form, family_value, lemma5_forward, lemma5_inverse
from dedekind_padic.families import family_values

for q in (2, 3, 5):
    print(q, [str(closed_form(q, m)) for m in range(1, 8) if m % q])

print(family_value(5, 11))

params = FamilyParams(5, 1)
print("r* =", params.rstar, " q*S(r, q) =", params.qs, " period =", params.period)
for value in family_values(params, 4):
    print(value.as_dict())

# Going backwards from l.
member = lemma5_inverse(params, 276)
print("l = 276 ->", (member.m, member.n), member.s)
print(lemma5_forward(params, member.m) == member)
