"""The Weil representation with exact cyclotomic scalars.

The standard generators act on the group algebra of a discriminant form by
a diagonal matrix of roots of unity and a Gauss-sum-normalized "Fourier
transform".  Nothing is floating point: sqrt(|D|) is itself a cyclotomic
number (a quadratic Gauss sum), so the braid relation and the Milgram
formula are decidable identities, checked here exactly.
"""

from fractions import Fraction

from borcherds_kit import (
    GramLattice,
    braid_holds,
    build_weil_rep,
    conjugate_rep,
    direct_sum,
    discriminant_form,
    e,
    milgram_sum,
    sqrt_positive_int,
)
from borcherds_kit.weil import s_fourth_power_scalar

A1 = GramLattice([[2]], name="A1")
A2 = GramLattice([[2, -1], [-1, 2]], name="A2")

print("== exact square roots as Gauss sums ==")
for n in (2, 3, 6):
    s = sqrt_positive_int(n)
    print(f"sqrt({n}) = {s};  squared: {s * s}")

print()
print("== Milgram: sum of e(Q(mu)) = sqrt(|D|) e(sig/8) ==")
for lat, sig in ((A1, 1), (A2, 2), (direct_sum([A1, A2]), 3)):
    d = discriminant_form(lat)
    total = milgram_sum(d)
    print(f"|D| = {d.order}, sig = {sig}:  sum = {total}")
    assert total == sqrt_positive_int(d.order) * e(Fraction(sig, 8))
print("all equalities exact")

print()
print("== generator matrices for D(A1) ==")
rep = build_weil_rep(discriminant_form(A1), 1)
print("diagonal action:", [str(rep.rho_t[i][i]) for i in range(2)])
print("transform row 0:", [str(x) for x in rep.rho_s[0]])
print("transform row 1:", [str(x) for x in rep.rho_s[1]])
print(f"braid relation (ST)^3 = S^2: {braid_holds(rep)}")
print(f"S^4 = scalar: {s_fourth_power_scalar(rep)} (equals e(-sig/2) = "
      f"{e(Fraction(-1, 2))})")

conj = conjugate_rep(rep)
print(f"conjugate representation braid relation: {braid_holds(conj)}")
print(f"conjugating twice returns the original: "
      f"{conjugate_rep(conj).rho_t[1][1] == rep.rho_t[1][1]}")
