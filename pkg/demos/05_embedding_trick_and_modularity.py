"""Special-divisor relations, the embedding trick, and the modularity pairing.

An integral input with coefficients c produces the formal Picard relation
sum c(-m, mu) Z(m, mu) - c(0,0) omega.  The embedding trick re-derives the
same relation a second way: divide by 24*Delta, write the relation on the
two rank-24 extensions, pull both back through the representation-number
convolution, and subtract.  The exact agreement of the two routes is the
headline identity; the modularity pairing is the payoff.
"""

from borcherds_kit import (
    DivisorExpr,
    EmbeddingData,
    borcherds_relation,
    divide_by_24delta,
    eisenstein,
    embedding_trick,
    fourier_splitting_holds,
    modularity_pairing,
    relation_ideal,
)
from borcherds_kit.io import load_form, load_lattice

form, lat = load_form("one-over-delta-x24")
print(f"input on {lat.name}: c(-1) = {form.coefficient(-1, ())}, "
      f"c(0,0) = {form.coefficient(0, ())}")
rel = borcherds_relation(form)
print(f"direct relation:       {rel}")

n1 = load_lattice("niemeier-a1")
n2 = load_lattice("niemeier-a2")
embedding = EmbeddingData(n1, n2, precision=8)
g = divide_by_24delta(form)
print(f"form / (24 Delta) has poles at "
      f"{sorted(-m for (m, _) in g.principal_part())} with integer coefficients")

trick = embedding_trick(form, embedding)
print(f"embedding-trick route: {trick}")
print(f"routes agree exactly: {trick == rel}")

print()
print(f"coefficient splitting c = theta2*g - theta1*g through q^6: "
      f"{fourier_splitting_holds(form, embedding, 6)}")

print()
print("== the modularity pairing ==")
f2, lat2 = load_form("e4sq-over-delta")
print(f"on {lat2.name} (signature (10, 2)): c(-1) = {f2.coefficient(-1, ())}, "
      f"c(0,0) = {f2.coefficient(0, ())}")
e6 = eisenstein(6, 1)
values = {(0, ()): e6.coefficient(0), (1, ()): e6.coefficient(1)}
print(f"pairing against the weight-6 Eisenstein coefficients "
      f"[1, -504]: {modularity_pairing(f2, values)}")

print()
print("divisor-valued pairing reduces to zero modulo the relation ideal:")
sym_values = {(0, ()): DivisorExpr.z(0, ()), (1, ()): DivisorExpr.z(1, ())}
paired = modularity_pairing(f2, sym_values)
print(f"  paired symbol combination: {paired}")
basis, contains = relation_ideal([f2])
print(f"  relation basis: {[str(b) for b in basis]}")
print(f"  membership: {contains(paired)}")
