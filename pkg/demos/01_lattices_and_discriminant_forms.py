"""Lattices, discriminant forms, and maximality.

An even lattice is a symmetric integer Gram matrix G with even diagonal;
Q(x) = x^T G x / 2 and [x, y] = x^T G y.  The finite quadratic group
L^dual / L ("discriminant form") carries Q with values in Q/Z and controls
everything downstream: the Weil representation, coefficient supports, and
which overlattices exist.
"""

from fractions import Fraction

from borcherds_kit import (
    GramLattice,
    discriminant_form,
    is_maximal,
    overlattice_witness,
    representation_count,
    short_vectors,
    theta_series,
)

A1 = GramLattice([[2]], name="A1")
A2 = GramLattice([[2, -1], [-1, 2]], name="A2")
U = GramLattice([[0, 1], [1, 0]], name="U")

print("== quadratic values ==")
print(f"A1: Q(1) = {A1.q((1,))}")
print(f"A2: Q(1, 1) = {A2.q((1, 1))}, [e1, e2] = {A2.bilinear((1, 0), (0, 1))}")
print(f"U:  Q(e1) = {U.q((1, 0))}  (isotropic)")

print()
print("== discriminant forms ==")
for lat in (U, A1, A2):
    d = discriminant_form(lat)
    print(f"{lat.name}: {d}, |D| = {d.order} = |det| = {abs(lat.det)}")
da2 = discriminant_form(A2)
print(f"A2 generator has Q = {da2.q((1,))} (mod 1), pairing with itself "
      f"{da2.pairing((1,), (1,))}")

print()
print("== maximality: anisotropy of the discriminant form ==")
g8 = GramLattice([[8]], name="[[8]]")
print(f"U maximal? {is_maximal(U)};  A1 maximal? {is_maximal(A1)};  "
      f"[[8]] maximal? {is_maximal(g8)}")
coset, over = overlattice_witness(g8)
print(f"[[8]] has the isotropic coset {coset}; gluing it in gives the even "
      f"overlattice with Gram {over.gram} of determinant {over.det}")

print()
print("== short vectors and theta series ==")
E8 = GramLattice([
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, -1],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, 0, 0, -1, 0, 0, 2],
], name="E8")
print(f"E8 vectors with Q = 1: {representation_count(E8, 1)} (the 240 roots)")
print(f"theta(E8) through q^3: {theta_series(E8, 3)}")
sv = short_vectors(A2, Fraction(1, 3), da2.rep((1,)))
print(f"A2, coset of the dual generator, Q = 1/3: {len(sv)} vectors: {sv}")
