"""The rank-24 theta trick: two unimodular lattices whose thetas differ by 24*Delta.

Gluing 24 copies of A1 by the extended binary Golay code, or 12 copies of A2
by the extended ternary Golay code, produces even unimodular lattices of
rank 24 with 48 and 72 roots.  Weight-12 modular forms are determined by two
coefficients, so their theta difference must be a multiple of Delta; the
root counts make it exactly 24*Delta.  That identity is what lets a single
division by 24*Delta split any form's Picard relation across two bigger
lattices (see demo 05).
"""

import time

from borcherds_kit import delta_series, is_maximal, representation_count, theta_series
from borcherds_kit.io import load_lattice

n1 = load_lattice("niemeier-a1")
n2 = load_lattice("niemeier-a2")
print(f"{n1.name}: rank {n1.rank}, det {n1.det}, maximal: {is_maximal(n1)}, "
      f"glue code size {len(n1.glue.words)}")
print(f"{n2.name}: rank {n2.rank}, det {n2.det}, maximal: {is_maximal(n2)}, "
      f"glue code size {len(n2.glue.words)}")

print()
print("theta series via the glue-code decomposition (sum over code words of")
print("coordinate-wise coset theta products):")
t0 = time.monotonic()
th1 = theta_series(n1, 8)
th2 = theta_series(n2, 8)
print(f"  computed through q^8 in {time.monotonic() - t0:.1f}s")
for n in range(5):
    print(f"  q^{n}:  {str(th1.coefficient(n)):>12}  {str(th2.coefficient(n)):>12}")

print()
delta = delta_series(8)
diff_ok = all(th2.coefficient(n) - th1.coefficient(n) == 24 * delta.coefficient(n)
              for n in range(9))
print(f"theta2 - theta1 == 24*Delta through q^8: {diff_ok}")
print(f"  at q^1: {th2.coefficient(1)} - {th1.coefficient(1)} = "
      f"{th2.coefficient(1) - th1.coefficient(1)} = 24 * {delta.coefficient(1)}")
print(f"  at q^2: {th2.coefficient(2)} - {th1.coefficient(2)} = "
      f"{th2.coefficient(2) - th1.coefficient(2)} = 24 * {delta.coefficient(2)}")

print()
print("cross-check by direct short-vector enumeration (no glue decomposition):")
t0 = time.monotonic()
r1 = representation_count(n1, 1)
r2 = representation_count(n2, 1)
print(f"  roots: {r1} and {r2} (enumerated in {time.monotonic() - t0:.1f}s)")
assert r1 == th1.coefficient(1) and r2 == th2.coefficient(1)
print("  matches the glue-code coefficients exactly")
