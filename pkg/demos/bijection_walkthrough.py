"""
From a signed partition to a pair of quasi-permutations
=======================================================

A signed partition is sent to a triple of ordinary set partitions, and the
triple to two simply hooked quasi-permutations sharing their lower part.
"""

from jacobi_stirling.bijections import phi, signed_to_triple, triple_to_quasipair, triple_to_signed
from jacobi_stirling.models import SignedPartition

p = SignedPartition.make(10, [-4, 6, 7, -8, -10],
                         [[1, -1, 3, 4, -5, -7], [2, -2, -3, 5, -6, 8], [9, -9, 10]])
print("signed partition:", p)
print("k =", p.k, " i =", p.i)

t = signed_to_triple(p)
for name, part in zip(("p1", "p2", "p3"), (t.p1, t.p2, t.p3)):
    print(f"{name}:", part)

# Going back recovers the original exactly
assert triple_to_signed(t) == p

# Each partition becomes a set of cells by chaining its blocks downward
print("\nphi(p3) cells:", sorted(phi(t.p3, 10).cells))

q1, q2 = triple_to_quasipair(t)
print("Q1:", sorted(q1.cells))
print("Q2:", sorted(q2.cells))
print("shared lower part:", sorted(q1.minus))
print("both simply hooked:", q1.is_simply_hooked() and q2.is_simply_hooked())
