"""
Permutation pairs for the first kind
====================================

Up to sign, the coefficients of js(n,k) count pairs of permutations with
matching cyclic minima, graded by the records of the orbit of 0.
"""

from jacobi_stirling import build_js_first, coeffs
from jacobi_stirling.models import cycles, enum_first_kind_pairs, enum_u_pairs, records

# Records of a word are its left-to-right minima
word = [5, 7, 4, 8, 6, 2, 3, 1, 9]
print("records of", "".join(map(str, word)), "->", records(word))

n, k = 3, 2
for i in range(n - k + 1):
    pairs = enum_first_kind_pairs(n, k, i)
    print(f"\ni={i}: {len(pairs)} pairs")
    for pair in pairs:
        print("  sigma", cycles(pair.sigma, 0), " tau", cycles(pair.tau, 1),
              " zero word", pair.zero_word())

print("\nb(3,2) =", coeffs(build_js_first(3), "b", n, k).values)

# Without the zero point the same count gives the central factorial numbers
print("pairs with equal cyclic minima, (4,2):", enum_u_pairs(4, 2))
