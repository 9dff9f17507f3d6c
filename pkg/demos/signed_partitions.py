"""
Signed partitions and the coefficient histogram
===============================================

The coefficient of z^i in JS(n,k) counts signed k-partitions of
{0, +-1, ..., +-n} whose zero block holds i negative numbers.
"""

from collections import Counter

from jacobi_stirling import build_js_second, coeffs
from jacobi_stirling.models import count_d_model, enum_signed_partitions

n, k = 3, 2
parts = enum_signed_partitions(n, k)
for p in parts:
    print(f"i={p.i}  {p}")

hist = Counter(p.i for p in parts)
print("histogram:", dict(sorted(hist.items())))
print("coefficients of JS(3,2):", coeffs(build_js_second(3), "a", n, k).values)

# Keeping only the partitions whose zero block has no positive entry gives
# the coefficients of JS(n,k) written in powers of (z+1).
print("\nzero block without positives:", count_d_model(4, 3))
print("coefficients in (z+1):      ", coeffs(build_js_second(4), "d", 4, 3).values)
