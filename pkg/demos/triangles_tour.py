"""
Building the Jacobi-Stirling triangles
======================================

Both triangles are lower-triangular arrays whose entries are polynomials in
a parameter ``z``. Everything is exact: coefficients are Python integers.
"""

from jacobi_stirling import build_js_first, build_js_second, coeffs, legendre_stirling
from jacobi_stirling.triangles import build_central_even, build_stirling


def print_section(title):
    print("\n" + title + "\n" + "-" * len(title))


print_section("second kind, first rows")
JS = build_js_second(6)
for n in range(1, 7):
    print("  ".join(f"[{JS[n, k]}]" for k in range(1, n + 1)))

# A single entry is an IntPoly; calling it evaluates at z
p = JS[4, 2]
print(p, "at z=1:", p(1), "at z=-1:", p(-1))

print_section("first kind")
js = build_js_first(5)
for n in range(1, 6):
    print("  ".join(f"[{js[n, k]}]" for k in range(1, n + 1)))

# Setting z = 1 recovers the Legendre-Stirling numbers
print("LS(4,2) =", legendre_stirling(JS, 4, 2))

print_section("coefficient views")
# ``a`` reads JS in powers of z; ``d`` reads it in powers of (z+1)
print("a(5,3) =", coeffs(JS, "a", 5, 3).values)
print("d(5,3) =", coeffs(JS, "d", 5, 3).values)
print("b(4,2) =", coeffs(js, "b", 4, 2).values)

# The top and bottom coefficients are classical numbers
S, U = build_stirling("S", 6), build_central_even("U", 6)
a = coeffs(JS, "a", 6, 3).values
print("top coefficient", a[-1], "= S(6,3) =", S[6, 3])
print("constant term  ", a[0], "= U(6,3) =", U[6, 3])
