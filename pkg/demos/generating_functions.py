"""
Generating functions for the odd central factorial numbers
==========================================================

Truncated bivariate series with rational coefficients let us read V(n,k)
and |v(n,k)| straight off sinh(t sinh x) and sinh(t arcsin x).
"""

from math import factorial

from jacobi_stirling.series import ogf_column, odd_product, sinh_t_arcsin, sinh_t_sinh
from jacobi_stirling.triangles import build_central_odd

nmax = 4
order = 2 * nmax + 1
V_series, v_series = sinh_t_sinh(order, order), sinh_t_arcsin(order, order)
V, v = build_central_odd("V", nmax), build_central_odd("v", nmax)

# coefficient of t^(2k+1) x^(2n+1), times (2n+1)!
for n in range(nmax + 1):
    row_V = [V_series.coeff(2 * k + 1, 2 * n + 1) * factorial(2 * n + 1) for k in range(n + 1)]
    row_v = [v_series.coeff(2 * k + 1, 2 * n + 1) * factorial(2 * n + 1) for k in range(n + 1)]
    print(f"n={n}  V: {[int(c) for c in row_V]}  |v|: {[int(c) for c in row_v]}")
    assert row_V == list(V.rows[n]) and row_v == [abs(x) for x in v.rows[n]]

# The |v| rows are also the coefficients of an odd product
print("\nt(t^2+1)(t^2+9) =", odd_product(2))

# Ordinary generating function of a column of JS, with polynomial coefficients
print("\ncolumn k=2 of JS from x^2 / ((1-(z+1)x)(1-2(z+2)x)):")
for n, c in enumerate(ogf_column(2, 5)):
    print(f"  x^{n}: {c}")
