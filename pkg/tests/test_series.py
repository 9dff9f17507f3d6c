from fractions import Fraction
from math import factorial

import pytest

from jacobi_stirling import series as G
from jacobi_stirling.exactmath import IntPoly, rising
from jacobi_stirling.triangles import build_js_second
from reference_tables import ABS_v_TABLE, JS_TABLE, V_TABLE


def test_sinh_sinh_extractions():
    s = G.sinh_t_sinh(5, 7)
    assert s.coeff(1, 1) == 1
    assert s.coeff(3, 5) * factorial(5) == 10
    assert s.coeff(5, 7) * factorial(7) == 35


def test_sinh_arcsin_extractions():
    s = G.sinh_t_arcsin(3, 5)
    assert s.coeff(1, 1) == 1
    assert s.coeff(3, 5) * factorial(5) == 10
    assert s.coeff(1, 5) * factorial(5) == 9


def test_parity_of_both_expansions():
    for s in (G.sinh_t_sinh(6, 9), G.sinh_t_arcsin(6, 9)):
        for j in range(7):
            for m in range(10):
                if j % 2 == 0 or m % 2 == 0:
                    assert s.coeff(j, m) == 0


def test_egf_windows_match_table():
    s, a = G.sinh_t_sinh(11, 11), G.sinh_t_arcsin(11, 11)
    for n in range(6):
        for k in range(n + 1):
            assert s.coeff(2 * k + 1, 2 * n + 1) * factorial(2 * n + 1) == V_TABLE[n][k]
            assert a.coeff(2 * k + 1, 2 * n + 1) * factorial(2 * n + 1) == ABS_v_TABLE[n][k]


def test_exp_arcsin_splits_by_parity():
    full, odd = G.exp_t_arcsin(5, 7), G.sinh_t_arcsin(5, 7)
    for m in range(1, 8, 2):
        for j in range(6):
            assert full.coeff(j, m) == (odd.coeff(j, m) if j % 2 else 0)
    # even x-powers carry the even t-powers: cosh(t arcsin x) starts 1 + t^2 x^2 / 2
    assert full.coeff(0, 0) == 1 and full.coeff(2, 2) == Fraction(1, 2)


def test_egf_reports():
    for report in (G.check_V_egf(6), G.check_v_egf(6), G.check_V_egf(4, kmax=2)):
        assert report.ok, report.failures[:3]
        assert report.checked > 0


def test_egf_size_limit():
    with pytest.raises(ValueError):
        G.check_V_egf(9)
    with pytest.raises(ValueError):
        G.check_v_egf(9)


def test_odd_product_examples():
    assert G.odd_product(0) == IntPoly([0, 1])
    assert G.odd_product(2) == IntPoly([0, 9, 0, 10, 0, 1])
    assert G.odd_product(4).coeffs[1::2] == (11025, 12916, 1974, 84, 1)


def test_eqstanley_report():
    report = G.check_eqstanley(10)
    assert report.ok and report.checked == 11


def test_ogf_columns():
    col1 = G.ogf_column(1, 8)
    assert col1[0].is_zero()
    for n in range(1, 9):
        assert col1[n] == IntPoly([1, 1]) ** (n - 1)
    assert G.ogf_column(2, 4)[4] == IntPoly([21, 24, 7])
    for k in range(6):
        assert G.ogf_column(k, 8)[k] == IntPoly([1])
    assert all(c.is_zero() for c in G.ogf_column(5, 4))


def test_ogf_matches_table():
    for (n, k), c in JS_TABLE.items():
        assert G.ogf_column(k, 6)[n] == IntPoly(c)


def test_ogf_report():
    assert G.check_ordinary_gf(8, 16).ok


def test_newton_base_small_cases():
    JS = build_js_second(2)
    # n = 1, m = 1: 1 * (1 + z) = JS(1,1) * 1 * (z + 1)
    assert IntPoly([1, 1]) == JS[1, 1] * rising(1, 1) * rising(IntPoly([1, 1]), 1)
    # n = 2, m = 2: expand (2(2+z))^2 by hand
    lhs = IntPoly([16, 16, 4])
    rhs = sum((JS[2, j] * rising(3 - j, j) * rising(IntPoly([2, 1]), j) for j in range(3)), IntPoly())
    assert lhs == rhs


def test_newton_base_against_sympy():
    sp = pytest.importorskip("sympy")
    z = sp.symbols("z")
    JS = build_js_second(5)
    for n in range(6):
        for m in range(5):
            rhs = sum(sp.Poly(list(reversed(JS[n, j].coeffs)) or [0], z).as_expr()
                      * sp.rf(m - j + 1, j) * sp.rf(z + m, j) for j in range(n + 1))
            assert sp.expand((m * (m + z)) ** n - rhs) == 0


def test_newton_base_report():
    report = G.check_newton_base(6, 6)
    assert report.ok and report.checked == 49
