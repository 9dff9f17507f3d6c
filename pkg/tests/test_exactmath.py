from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobi_stirling.exactmath import (
    BiSeries,
    IntPoly,
    arcsin_coeffs,
    interpolate,
    poly_eval,
    poly_mul,
    rebase_shift,
    series_compose,
    sinh_coeffs,
)

polys = st.lists(st.integers(-1000, 1000), max_size=9).map(IntPoly)


def test_binomial_square():
    assert poly_mul(IntPoly([1, 1]), IntPoly([1, 1])) == IntPoly([1, 2, 1])


def test_zero_absorbs():
    zero = IntPoly()
    assert poly_mul(IntPoly([3, -1, 4]), zero) == zero
    assert zero.degree is None
    assert zero.coeffs == ()


def test_cube_matches_js_4_1():
    assert IntPoly([1, 2, 1]) * IntPoly([1, 1]) == IntPoly([1, 3, 3, 1])


def test_trailing_zeros_are_stripped():
    assert IntPoly([1, 2, 0, 0]) == IntPoly([1, 2])
    assert IntPoly([1, 2, 0]).degree == 1
    assert IntPoly([0, 0]).degree is None


def test_eval_examples():
    assert poly_eval(IntPoly([5, 3]), 1) == 8
    assert poly_eval(IntPoly([7, -2, 9]), 0) == 7
    assert poly_eval(IntPoly([21, 24, 7]), -1) == 4
    assert poly_eval(IntPoly([1, 2]), Fraction(1, 3)) == Fraction(5, 3)


@pytest.mark.parametrize("p, c, expected", [
    ([21, 24, 7], 1, [4, 10, 7]),
    ([147, 120, 25], 1, [52, 70, 25]),
    ([5, 3], 1, [2, 3]),
    ([3, 1, 4, 1, 5], 0, [3, 1, 4, 1, 5]),
])
def test_rebase_shift(p, c, expected):
    assert rebase_shift(IntPoly(p), c) == IntPoly(expected)


def test_str_rendering():
    assert str(IntPoly([21, 24, 7])) == "21 + 24z + 7z^2"
    assert str(IntPoly([-5, -3])) == "-5 - 3z"
    assert str(IntPoly()) == "0"


@given(polys, polys, polys)
def test_mul_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@given(polys, st.integers(-5, 5))
def test_rebase_roundtrip(p, c):
    assert rebase_shift(rebase_shift(p, c), -c) == p


@given(polys, st.integers(-4, 4), st.builds(Fraction, st.integers(-60, 60), st.integers(1, 7)))
def test_eval_agrees_with_rebased_form(p, c, x):
    q = rebase_shift(p, c)
    assert poly_eval(p, x) == sum(qi * (x + c) ** i for i, qi in enumerate(q.coeffs))


@given(polys)
def test_interpolation_recovers_polynomial(p):
    pts = list(range(1, len(p) + 2))
    assert interpolate(pts, [p(x) for x in pts]) == p


def test_interpolation_rejects_non_integer():
    with pytest.raises(ArithmeticError):
        interpolate([0, 1], [0, Fraction(1, 2)])


small_series = st.lists(
    st.lists(st.builds(Fraction, st.integers(-20, 20), st.integers(1, 5)), min_size=4, max_size=4),
    min_size=3, max_size=3,
).map(lambda rows: BiSeries(2, 3, rows))


@settings(max_examples=30)
@given(small_series, small_series, small_series)
def test_series_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


def test_compose_sinh_of_tx():
    inner = BiSeries.from_x_series([0, 1], 1, 7, 7)
    out = series_compose(sinh_coeffs(7), inner)
    sinh = sinh_coeffs(7)
    for j in range(8):
        for m in range(8):
            assert out.coeff(j, m) == (sinh[m] if j == m else 0)


# Reference coefficients of sinh(t*sinh(x)), from sympy's series expansion.
SINH_T_SINH = {(1, 1): Fraction(1), (1, 3): Fraction(1, 6), (3, 3): Fraction(1, 6),
               (1, 5): Fraction(1, 120), (3, 5): Fraction(1, 12), (5, 5): Fraction(1, 120)}


def test_compose_sinh_of_t_sinh():
    out = series_compose(sinh_coeffs(5), BiSeries.from_x_series(sinh_coeffs(5), 1, 5, 5))
    for j in range(6):
        for m in range(6):
            assert out.coeff(j, m) == SINH_T_SINH.get((j, m), 0)


def test_compose_against_sympy():
    sp = pytest.importorskip("sympy")
    t, x = sp.symbols("t x")
    ref = sp.expand(sp.series(sp.sinh(t * sp.sinh(x)), x, 0, 6).removeO())
    out = series_compose(sinh_coeffs(5), BiSeries.from_x_series(sinh_coeffs(5), 1, 5, 5))
    for j in range(6):
        for m in range(6):
            expected = sp.Rational(ref.coeff(x, m).coeff(t, j))
            assert out.coeff(j, m) == Fraction(int(expected.p), int(expected.q))


def test_compose_t_arcsin_first_order():
    out = series_compose(sinh_coeffs(9), BiSeries.from_x_series(arcsin_coeffs(9), 1, 1, 9))
    assert [out.coeff(1, m) for m in range(10)] == arcsin_coeffs(9)
    # ((2n-1)!!)^2 / (2n+1)! at n = 2
    assert out.coeff(1, 5) == Fraction(9, 120)


def test_arcsin_closed_form_against_sympy():
    sp = pytest.importorskip("sympy")
    x = sp.symbols("x")
    ref = sp.series(sp.asin(x), x, 0, 12).removeO()
    for m, c in enumerate(arcsin_coeffs(11)):
        r = sp.Rational(ref.coeff(x, m))
        assert c == Fraction(int(r.p), int(r.q))


def test_compose_rejects_constant_term():
    inner = BiSeries(2, 2, [[1, 1]])
    with pytest.raises(ValueError):
        series_compose(sinh_coeffs(2), inner)


def test_coeff_beyond_order():
    with pytest.raises(IndexError):
        BiSeries(2, 2).coeff(3, 0)


def test_orders_must_match():
    with pytest.raises(ValueError):
        BiSeries(2, 2) + BiSeries(2, 3)
